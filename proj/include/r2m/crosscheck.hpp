#pragma once

#include <cstdint>
#include <vector>

#include <json.hpp>

#include "r2m/decision.hpp"

namespace r2m {

struct CrosscheckOptions {
  int n = 0;
  int m = 0;  // > 0 selects the rectangular model on an m x n grid
  bool exhaustive = true;
  std::uint64_t samples = 0;  // random mode only
  std::uint64_t seed = 0;
  int trials = 3;
  int cap = kDefaultEnumerationCap;
  DecideOptions decide;
};

struct CrosscheckReport {
  std::uint64_t checked = 0;
  std::uint64_t independent = 0;
  std::uint64_t disagreements = 0;
  std::uint64_t certificate_failures = 0;
  nlohmann::json examples = nlohmann::json::array();  // first few disagreements
};

// Skew model: orientation search, binary-tree enumeration and the mod-p
// Jacobian on every pattern. Rectangular model: decide_rect, the
// rectangular Jacobian, and both skew deciders after translate_rect. Every
// independent verdict's certificate is re-verified.
CrosscheckReport run_crosscheck(const CrosscheckOptions& options);

nlohmann::json to_json(const CrosscheckReport& r, const CrosscheckOptions& options);

}  // namespace r2m
