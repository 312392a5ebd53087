#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "r2m/decision.hpp"
#include "r2m/tree_space.hpp"

namespace r2m {

// Edge weights on t, internal entries >= 0, whose path sums reproduce the
// prescribed values on S; nullopt if the closed cone of t cannot.
std::optional<std::vector<Rational>> feasible_in_topology(const XTree& t, const DissimilarityMap& prescribed);

// Merges the endpoints of every internal edge of weight zero.
WeightedXTree contract_zero_edges(const XTree& t, const std::vector<Rational>& weights);

// Caterpillar whose spine lists the vertices of `order` earliest first.
XTree caterpillar_for_order(const VertexOrder& order);

struct Completion {
  WeightedXTree tree;
  DissimilarityMap metric;
  std::size_t topologies_tried = 0;
  bool used_fallback = false;  // the certificate caterpillar was infeasible
  Decision decision;
};

struct NotIndependent {
  Decision decision;
};

using CompletionOutcome = std::variant<Completion, NotIndependent>;

struct CompleteOptions {
  DecideOptions decide;
  int cap = kDefaultEnumerationCap;  // largest n for the fallback enumeration
};

// Extends the values on the domain of `prescribed` to a tree metric. The
// certificate caterpillar is tried first, then every binary topology.
// Throws std::invalid_argument if the fallback would exceed the cap, and
// std::logic_error if no topology is feasible for an independent S.
CompletionOutcome complete(const DissimilarityMap& prescribed, const CompleteOptions& options = {});

}  // namespace r2m
