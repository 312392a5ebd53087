#include <random>
#include <stdexcept>

#include "r2m/algebraic_oracle.hpp"
#include "r2m/crosscheck.hpp"

namespace r2m {

namespace {

constexpr std::size_t kMaxExamples = 10;

std::vector<Cell> all_cells(int m, int n) {
  std::vector<Cell> cells;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) cells.push_back({i, j});
  return cells;
}

template <typename T>
std::vector<T> subset(const std::vector<T>& ground, std::uint64_t mask) {
  std::vector<T> out;
  for (std::size_t k = 0; k < ground.size(); ++k)
    if ((mask >> k) & 1) out.push_back(ground[k]);
  return out;
}

void record(CrosscheckReport& report, nlohmann::json verdicts, nlohmann::json pattern) {
  ++report.disagreements;
  if (report.examples.size() < kMaxExamples) report.examples.push_back({{"edges", pattern}, {"verdicts", verdicts}});
}

void check_skew(CrosscheckReport& report, const CrosscheckOptions& o, const std::vector<Edge>& s,
                std::uint64_t oracle_seed) {
  const Decision d = decide_skew(o.n, s, o.decide);
  const bool by_trees = tree_enum_oracle(o.n, s, o.cap);
  const bool by_jacobian = oracle_decide_skew(o.n, s, o.trials, oracle_seed).independent;
  ++report.checked;
  report.independent += d.independent ? 1 : 0;
  if (d.independent && !verify_certificate(o.n, s, *d.certificate)) ++report.certificate_failures;
  if (d.independent != by_trees || d.independent != by_jacobian) {
    nlohmann::json pattern = nlohmann::json::array();
    for (const auto& e : s) pattern.push_back({e.u + 1, e.v + 1});
    record(report, {{"search", d.independent}, {"tree_enumeration", by_trees}, {"jacobian", by_jacobian}},
           std::move(pattern));
  }
}

void check_rect(CrosscheckReport& report, const CrosscheckOptions& o, const std::vector<Cell>& cells,
                std::uint64_t oracle_seed) {
  const Decision d = decide_rect(o.m, o.n, cells, o.decide);
  const bool by_jacobian = oracle_decide_rect(o.m, o.n, cells, o.trials, oracle_seed).independent;
  const std::vector<Edge> pairs = translate_rect(o.m, o.n, cells);
  const bool by_skew = decide_skew(o.m + o.n, pairs, o.decide).independent;
  const bool by_trees = tree_enum_oracle(o.m + o.n, pairs, o.cap);
  ++report.checked;
  report.independent += d.independent ? 1 : 0;
  if (d.independent && !verify_certificate(o.m + o.n, pairs, *d.certificate)) ++report.certificate_failures;
  if (d.independent != by_jacobian || d.independent != by_skew || d.independent != by_trees) {
    nlohmann::json pattern = nlohmann::json::array();
    for (const auto& c : cells) pattern.push_back({c.row + 1, c.col + 1});
    record(report,
           {{"decide_rect", d.independent},
            {"jacobian_rect", by_jacobian},
            {"decide_skew_translated", by_skew},
            {"tree_enumeration_translated", by_trees}},
           std::move(pattern));
  }
}

}  // namespace

CrosscheckReport run_crosscheck(const CrosscheckOptions& o) {
  const bool rect = o.m > 0;
  const std::size_t ground_size =
      rect ? static_cast<std::size_t>(o.m) * o.n : static_cast<std::size_t>(o.n) * (o.n - 1) / 2;
  if (!rect && o.n < 3) throw std::invalid_argument("crosscheck: n must be at least 3");
  if (ground_size > 63) throw std::invalid_argument("crosscheck: ground set too large");
  if (o.exhaustive && ground_size > 24) throw std::invalid_argument("crosscheck: exhaustive mode limited to 24 entries");

  const std::vector<Edge> pairs = all_pairs(o.n);
  const std::vector<Cell> cells = rect ? all_cells(o.m, o.n) : std::vector<Cell>{};
  CrosscheckReport report;
  auto check_mask = [&](std::uint64_t mask, std::uint64_t index) {
    const std::uint64_t oracle_seed = o.seed * 0x9E3779B97F4A7C15ULL + index;
    if (rect)
      check_rect(report, o, subset(cells, mask), oracle_seed);
    else
      check_skew(report, o, subset(pairs, mask), oracle_seed);
  };

  if (o.exhaustive) {
    const std::uint64_t total = std::uint64_t{1} << ground_size;
    for (std::uint64_t mask = 0; mask < total; ++mask) check_mask(mask, mask);
  } else {
    std::mt19937_64 rng(o.seed);
    const std::uint64_t keep = ground_size == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << ground_size) - 1;
    for (std::uint64_t k = 0; k < o.samples; ++k) check_mask(rng() & keep, k);
  }
  return report;
}

nlohmann::json to_json(const CrosscheckReport& r, const CrosscheckOptions& o) {
  nlohmann::json out;
  out["model"] = o.m > 0 ? "rect" : "skew";
  out["ambient"] = o.m > 0 ? nlohmann::json{{"m", o.m}, {"n", o.n}} : nlohmann::json{{"n", o.n}};
  out["mode"] = o.exhaustive ? "exhaustive" : "random";
  if (!o.exhaustive) out["samples"] = o.samples;
  out["seed"] = o.seed;
  out["trials"] = o.trials;
  out["checked"] = r.checked;
  out["independent"] = r.independent;
  out["dependent"] = r.checked - r.independent;
  out["disagreements"] = r.disagreements;
  out["certificate_failures"] = r.certificate_failures;
  out["examples"] = r.examples;
  return out;
}

}  // namespace r2m
