#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "r2m/decision.hpp"
#include "r2m/exact_linalg.hpp"
#include "test_support.hpp"

using namespace r2m;
using namespace r2m::test;

namespace {

std::size_t max_rank_over_trees(int n, const std::vector<Edge>& s) {
  std::vector<std::size_t> cols;
  for (const auto& e : s) cols.push_back(DissimilarityMap::pair_index(n, e.u, e.v));
  std::size_t best = 0;
  for (const auto& t : enumerate_binary_trees(n)) best = std::max(best, rank(path_matrix(t).select_columns(cols)));
  return best;
}

// Independence indicator over all subsets of the n-vertex pair set.
std::vector<char> independence_table(int n) {
  const auto pairs = all_pairs(n);
  std::vector<char> table(std::size_t{1} << pairs.size());
  for (std::uint64_t mask = 0; mask < table.size(); ++mask)
    table[mask] = decide_skew(n, subset(pairs, mask)).independent;
  return table;
}

}  // namespace

TEST_CASE("model names") {
  CHECK(parse_model("skew") == Model::Skew);
  CHECK(parse_model("rect") == Model::Rect);
  CHECK(parse_model("tree") == Model::TreeMetric);
  CHECK(to_string(Model::TreeMetric) == "tree");
  CHECK_THROWS_AS(parse_model("square"), std::invalid_argument);
}

TEST_CASE("decide_skew examples") {
  const Decision k = decide_skew(6, k33());
  CHECK_FALSE(k.independent);
  CHECK_FALSE(k.certificate);
  CHECK(k.prefilter == true);  // K33 passes the sparsity count and fails the search

  const Decision full = decide_skew(4, all_pairs(4));
  CHECK_FALSE(full.independent);
  CHECK(full.prefilter == false);

  const auto five = pairs1({{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
  const Decision d = decide_skew(4, five);
  CHECK(d.independent);
  REQUIRE(d.certificate);
  CHECK(verify_certificate(4, five, *d.certificate));
  CHECK(tree_enum_oracle(4, five));

  CHECK_THROWS_AS(decide_skew(4, pairs1({{1, 2}, {1, 2}})), std::invalid_argument);
  CHECK_THROWS_AS(decide_skew(4, pairs1({{1, 5}})), std::invalid_argument);
}

TEST_CASE("prefilter off explores the search and reaches the same verdict") {
  DecideOptions off;
  off.prefilter = false;
  const Decision d = decide_skew(4, all_pairs(4), off);
  CHECK_FALSE(d.independent);
  CHECK_FALSE(d.prefilter);
  CHECK(d.stats.nodes_explored > 0);
}

TEST_CASE("decide_tree_metric examples and agreement with decide_skew") {
  CHECK(decide_tree_metric(4, pairs1({{1, 2}, {3, 4}})).independent);
  CHECK(decide_tree_metric(3, all_pairs(3)).independent);
  CHECK(decide_tree_metric(3, all_pairs(3)).model == Model::TreeMetric);
  for (int n = 2; n <= 5; ++n) {
    const auto pairs = all_pairs(n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
      const auto s = subset(pairs, mask);
      const Decision a = decide_skew(n, s), b = decide_tree_metric(n, s);
      CHECK(a.independent == b.independent);
      CHECK(a.certificate == b.certificate);
    }
  }
}

TEST_CASE("translate_rect examples") {
  const auto all = translate_rect(3, 3, cells1({{1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {3, 3}}));
  std::vector<Edge> sorted = all, expected = k33();
  std::sort(sorted.begin(), sorted.end());
  std::sort(expected.begin(), expected.end());
  CHECK(sorted == expected);

  CHECK(translate_rect(2, 5, {}).empty());
  CHECK(translate_rect(2, 2, cells1({{1, 1}, {2, 2}})) == pairs1({{3, 1}, {4, 2}}));
  CHECK_THROWS_AS(translate_rect(2, 2, cells1({{3, 1}})), std::invalid_argument);
  CHECK_THROWS_AS(translate_rect(2, 2, cells1({{1, 3}})), std::invalid_argument);
  CHECK_THROWS_AS(translate_rect(2, 2, cells1({{1, 1}, {1, 1}})), std::invalid_argument);
}

TEST_CASE("decide_rect examples") {
  std::vector<Cell> all;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) all.push_back({i, j});
  const Decision full = decide_rect(3, 3, all);
  CHECK_FALSE(full.independent);
  CHECK(full.model == Model::Rect);

  for (std::size_t drop = 0; drop < all.size(); ++drop) {
    std::vector<Cell> eight = all;
    eight.erase(eight.begin() + static_cast<long>(drop));
    const Decision d = decide_rect(3, 3, eight);
    CHECK(d.independent);
    REQUIRE(d.certificate);
    CHECK(verify_certificate(6, translate_rect(3, 3, eight), *d.certificate));
  }

  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n)
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) CHECK(decide_rect(m, n, {{i, j}}).independent);
}

TEST_CASE("decide_rect agrees with deciding the translated pattern") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const int m = 2 + static_cast<int>(rng() % 3), n = 2 + static_cast<int>(rng() % 3);
    std::vector<Cell> cells;
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j)
        if (rng() % 2) cells.push_back({i, j});
    CHECK(decide_rect(m, n, cells).independent == decide_skew(m + n, translate_rect(m, n, cells)).independent);
  }
}

TEST_CASE("verify_certificate examples") {
  CHECK(verify_certificate(3, pairs1({{1, 2}, {1, 3}, {2, 3}}), VertexOrder::identity(3)));
  const auto k = k33();
  int accepted = 0;
  for_each_permutation(6, [&](const std::vector<int>& p) { accepted += verify_certificate(6, k, VertexOrder(p)); });
  CHECK(accepted == 0);
  CHECK_THROWS_AS(verify_certificate(4, k33(), VertexOrder::identity(4)), std::invalid_argument);
}

TEST_CASE("every independent decision carries a valid certificate") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 7);
    const auto s = random_pairs(n, rng, 0.35);
    const Decision d = decide_skew(n, s);
    CHECK(d.certificate.has_value() == d.independent);
    if (d.certificate) CHECK(verify_certificate(n, s, *d.certificate));
  }
}

TEST_CASE("matroid_rank examples") {
  CHECK(matroid_rank(4, all_pairs(4)) == 5);
  CHECK(matroid_rank(6, {}) == 0);
  CHECK(matroid_rank(6, k33()) == 8);
  CHECK(max_rank_over_trees(6, k33()) == 8);
  for (int n = 3; n <= 8; ++n) CHECK(matroid_rank(n, all_pairs(n)) == static_cast<std::size_t>(2 * n - 3));
  CHECK_THROWS_AS(matroid_rank(9, {}), std::invalid_argument);
  CHECK(matroid_rank_rect(3, 3, cells1({{1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {3, 3}})) == 8);
}

TEST_CASE("matroid_rank matches max rational rank over trees and the independence verdict") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 4 + trial % 3;
    const auto s = random_pairs(n, rng, 0.5);
    const std::size_t r = matroid_rank(n, s);
    CHECK(r == max_rank_over_trees(n, s));
    CHECK((r == s.size()) == decide_skew(n, s).independent);
  }
}

TEST_CASE("matroid axioms hold on the verdicts (n = 4, 5)") {
  for (int n = 4; n <= 5; ++n) {
    const std::size_t p = all_pairs(n).size();
    const auto indep = independence_table(n);
    CHECK(indep[0]);
    // Downward closure: dropping any element keeps independence.
    for (std::uint64_t a = 0; a < indep.size(); ++a) {
      if (!indep[a]) continue;
      for (std::size_t k = 0; k < p; ++k)
        if ((a >> k) & 1) CHECK(indep[a & ~(std::uint64_t{1} << k)]);
    }
    // Exchange: |A| < |B| independent implies A + x independent for some x in B \ A.
    std::vector<std::uint64_t> sets;
    for (std::uint64_t a = 0; a < indep.size(); ++a)
      if (indep[a]) sets.push_back(a);
    std::size_t failures = 0;
    for (std::uint64_t a : sets)
      for (std::uint64_t b : sets) {
        if (__builtin_popcountll(a) >= __builtin_popcountll(b)) continue;
        bool ok = false;
        for (std::uint64_t rest = b & ~a; rest && !ok; rest &= rest - 1) ok = indep[a | (rest & -rest)];
        failures += !ok;
      }
    CHECK(failures == 0);
  }
}

TEST_CASE("verdicts are invariant under relabeling") {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 4);
    const auto s = random_pairs(n, rng, 0.45);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(decide_skew(n, s).independent == decide_skew(n, relabel(s, perm)).independent);
  }
  // All 720 relabelings of K33 stay dependent.
  const auto k = k33();
  int independent = 0;
  for_each_permutation(6, [&](const std::vector<int>& p) { independent += decide_skew(6, relabel(k, p)).independent; });
  CHECK(independent == 0);
}

TEST_CASE("independent patterns are (2,3)-sparse (n <= 5)") {
  for (int n = 2; n <= 5; ++n) {
    const auto pairs = all_pairs(n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
      const auto s = subset(pairs, mask);
      if (decide_skew(n, s).independent) CHECK(laman_sparse(PatternGraph(n, s)));
    }
  }
}

TEST_CASE("decision JSON") {
  const Decision d = decide_skew(3, pairs1({{1, 2}, {2, 3}}));
  const auto j = to_json(d);
  for (const char* key : {"model", "ambient", "edges", "independent", "certificate", "prefilter", "stats"})
    CHECK(j.contains(key));
  CHECK(j["model"] == "skew");
  CHECK(j["ambient"]["n"] == 3);
  CHECK(j["edges"] == nlohmann::json::parse("[[1,2],[2,3]]"));
  CHECK(j["independent"] == true);
  CHECK(j["certificate"].size() == 3);
  CHECK(j["stats"]["time_ms"].is_null());
  CHECK(j["stats"].contains("nodes_explored"));

  const auto r = to_json(decide_rect(2, 2, cells1({{1, 1}, {2, 2}})));
  CHECK(r["model"] == "rect");
  CHECK(r["ambient"]["m"] == 2);
  CHECK(r.contains("vertex_convention"));
  CHECK(r["edges"] == nlohmann::json::parse("[[1,1],[2,2]]"));

  const auto k = to_json(decide_skew(6, k33()));
  CHECK(k["certificate"].is_null());

  DecideOptions timed;
  timed.timing = true;
  CHECK(to_json(decide_skew(3, {}, timed))["stats"]["time_ms"].is_number());
}
