#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "r2m/graph.hpp"
#include "test_support.hpp"

using namespace r2m;
using namespace r2m::test;

namespace {

// Direct search for an alternating closed trail: an edge-distinct closed
// walk along which both walk edges at every vertex (including the start)
// point into it or both point out of it.
class AlternatingTrailBruteForce {
 public:
  explicit AlternatingTrailBruteForce(const OrientedGraph& d) : d_(d), used_(d.arcs.size(), 0) {}

  bool exists() {
    for (std::size_t e = 0; e < d_.arcs.size(); ++e)
      for (bool forward : {true, false}) {
        used_[e] = 1;
        const int start = forward ? d_.arcs[e].tail : d_.arcs[e].head;
        const int at = forward ? d_.arcs[e].head : d_.arcs[e].tail;
        // Arriving forward means the arc points into `at`.
        const bool into_start = !forward;  // first arc's direction seen from start
        if (walk(start, into_start, at, forward)) return true;
        used_[e] = 0;
      }
    return false;
  }

 private:
  // `arrived_into`: the last arc points into `at`.
  bool walk(int start, bool start_into, int at, bool arrived_into) {
    for (std::size_t e = 0; e < d_.arcs.size(); ++e) {
      if (used_[e]) continue;
      const Arc& a = d_.arcs[e];
      if (a.tail != at && a.head != at) continue;
      const bool leaves_into = a.head == at;  // this arc points into `at`
      if (leaves_into != arrived_into) continue;
      const int next = a.head == at ? a.tail : a.head;
      const bool arrives_into_next = a.head == next;
      used_[e] = 1;
      if (next == start && arrives_into_next == start_into) return true;
      if (walk(start, start_into, next, arrives_into_next)) return true;
      used_[e] = 0;
    }
    return false;
  }

  const OrientedGraph& d_;
  std::vector<char> used_;
};

bool sparse_brute_force(int n, const std::vector<Edge>& edges) {
  for (std::uint32_t vs = 0; vs < (1u << n); ++vs) {
    const int k = __builtin_popcount(vs);
    if (k < 2) continue;
    int spanned = 0;
    for (const auto& e : edges) spanned += ((vs >> e.u) & 1) && ((vs >> e.v) & 1);
    if (spanned > 2 * k - 3) return false;
  }
  return true;
}

bool some_order_trail_free(const PatternGraph& g) {
  bool found = false;
  for_each_permutation(g.vertex_count(), [&](const std::vector<int>& p) {
    if (!found && !has_alternating_closed_trail(orient(g, VertexOrder(p)))) found = true;
  });
  return found;
}

bool is_acyclic(const OrientedGraph& d) {
  std::vector<int> indeg(d.n, 0);
  std::vector<std::vector<int>> out(d.n);
  for (const auto& a : d.arcs) {
    ++indeg[a.head];
    out[a.tail].push_back(a.head);
  }
  std::vector<int> ready;
  for (int v = 0; v < d.n; ++v)
    if (indeg[v] == 0) ready.push_back(v);
  int seen = 0;
  while (!ready.empty()) {
    const int v = ready.back();
    ready.pop_back();
    ++seen;
    for (int w : out[v])
      if (--indeg[w] == 0) ready.push_back(w);
  }
  return seen == d.n;
}

std::vector<Arc> arcs1(std::initializer_list<std::pair<int, int>> list) {
  std::vector<Arc> out;
  for (auto [a, b] : list) out.push_back({a - 1, b - 1});
  return out;
}

}  // namespace

TEST_CASE("PatternGraph rejects loops, duplicates and out-of-range endpoints") {
  CHECK_THROWS_AS(PatternGraph(3, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(PatternGraph(3, pairs1({{1, 2}, {2, 1}})), std::invalid_argument);
  CHECK_THROWS_AS(PatternGraph(3, pairs1({{1, 4}})), std::invalid_argument);
  CHECK_THROWS_AS(make_edge(2, 2), std::invalid_argument);
  CHECK_NOTHROW(PatternGraph(3, pairs1({{2, 1}})));
}

TEST_CASE("VertexOrder must be a permutation") {
  CHECK_THROWS_AS(VertexOrder({0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(VertexOrder({0, 3}), std::invalid_argument);
  const VertexOrder o = order1({2, 3, 1});
  CHECK(o.position(1) == 0);
  CHECK(o.position(0) == 2);
}

TEST_CASE("orient examples") {
  const PatternGraph triangle(3, pairs1({{1, 2}, {1, 3}, {2, 3}}));
  CHECK(orient(triangle, VertexOrder::identity(3)).arcs == arcs1({{1, 2}, {1, 3}, {2, 3}}));
  CHECK(orient(triangle, order1({3, 2, 1})).arcs == arcs1({{2, 1}, {3, 1}, {3, 2}}));
  const PatternGraph path(3, pairs1({{1, 2}, {2, 3}}));
  CHECK(orient(path, order1({2, 1, 3})).arcs == arcs1({{2, 1}, {2, 3}}));
}

TEST_CASE("trail_graph examples") {
  const TrailGraph single = trail_graph({2, arcs1({{1, 2}})});
  REQUIRE(single.edges.size() == 1);
  CHECK(single.edges[0] == std::pair{0, single.in_copy(1)});

  const TrailGraph tri = trail_graph({3, arcs1({{1, 2}, {1, 3}, {2, 3}})});
  CHECK(tri.edges.size() == 3);
  CHECK_FALSE(has_closed_trail(tri.node_count(), tri.edges));

  // a->b, c->b, c->d, a->d with a, b, c, d = 1, 2, 3, 4.
  const TrailGraph alt = trail_graph({4, arcs1({{1, 2}, {3, 2}, {3, 4}, {1, 4}})});
  CHECK(alt.edges.size() == 4);
  CHECK(has_closed_trail(alt.node_count(), alt.edges));
}

TEST_CASE("has_closed_trail examples") {
  CHECK_FALSE(has_closed_trail(0, {}));
  CHECK(has_closed_trail(3, {{0, 1}, {1, 2}, {0, 2}}));
  CHECK_FALSE(has_closed_trail(5, {{0, 1}, {1, 2}, {1, 3}, {3, 4}}));
}

TEST_CASE("has_alternating_closed_trail examples") {
  CHECK(has_alternating_closed_trail({4, arcs1({{1, 2}, {3, 2}, {3, 4}, {1, 4}})}));
  // Directed 4-cycle is not alternating.
  CHECK_FALSE(has_alternating_closed_trail({4, arcs1({{1, 2}, {2, 3}, {3, 4}, {1, 4}})}));

  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 50; ++trial) {
    // Random forest: each vertex v > 0 attaches to a random earlier vertex.
    const int n = 8;
    std::vector<Edge> forest;
    for (int v = 1; v < n; ++v)
      if (rng() % 4) forest.push_back(make_edge(v, static_cast<int>(rng() % v)));
    const PatternGraph g(n, forest);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK_FALSE(has_alternating_closed_trail(orient(g, VertexOrder(perm))));
  }

  const PatternGraph k(6, k33());
  int without = 0;
  for_each_permutation(6, [&](const std::vector<int>& p) {
    without += has_alternating_closed_trail(orient(k, VertexOrder(p))) ? 0 : 1;
  });
  CHECK(without == 0);
}

TEST_CASE("trail-graph cycles coincide with directly enumerated alternating closed trails") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 4);
    const PatternGraph g(n, random_pairs(n, rng, 0.45));
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const OrientedGraph d = orient(g, VertexOrder(perm));
    CHECK(has_alternating_closed_trail(d) == AlternatingTrailBruteForce(d).exists());
  }
}

TEST_CASE("orient is acyclic and the verdict reads only the orientation") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 5;
    const PatternGraph g(n, random_pairs(n, rng));
    std::map<std::vector<Arc>, bool> by_orientation;
    for_each_permutation(n, [&](const std::vector<int>& p) {
      const OrientedGraph d = orient(g, VertexOrder(p));
      CHECK(is_acyclic(d));
      const bool alt = has_alternating_closed_trail(d);
      auto [it, fresh] = by_orientation.emplace(d.arcs, alt);
      if (!fresh) CHECK(it->second == alt);
    });
  }
}

TEST_CASE("search_trail_free_order examples") {
  SUBCASE("triangle: identity order") {
    const auto r = search_trail_free_order(PatternGraph(3, pairs1({{1, 2}, {1, 3}, {2, 3}})));
    REQUIRE(r.order);
    CHECK(*r.order == VertexOrder::identity(3));
  }
  SUBCASE("K33: none") { CHECK_FALSE(search_trail_free_order(PatternGraph(6, k33())).order); }
  SUBCASE("empty edge set: identity") {
    for (int n : {0, 1, 4, 9}) {
      const auto r = search_trail_free_order(PatternGraph(n, {}));
      REQUIRE(r.order);
      CHECK(*r.order == VertexOrder::identity(n));
    }
  }
}

TEST_CASE("search agrees with trying every vertex order (n <= 6)") {
  std::mt19937_64 rng(6);
  for (int n = 2; n <= 5; ++n) {
    const auto pairs = all_pairs(n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
      const PatternGraph g(n, subset(pairs, mask));
      const auto r = search_trail_free_order(g);
      CHECK(r.order.has_value() == some_order_trail_free(g));
      if (r.order) CHECK_FALSE(has_alternating_closed_trail(orient(g, *r.order)));
    }
  }
  for (int trial = 0; trial < 150; ++trial) {
    const PatternGraph g(6, random_pairs(6, rng, 0.6));
    CHECK(search_trail_free_order(g).order.has_value() == some_order_trail_free(g));
  }
}

TEST_CASE("search decomposes over components and is monotone under deletion") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 8;
    const PatternGraph g(n, random_pairs(n, rng, 0.3));
    const bool whole = search_trail_free_order(g).order.has_value();
    bool every_component = true;
    for (const auto& comp : g.components()) {
      std::vector<Edge> inside;
      for (const auto& e : g.edges())
        if (std::binary_search(comp.begin(), comp.end(), e.u)) inside.push_back(e);
      every_component = every_component && search_trail_free_order(PatternGraph(n, inside)).order.has_value();
    }
    CHECK(whole == every_component);

    if (whole) {
      for (int k = 0; k < 5; ++k) {
        std::vector<Edge> fewer;
        for (const auto& e : g.edges())
          if (rng() % 3) fewer.push_back(e);
        CHECK(search_trail_free_order(PatternGraph(n, fewer)).order.has_value());
      }
    }
  }
}

TEST_CASE("parallel search returns the sequential answer") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const PatternGraph g(7, random_pairs(7, rng, 0.45));
    const auto seq = search_trail_free_order(g);
    const auto par = search_trail_free_order(g, {.parallel = true});
    REQUIRE(seq.order.has_value() == par.order.has_value());
    if (seq.order) CHECK(*seq.order == *par.order);
  }
}

TEST_CASE("laman_sparse examples") {
  CHECK_FALSE(laman_sparse(PatternGraph(4, all_pairs(4))));
  CHECK(laman_sparse(PatternGraph(6, k33())));
  CHECK(laman_sparse(PatternGraph(7, pairs1({{1, 2}, {2, 3}, {2, 4}, {5, 6}}))));
  CHECK(laman_sparse(PatternGraph(5, {})));
}

TEST_CASE("pebble game agrees with subgraph counting") {
  for (int n = 2; n <= 5; ++n) {
    const auto pairs = all_pairs(n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
      const auto s = subset(pairs, mask);
      CHECK(laman_sparse(PatternGraph(n, s)) == sparse_brute_force(n, s));
    }
  }
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = 6 + static_cast<int>(rng() % 3);
    auto s = random_pairs(n, rng, 0.35);
    std::shuffle(s.begin(), s.end(), rng);
    CHECK(laman_sparse(PatternGraph(n, s)) == sparse_brute_force(n, s));
  }
}

TEST_CASE("search success implies (2,3)-sparsity; K33 shows the converse fails") {
  for (int n = 2; n <= 5; ++n) {
    const auto pairs = all_pairs(n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
      const PatternGraph g(n, subset(pairs, mask));
      if (search_trail_free_order(g).order) CHECK(laman_sparse(g));
    }
  }
  const PatternGraph k(6, k33());
  CHECK(laman_sparse(k));
  CHECK_FALSE(search_trail_free_order(k).order);
}

TEST_CASE("RollbackUnionFind undoes unions in LIFO order") {
  RollbackUnionFind uf(5);
  uf.unite(0, 1);
  const auto cp = uf.checkpoint();
  uf.unite(1, 2);
  uf.unite(3, 4);
  CHECK(uf.find(0) == uf.find(2));
  CHECK_FALSE(uf.unite(0, 2));
  uf.rollback(cp);
  CHECK(uf.find(0) == uf.find(1));
  CHECK(uf.find(0) != uf.find(2));
  CHECK(uf.find(3) != uf.find(4));
}
