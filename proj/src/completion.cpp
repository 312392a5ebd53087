#include <sstream>
#include <stdexcept>

#include "r2m/completion.hpp"
#include "r2m/exact_linalg.hpp"

namespace r2m {

std::optional<std::vector<Rational>> feasible_in_topology(const XTree& t, const DissimilarityMap& prescribed) {
  if (prescribed.size() != t.leaf_count()) throw std::invalid_argument("feasible_in_topology: size mismatch");
  const std::vector<Edge> s = prescribed.domain();
  // One equation per observed pair: sum of weights along its path.
  RationalMatrix a(s.size(), t.edge_count());
  std::vector<Rational> rhs;
  for (std::size_t r = 0; r < s.size(); ++r) {
    for (auto e : t.path_edges(s[r].u, s[r].v)) a(r, e) = 1;
    rhs.push_back(prescribed.at(s[r].u, s[r].v));
  }
  std::vector<std::size_t> internal;
  for (std::size_t e = 0; e < t.edge_count(); ++e)
    if (t.is_internal_edge(e)) internal.push_back(e);
  return feasible_nonneg(a, rhs, internal);
}

WeightedXTree contract_zero_edges(const XTree& t, const std::vector<Rational>& weights) {
  RollbackUnionFind uf(t.vertex_count());
  for (std::size_t e = 0; e < t.edge_count(); ++e)
    if (t.is_internal_edge(e) && weights[e] == 0) uf.unite(t.edges()[e].first, t.edges()[e].second);

  const int n = t.leaf_count();
  std::vector<int> renamed(t.vertex_count(), -1);
  int next = n;
  auto name = [&](int v) {
    const int root = uf.find(v);
    if (t.is_leaf(v)) return v;
    if (renamed[root] < 0) renamed[root] = next++;
    return renamed[root];
  };
  std::vector<std::pair<int, int>> edges;
  std::vector<Rational> kept;
  for (std::size_t e = 0; e < t.edge_count(); ++e) {
    if (t.is_internal_edge(e) && weights[e] == 0) continue;
    edges.emplace_back(name(t.edges()[e].first), name(t.edges()[e].second));
    kept.push_back(weights[e]);
  }
  WeightedXTree out{XTree(n, std::move(edges)), std::move(kept)};
  out.validate();
  return out;
}

XTree caterpillar_for_order(const VertexOrder& order) {
  const XTree base = cat_tree(order.size());
  const int n = order.size();
  std::vector<std::pair<int, int>> edges;
  for (auto [a, b] : base.edges())
    edges.emplace_back(a < n ? order.sequence()[a] : a, b < n ? order.sequence()[b] : b);
  return XTree(n, std::move(edges));
}

namespace {

Completion finish(const XTree& t, const std::vector<Rational>& weights, Decision decision) {
  WeightedXTree tree = contract_zero_edges(t, weights);
  DissimilarityMap metric = tree_metric(tree);
  return Completion{std::move(tree), std::move(metric), 0, false, std::move(decision)};
}

}  // namespace

CompletionOutcome complete(const DissimilarityMap& prescribed, const CompleteOptions& options) {
  const int n = prescribed.size();
  if (n < 3) throw std::invalid_argument("complete: at least 3 taxa required");
  Decision decision = decide_tree_metric(n, prescribed.domain(), options.decide);
  if (!decision.independent) return NotIndependent{std::move(decision)};

  std::size_t tried = 0;
  if (n >= 4) {
    const XTree cat = caterpillar_for_order(*decision.certificate);
    ++tried;
    if (auto w = feasible_in_topology(cat, prescribed)) {
      Completion c = finish(cat, *w, std::move(decision));
      c.topologies_tried = tried;
      return c;
    }
  }
  if (n > options.cap)
    throw std::invalid_argument("complete: certificate caterpillar infeasible and n = " + std::to_string(n) +
                                " exceeds enumeration cap " + std::to_string(options.cap));

  const BinaryTreeCatalog& catalog = binary_tree_catalog(n);
  for (std::size_t k = 0; k < catalog.size(); ++k) {
    ++tried;
    if (auto w = feasible_in_topology(catalog.tree(k), prescribed)) {
      Completion c = finish(catalog.tree(k), *w, std::move(decision));
      c.topologies_tried = tried;
      c.used_fallback = n >= 4;
      return c;
    }
  }
  std::ostringstream msg;
  msg << "complete: no binary topology on " << n << " leaves realizes the values on an independent pattern {";
  for (const auto& e : prescribed.domain()) msg << " " << e.u + 1 << "-" << e.v + 1 << "=" << to_string(prescribed.at(e.u, e.v));
  msg << " }";
  throw std::logic_error(msg.str());
}

}  // namespace r2m
