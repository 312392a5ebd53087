#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "r2m/graph.hpp"

namespace r2m {

Edge make_edge(int a, int b) {
  if (a == b) throw std::invalid_argument("loop at vertex " + std::to_string(a + 1));
  return a < b ? Edge{a, b} : Edge{b, a};
}

PatternGraph::PatternGraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)), adjacency_(n) {
  if (n < 0) throw std::invalid_argument("PatternGraph: negative vertex count");
  std::set<Edge> seen;
  for (auto& e : edges_) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
      throw std::invalid_argument("edge {" + std::to_string(e.u + 1) + "," + std::to_string(e.v + 1) +
                                  "} out of range for n = " + std::to_string(n));
    e = make_edge(e.u, e.v);
    if (!seen.insert(e).second)
      throw std::invalid_argument("duplicate edge {" + std::to_string(e.u + 1) + "," + std::to_string(e.v + 1) + "}");
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());
}

std::vector<std::vector<int>> PatternGraph::components() const {
  std::vector<int> comp(n_, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n_; ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<int> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      out[id].push_back(v);
      for (int w : adjacency_[v])
        if (comp[w] < 0) {
          comp[w] = id;
          stack.push_back(w);
        }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

VertexOrder::VertexOrder(std::vector<int> sequence) : sequence_(std::move(sequence)), position_(sequence_.size(), -1) {
  const int n = static_cast<int>(sequence_.size());
  for (int k = 0; k < n; ++k) {
    const int v = sequence_[k];
    if (v < 0 || v >= n || position_[v] >= 0) throw std::invalid_argument("vertex order is not a permutation of [n]");
    position_[v] = k;
  }
}

VertexOrder VertexOrder::identity(int n) {
  std::vector<int> seq(n);
  std::iota(seq.begin(), seq.end(), 0);
  return VertexOrder(std::move(seq));
}

OrientedGraph orient(const PatternGraph& g, const VertexOrder& order) {
  if (order.size() != g.vertex_count()) throw std::invalid_argument("orient: order size differs from vertex count");
  OrientedGraph d{g.vertex_count(), {}};
  d.arcs.reserve(g.edges().size());
  for (const auto& e : g.edges()) {
    if (order.position(e.u) < order.position(e.v))
      d.arcs.push_back({e.u, e.v});
    else
      d.arcs.push_back({e.v, e.u});
  }
  return d;
}

TrailGraph trail_graph(const OrientedGraph& d) {
  TrailGraph t{d.n, {}};
  t.edges.reserve(d.arcs.size());
  for (const auto& a : d.arcs) t.edges.emplace_back(TrailGraph::out_copy(a.tail), t.in_copy(a.head));
  return t;
}

bool has_closed_trail(int node_count, const std::vector<std::pair<int, int>>& edges) {
  RollbackUnionFind uf(node_count);
  for (const auto& [a, b] : edges)
    if (!uf.unite(a, b)) return true;
  return false;
}

bool has_alternating_closed_trail(const OrientedGraph& d) {
  const TrailGraph t = trail_graph(d);
  return has_closed_trail(t.node_count(), t.edges);
}

RollbackUnionFind::RollbackUnionFind(int n) : parent_(n), size_(n, 1) { std::iota(parent_.begin(), parent_.end(), 0); }

int RollbackUnionFind::find(int x) const {
  while (parent_[x] != x) x = parent_[x];
  return x;
}

bool RollbackUnionFind::unite(int a, int b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (size_[a] < size_[b]) std::swap(a, b);
  parent_[b] = a;
  size_[a] += size_[b];
  history_.push_back(b);
  return true;
}

void RollbackUnionFind::rollback(std::size_t checkpoint) {
  while (history_.size() > checkpoint) {
    const int b = history_.back();
    history_.pop_back();
    const int a = parent_[b];
    size_[a] -= size_[b];
    parent_[b] = b;
  }
}

}  // namespace r2m
