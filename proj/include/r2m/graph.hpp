#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace r2m {

// Unordered pair {u, v} with u < v. Vertices are 0-based internally; every
// file format and JSON document uses 1-based labels.
struct Edge {
  int u;
  int v;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Normalizes {a, b} to u < v. Throws std::invalid_argument on a loop.
Edge make_edge(int a, int b);

// The graph G(S) of an observation pattern S on vertex set [n].
class PatternGraph {
 public:
  // Throws std::invalid_argument on loops, duplicates or endpoints >= n.
  PatternGraph(int n, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }
  int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }

  // Vertex sets of the connected components, each sorted, ordered by
  // smallest member. Isolated vertices form singleton components.
  std::vector<std::vector<int>> components() const;

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
};

// A linear order of [n]: sequence()[k] is the vertex in position k. The
// induced orientation points every edge from the earlier vertex to the later.
class VertexOrder {
 public:
  // Throws std::invalid_argument unless `sequence` is a permutation of [n].
  explicit VertexOrder(std::vector<int> sequence);
  static VertexOrder identity(int n);

  int size() const { return static_cast<int>(sequence_.size()); }
  const std::vector<int>& sequence() const { return sequence_; }
  int position(int v) const { return position_[v]; }

  friend bool operator==(const VertexOrder& a, const VertexOrder& b) { return a.sequence_ == b.sequence_; }

 private:
  std::vector<int> sequence_;
  std::vector<int> position_;
};

struct Arc {
  int tail;
  int head;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

struct OrientedGraph {
  int n = 0;
  std::vector<Arc> arcs;
};

// Bipartite transform of a digraph: vertex u has an out-copy with id u and
// an in-copy with id n + u; arc u -> v becomes the edge {u, n + v}.
struct TrailGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  int node_count() const { return 2 * n; }
  static int out_copy(int v) { return v; }
  int in_copy(int v) const { return n + v; }
};

OrientedGraph orient(const PatternGraph& g, const VertexOrder& order);
TrailGraph trail_graph(const OrientedGraph& d);

// True iff the undirected graph on `node_count` nodes is not a forest.
bool has_closed_trail(int node_count, const std::vector<std::pair<int, int>>& edges);

bool has_alternating_closed_trail(const OrientedGraph& d);

struct SearchOptions {
  bool parallel = false;
};

struct SearchResult {
  std::optional<VertexOrder> order;  // present iff a trail-free orientation exists
  std::uint64_t nodes_explored = 0;
};

// Backtracking over vertex placements with an undoable union-find on the
// trail graph. Components are searched independently and their orders are
// concatenated in order of smallest vertex.
SearchResult search_trail_free_order(const PatternGraph& g, const SearchOptions& options = {});

// (2,3)-sparsity: every subgraph on k >= 2 vertices spans at most 2k - 3
// edges. Decided by the (2,3)-pebble game.
bool laman_sparse(const PatternGraph& g);

// Union-find with union by size and no path compression, so unions can be
// undone in LIFO order.
class RollbackUnionFind {
 public:
  explicit RollbackUnionFind(int n);

  int find(int x) const;
  // Returns false (and records nothing) if a and b are already joined.
  bool unite(int a, int b);
  std::size_t checkpoint() const { return history_.size(); }
  void rollback(std::size_t checkpoint);

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  std::vector<int> history_;  // roots that were attached below another root
};

}  // namespace r2m
