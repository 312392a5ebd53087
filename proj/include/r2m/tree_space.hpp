#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "r2m/graph.hpp"
#include "r2m/matrix.hpp"
#include "r2m/rational.hpp"

namespace r2m {

// Leaf-labelled tree without degree-2 vertices. Leaves are vertices
// 0..n-1 (label i + 1 in output); internal vertices are n, n+1, ....
// Edge order is part of the value: it fixes the row order of path_matrix.
class XTree {
 public:
  // Throws std::invalid_argument if the edge list is not such a tree.
  XTree(int leaf_count, std::vector<std::pair<int, int>> edges);

  int leaf_count() const { return n_; }
  int vertex_count() const { return static_cast<int>(adjacency_.size()); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }
  bool is_leaf(int v) const { return v < n_; }
  bool is_internal_edge(std::size_t e) const { return !is_leaf(edges_[e].first) && !is_leaf(edges_[e].second); }
  bool is_binary() const;

  // Leaf bitmask of the side of edge e that does not contain leaf 0.
  std::uint64_t split(std::size_t e) const;
  // Sorted split masks of all edges; equal iff the topologies are equal.
  std::vector<std::uint64_t> split_set() const;
  // Indices of the edges on the path between leaves i and j.
  std::vector<std::size_t> path_edges(int i, int j) const;

 private:
  int n_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<std::vector<std::size_t>> incident_;  // edge ids per vertex
};

struct WeightedXTree {
  XTree tree;
  std::vector<Rational> weights;  // one per edge, in tree.edges() order

  // Throws std::invalid_argument if the size is wrong or an internal edge
  // weight is not strictly positive.
  void validate() const;
};

// Pair-indexed table on [n]. Index of {i, j} (i < j) is lexicographic.
class DissimilarityMap {
 public:
  explicit DissimilarityMap(int n);

  int size() const { return n_; }
  std::size_t pair_count() const { return values_.size(); }
  static std::size_t pair_index(int n, int i, int j);
  static Edge pair_at(int n, std::size_t index);

  void set(int i, int j, Rational value);
  const std::optional<Rational>& get(int i, int j) const;
  const Rational& at(int i, int j) const;  // throws std::out_of_range if undefined
  bool is_total() const;
  std::vector<Edge> domain() const;        // defined pairs, lexicographic
  const std::vector<std::optional<Rational>>& values() const { return values_; }

 private:
  int n_;
  std::vector<std::optional<Rational>> values_;
};

std::vector<Edge> all_pairs(int n);

// Caterpillar with cherries {1,2} and {n-1,n}, interior labels increasing
// along the spine. Edge order: leaf 1, leaf 2, then for each spine edge the
// spine edge followed by the leaf edges at its far end. Throws for n < 4.
XTree cat_tree(int n);

// Star on n >= 3 leaves; centre is vertex n.
XTree star_tree(int n);

// Every binary topology on n >= 3 leaves, by inserting leaf k into each edge
// of every tree on leaves 0..k-1.
void for_each_binary_tree(int n, const std::function<void(const XTree&)>& visit);
std::vector<XTree> enumerate_binary_trees(int n);

// Number of leaf pairs adjacent to a common degree-3 vertex.
int count_cherries(const XTree& t);

// Rows follow t.edges(), columns follow all_pairs(n).
RationalMatrix path_matrix(const XTree& t);
IntMatrix path_incidence(const XTree& t);

// Throws std::invalid_argument if an internal weight is not positive.
DissimilarityMap tree_metric(const WeightedXTree& t);

struct FourPointResult {
  bool holds = true;
  std::optional<std::array<int, 4>> violation;  // 0-based, ascending
};

// Throws std::invalid_argument on a partial map.
FourPointResult four_point_check(const DissimilarityMap& d);

bool tree_matroid_indep(const XTree& t, const std::vector<Edge>& s);

// All binary trees on n leaves with their path-vector columns stored as
// edge bitmasks, for repeated independence queries.
class BinaryTreeCatalog {
 public:
  explicit BinaryTreeCatalog(int n);

  int leaf_count() const { return n_; }
  std::size_t size() const { return trees_.size(); }
  const XTree& tree(std::size_t k) const { return trees_[k]; }

  std::size_t rank_in(std::size_t k, const std::vector<Edge>& s) const;
  bool independent_in_some_tree(const std::vector<Edge>& s) const;
  std::size_t max_rank(const std::vector<Edge>& s) const;

 private:
  int n_;
  std::vector<XTree> trees_;
  std::vector<std::vector<std::uint32_t>> columns_;  // [tree][pair] -> edge mask
};

// Shared, lazily built catalog per n.
const BinaryTreeCatalog& binary_tree_catalog(int n);

inline constexpr int kDefaultEnumerationCap = 8;

// True iff S is independent in M(t) for some binary t. Throws
// std::invalid_argument for n < 3 or n > cap.
bool tree_enum_oracle(int n, const std::vector<Edge>& s, int cap = kDefaultEnumerationCap);

// Newick with branch lengths, rooted at the neighbour of leaf 1; leaves are
// labelled 1..n, internal vertices unlabelled, lengths printed as p/q.
std::string to_newick(const WeightedXTree& t);
std::string to_newick(const XTree& t);

}  // namespace r2m
