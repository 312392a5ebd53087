#include <algorithm>
#include <stdexcept>
#include <string>

#include "r2m/tree_space.hpp"

namespace r2m {

XTree::XTree(int leaf_count, std::vector<std::pair<int, int>> edges) : n_(leaf_count), edges_(std::move(edges)) {
  if (n_ < 3) throw std::invalid_argument("XTree: at least 3 leaves required");
  int max_id = n_ - 1;
  for (auto [a, b] : edges_) {
    if (a < 0 || b < 0 || a == b) throw std::invalid_argument("XTree: invalid edge");
    max_id = std::max({max_id, a, b});
  }
  const int vertices = max_id + 1;
  if (edges_.size() + 1 != static_cast<std::size_t>(vertices))
    throw std::invalid_argument("XTree: edge count must be vertex count - 1");
  adjacency_.assign(vertices, {});
  incident_.assign(vertices, {});
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    auto [a, b] = edges_[e];
    adjacency_[a].push_back(b);
    adjacency_[b].push_back(a);
    incident_[a].push_back(e);
    incident_[b].push_back(e);
  }
  for (int v = 0; v < vertices; ++v) {
    const auto deg = adjacency_[v].size();
    if (is_leaf(v) && deg != 1) throw std::invalid_argument("XTree: leaf " + std::to_string(v + 1) + " must have degree 1");
    if (!is_leaf(v) && deg < 3) throw std::invalid_argument("XTree: internal vertex of degree < 3");
  }
  std::vector<char> seen(vertices, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : adjacency_[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  if (reached != vertices) throw std::invalid_argument("XTree: not connected");
}

bool XTree::is_binary() const {
  for (int v = n_; v < vertex_count(); ++v)
    if (adjacency_[v].size() != 3) return false;
  return true;
}

std::uint64_t XTree::split(std::size_t e) const {
  if (n_ > 64) throw std::invalid_argument("XTree::split: more than 64 leaves");
  auto [a, b] = edges_[e];
  std::uint64_t mask = 0;
  std::vector<int> stack{a};
  std::vector<char> seen(vertex_count(), 0);
  seen[a] = seen[b] = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    if (is_leaf(v)) mask |= std::uint64_t{1} << v;
    for (int w : adjacency_[v])
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
  }
  const std::uint64_t all = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
  return (mask & 1) ? (all & ~mask) : mask;
}

std::vector<std::uint64_t> XTree::split_set() const {
  std::vector<std::uint64_t> s;
  for (std::size_t e = 0; e < edges_.size(); ++e) s.push_back(split(e));
  std::sort(s.begin(), s.end());
  return s;
}

std::vector<std::size_t> XTree::path_edges(int i, int j) const {
  std::vector<int> via(vertex_count(), -1);  // edge used to reach each vertex
  std::vector<int> stack{i};
  via[i] = -2;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    if (v == j) break;
    for (auto e : incident_[v]) {
      const int w = edges_[e].first == v ? edges_[e].second : edges_[e].first;
      if (via[w] == -1) {
        via[w] = static_cast<int>(e);
        stack.push_back(w);
      }
    }
  }
  std::vector<std::size_t> path;
  for (int v = j; v != i;) {
    const auto e = static_cast<std::size_t>(via[v]);
    path.push_back(e);
    v = edges_[e].first == v ? edges_[e].second : edges_[e].first;
  }
  std::sort(path.begin(), path.end());
  return path;
}

XTree cat_tree(int n) {
  if (n < 4) throw std::invalid_argument("cat_tree: n must be at least 4");
  const int spine = n - 2;
  auto c = [n](int k) { return n + k; };
  std::vector<std::pair<int, int>> edges{{0, c(0)}, {1, c(0)}};
  for (int k = 1; k < spine; ++k) {
    edges.emplace_back(c(k - 1), c(k));
    if (k < spine - 1) {
      edges.emplace_back(k + 1, c(k));
    } else {
      edges.emplace_back(n - 2, c(k));
      edges.emplace_back(n - 1, c(k));
    }
  }
  return XTree(n, std::move(edges));
}

XTree star_tree(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, n);
  return XTree(n, std::move(edges));
}

namespace {

void grow(int n, int k, std::vector<std::pair<int, int>>& edges, const std::function<void(const XTree&)>& visit) {
  if (k == n) {
    visit(XTree(n, edges));
    return;
  }
  const int w = n + (k - 2);
  const std::size_t m = edges.size();
  for (std::size_t e = 0; e < m; ++e) {
    const auto original = edges[e];
    edges[e] = {original.first, w};
    edges.emplace_back(w, original.second);
    edges.emplace_back(k, w);
    grow(n, k + 1, edges, visit);
    edges.pop_back();
    edges.pop_back();
    edges[e] = original;
  }
}

}  // namespace

void for_each_binary_tree(int n, const std::function<void(const XTree&)>& visit) {
  if (n < 3) throw std::invalid_argument("enumerate_binary_trees: n must be at least 3");
  std::vector<std::pair<int, int>> edges{{0, n}, {1, n}, {2, n}};
  grow(n, 3, edges, visit);
}

std::vector<XTree> enumerate_binary_trees(int n) {
  std::vector<XTree> out;
  for_each_binary_tree(n, [&](const XTree& t) { out.push_back(t); });
  return out;
}

int count_cherries(const XTree& t) {
  int cherries = 0;
  for (int v = t.leaf_count(); v < t.vertex_count(); ++v) {
    if (t.neighbors(v).size() != 3) continue;
    int leaves = 0;
    for (int w : t.neighbors(v)) leaves += t.is_leaf(w) ? 1 : 0;
    cherries += leaves * (leaves - 1) / 2;
  }
  return cherries;
}

IntMatrix path_incidence(const XTree& t) {
  const int n = t.leaf_count();
  IntMatrix m(t.edge_count(), static_cast<std::size_t>(n) * (n - 1) / 2);
  std::size_t col = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++col)
      for (auto e : t.path_edges(i, j)) m(e, col) = 1;
  return m;
}

RationalMatrix path_matrix(const XTree& t) { return to_rational(path_incidence(t)); }

namespace {

struct Subtree {
  int min_leaf;
  std::string text;
};

Subtree write_subtree(const XTree& t, const std::vector<std::string>& lengths, int v, int parent,
                      std::size_t parent_edge) {
  Subtree out;
  if (t.is_leaf(v)) {
    out = {v, std::to_string(v + 1)};
  } else {
    std::vector<Subtree> kids;
    for (std::size_t e = 0; e < t.edge_count(); ++e) {
      auto [a, b] = t.edges()[e];
      if (e == parent_edge || (a != v && b != v)) continue;
      const int w = a == v ? b : a;
      if (w == parent) continue;
      kids.push_back(write_subtree(t, lengths, w, v, e));
    }
    std::sort(kids.begin(), kids.end(), [](const Subtree& x, const Subtree& y) { return x.min_leaf < y.min_leaf; });
    out.min_leaf = kids.front().min_leaf;
    out.text = "(";
    for (std::size_t k = 0; k < kids.size(); ++k) out.text += (k ? "," : "") + kids[k].text;
    out.text += ")";
  }
  if (!lengths.empty() && parent_edge < t.edge_count()) out.text += ":" + lengths[parent_edge];
  return out;
}

std::string newick(const XTree& t, const std::vector<std::string>& lengths) {
  // The root has no parent edge; edge_count() marks that.
  const int root = t.neighbors(0).front();
  return write_subtree(t, lengths, root, -1, t.edge_count()).text + ";";
}

}  // namespace

std::string to_newick(const XTree& t) { return newick(t, {}); }

std::string to_newick(const WeightedXTree& t) {
  t.validate();
  std::vector<std::string> lengths;
  for (const auto& w : t.weights) lengths.push_back(to_string(w));
  return newick(t.tree, lengths);
}

}  // namespace r2m
