#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

#include "r2m/exact_linalg.hpp"
#include "r2m/tree_space.hpp"

namespace r2m {

void WeightedXTree::validate() const {
  if (weights.size() != tree.edge_count()) throw std::invalid_argument("WeightedXTree: one weight per edge required");
  for (std::size_t e = 0; e < weights.size(); ++e)
    if (tree.is_internal_edge(e) && weights[e] <= 0)
      throw std::invalid_argument("WeightedXTree: internal edge weight must be positive");
}

DissimilarityMap::DissimilarityMap(int n) : n_(n), values_(n < 2 ? 0 : static_cast<std::size_t>(n) * (n - 1) / 2) {
  if (n < 0) throw std::invalid_argument("DissimilarityMap: negative size");
}

std::size_t DissimilarityMap::pair_index(int n, int i, int j) {
  if (i > j) std::swap(i, j);
  if (i == j || i < 0 || j >= n) throw std::out_of_range("DissimilarityMap: invalid pair");
  const auto si = static_cast<std::size_t>(i);
  return si * n - si * (si + 1) / 2 + static_cast<std::size_t>(j - i - 1);
}

Edge DissimilarityMap::pair_at(int n, std::size_t index) {
  for (int i = 0; i < n; ++i) {
    const auto row = static_cast<std::size_t>(n - i - 1);
    if (index < row) return {i, i + 1 + static_cast<int>(index)};
    index -= row;
  }
  throw std::out_of_range("DissimilarityMap: pair index out of range");
}

void DissimilarityMap::set(int i, int j, Rational value) { values_[pair_index(n_, i, j)] = std::move(value); }

const std::optional<Rational>& DissimilarityMap::get(int i, int j) const { return values_[pair_index(n_, i, j)]; }

const Rational& DissimilarityMap::at(int i, int j) const {
  const auto& v = get(i, j);
  if (!v)
    throw std::out_of_range("DissimilarityMap: d(" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                            ") undefined");
  return *v;
}

bool DissimilarityMap::is_total() const {
  return std::all_of(values_.begin(), values_.end(), [](const auto& v) { return v.has_value(); });
}

std::vector<Edge> DissimilarityMap::domain() const {
  std::vector<Edge> out;
  for (std::size_t k = 0; k < values_.size(); ++k)
    if (values_[k]) out.push_back(pair_at(n_, k));
  return out;
}

std::vector<Edge> all_pairs(int n) {
  std::vector<Edge> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) out.push_back({i, j});
  return out;
}

DissimilarityMap tree_metric(const WeightedXTree& t) {
  t.validate();
  const int n = t.tree.leaf_count();
  DissimilarityMap d(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Rational sum = 0;
      for (auto e : t.tree.path_edges(i, j)) sum += t.weights[e];
      d.set(i, j, std::move(sum));
    }
  return d;
}

FourPointResult four_point_check(const DissimilarityMap& d) {
  if (!d.is_total()) throw std::invalid_argument("four_point_check: dissimilarity map is partial");
  const int n = d.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        for (int l = k + 1; l < n; ++l) {
          std::array<Rational, 3> s{d.at(i, j) + d.at(k, l), d.at(i, k) + d.at(j, l), d.at(i, l) + d.at(j, k)};
          std::sort(s.begin(), s.end());
          if (s[1] != s[2]) return {false, std::array<int, 4>{i, j, k, l}};
        }
  return {};
}

bool tree_matroid_indep(const XTree& t, const std::vector<Edge>& s) {
  if (s.empty()) return true;
  const IntMatrix a = path_incidence(t);
  std::vector<std::size_t> cols;
  for (const auto& e : s) cols.push_back(DissimilarityMap::pair_index(t.leaf_count(), e.u, e.v));
  return rank(a.select_columns(cols)) == s.size();
}

BinaryTreeCatalog::BinaryTreeCatalog(int n) : n_(n) {
  if (n < 3 || 2 * n - 3 > 32) throw std::invalid_argument("BinaryTreeCatalog: n out of range");
  for_each_binary_tree(n, [&](const XTree& t) {
    trees_.push_back(t);
    std::vector<std::uint32_t> cols;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        std::uint32_t mask = 0;
        for (auto e : t.path_edges(i, j)) mask |= std::uint32_t{1} << e;
        cols.push_back(mask);
      }
    columns_.push_back(std::move(cols));
  });
}

std::size_t BinaryTreeCatalog::rank_in(std::size_t k, const std::vector<Edge>& s) const {
  const std::size_t rows = trees_[k].edge_count();
  IntMatrix m(rows, s.size());
  for (std::size_t c = 0; c < s.size(); ++c) {
    const std::uint32_t mask = columns_[k][DissimilarityMap::pair_index(n_, s[c].u, s[c].v)];
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = (mask >> r) & 1u;
  }
  return rank(m);
}

bool BinaryTreeCatalog::independent_in_some_tree(const std::vector<Edge>& s) const {
  if (s.size() > static_cast<std::size_t>(2 * n_ - 3)) return false;
  for (std::size_t k = 0; k < trees_.size(); ++k)
    if (rank_in(k, s) == s.size()) return true;
  return false;
}

std::size_t BinaryTreeCatalog::max_rank(const std::vector<Edge>& s) const {
  std::size_t best = 0;
  const std::size_t bound = std::min(s.size(), static_cast<std::size_t>(2 * n_ - 3));
  for (std::size_t k = 0; k < trees_.size() && best < bound; ++k) best = std::max(best, rank_in(k, s));
  return best;
}

const BinaryTreeCatalog& binary_tree_catalog(int n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<BinaryTreeCatalog>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<BinaryTreeCatalog>(n);
  return *slot;
}

bool tree_enum_oracle(int n, const std::vector<Edge>& s, int cap) {
  if (n < 3) throw std::invalid_argument("tree_enum_oracle: n must be at least 3");
  if (n > cap)
    throw std::invalid_argument("tree_enum_oracle: n = " + std::to_string(n) + " exceeds enumeration cap " +
                                std::to_string(cap));
  const PatternGraph g(n, s);  // validates the pair set
  return binary_tree_catalog(n).independent_in_some_tree(g.edges());
}

}  // namespace r2m
