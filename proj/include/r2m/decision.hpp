#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "r2m/graph.hpp"
#include "r2m/tree_space.hpp"

namespace r2m {

enum class Model { Skew, Rect, TreeMetric };

std::string to_string(Model m);
Model parse_model(const std::string& name);  // "skew", "rect", "tree"

// Cell (row, col) of an m x n matrix, both 0-based.
struct Cell {
  int row;
  int col;

  friend auto operator<=>(const Cell&, const Cell&) = default;
};

struct DecideOptions {
  bool prefilter = true;  // run laman_sparse first and stop on failure
  bool parallel = false;
  bool timing = false;    // record wall-clock time in stats
};

struct DecisionStats {
  std::uint64_t nodes_explored = 0;
  std::optional<double> time_ms;
};

struct Decision {
  Model model = Model::Skew;
  int m = 0;  // rows, rectangular model only
  int n = 0;
  std::vector<Edge> pairs;  // skew / tree-metric input
  std::vector<Cell> cells;  // rectangular input
  bool independent = false;
  // Vertex order on [n] (skew, tree) or on [m + n] in the rectangular
  // vertex convention (see translate_rect).
  std::optional<VertexOrder> certificate;
  std::optional<bool> prefilter;  // laman_sparse verdict when it ran
  DecisionStats stats;
};

Decision decide_skew(int n, const std::vector<Edge>& s, const DecideOptions& options = {});
Decision decide_tree_metric(int n, const std::vector<Edge>& s, const DecideOptions& options = {});

// Column j becomes vertex j and row i becomes vertex n + i, so cell (i, j)
// maps to the pair {j, n + i} on m + n vertices. Throws on out-of-range cells.
std::vector<Edge> translate_rect(int m, int n, const std::vector<Cell>& cells);

Decision decide_rect(int m, int n, const std::vector<Cell>& cells, const DecideOptions& options = {});

// True iff the trail graph of S oriented by `order` is a forest.
bool verify_certificate(int n, const std::vector<Edge>& s, const VertexOrder& order);

// Maximum rank of the columns S over all binary trees on n leaves.
std::size_t matroid_rank(int n, const std::vector<Edge>& s, int cap = kDefaultEnumerationCap);
std::size_t matroid_rank_rect(int m, int n, const std::vector<Cell>& cells, int cap = kDefaultEnumerationCap);

// {model, ambient, edges, independent, certificate, prefilter, stats}; all
// vertex labels 1-based.
nlohmann::json to_json(const Decision& d);

}  // namespace r2m
