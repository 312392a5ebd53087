#pragma once

#include <istream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "r2m/decision.hpp"
#include "r2m/tree_space.hpp"

namespace r2m {

// Malformed input; the message carries the source name and line number.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Edge list: one "i j" per line, 1-indexed, '#' starts a comment. Loops,
// duplicates and endpoints outside [n] are rejected.
std::vector<Edge> read_edges(std::istream& in, int n, const std::string& source = "<input>");

// Rectangular cells: "i j" meaning row i, column j.
std::vector<Cell> read_cells(std::istream& in, int m, int n, const std::string& source = "<input>");

// Prescribed values: "i j p/q" per line.
DissimilarityMap read_values(std::istream& in, int n, const std::string& source = "<input>");

// Metric file: header line "n", then every pair "i j p/q" exactly once.
DissimilarityMap read_metric(std::istream& in, const std::string& source = "<input>");

// Writers for the same formats.
void write_edges(std::ostream& out, const std::vector<Edge>& edges);
void write_metric(std::ostream& out, const DissimilarityMap& d);

// Parses a comma-separated 1-based vertex order such as "3,1,2". Vertices
// not listed follow the listed ones in ascending order.
VertexOrder parse_order(const std::string& text, int n);

}  // namespace r2m
