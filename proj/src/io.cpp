#include <set>
#include <sstream>

#include "r2m/io.hpp"

namespace r2m {

namespace {

struct Line {
  int number;
  std::vector<std::string> fields;
};

// Splits into whitespace-separated fields, dropping comments and blank lines.
std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> lines;
  std::string text;
  int number = 0;
  while (std::getline(in, text)) {
    ++number;
    if (auto hash = text.find('#'); hash != std::string::npos) text.erase(hash);
    std::istringstream ss(text);
    Line line{number, {}};
    for (std::string f; ss >> f;) line.fields.push_back(f);
    if (!line.fields.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

[[noreturn]] void fail(const std::string& source, int line, const std::string& what) {
  throw InputError(source + ":" + std::to_string(line) + ": " + what);
}

int parse_index(const std::string& source, const Line& line, const std::string& field, int limit) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(field, &used);
  } catch (const std::exception&) {
    fail(source, line.number, "expected an integer index, got '" + field + "'");
  }
  if (used != field.size()) fail(source, line.number, "expected an integer index, got '" + field + "'");
  if (value < 1 || value > limit)
    fail(source, line.number, "index " + field + " out of range 1.." + std::to_string(limit));
  return value - 1;
}

void expect_fields(const std::string& source, const Line& line, std::size_t count) {
  if (line.fields.size() != count)
    fail(source, line.number,
         "expected " + std::to_string(count) + " fields, got " + std::to_string(line.fields.size()));
}

std::pair<Edge, Rational> parse_valued_pair(const std::string& source, const Line& line, int n,
                                            std::set<Edge>& seen) {
  expect_fields(source, line, 3);
  const int a = parse_index(source, line, line.fields[0], n);
  const int b = parse_index(source, line, line.fields[1], n);
  if (a == b) fail(source, line.number, "loop at vertex " + line.fields[0]);
  const Edge e = make_edge(a, b);
  if (!seen.insert(e).second) fail(source, line.number, "duplicate pair " + line.fields[0] + " " + line.fields[1]);
  try {
    return {e, parse_rational(line.fields[2])};
  } catch (const std::invalid_argument& ex) {
    fail(source, line.number, ex.what());
  }
}

}  // namespace

std::vector<Edge> read_edges(std::istream& in, int n, const std::string& source) {
  std::vector<Edge> edges;
  std::set<Edge> seen;
  for (const auto& line : tokenize(in)) {
    expect_fields(source, line, 2);
    const int a = parse_index(source, line, line.fields[0], n);
    const int b = parse_index(source, line, line.fields[1], n);
    if (a == b) fail(source, line.number, "loop at vertex " + line.fields[0]);
    const Edge e = make_edge(a, b);
    if (!seen.insert(e).second) fail(source, line.number, "duplicate edge " + line.fields[0] + " " + line.fields[1]);
    edges.push_back(e);
  }
  return edges;
}

std::vector<Cell> read_cells(std::istream& in, int m, int n, const std::string& source) {
  std::vector<Cell> cells;
  std::set<Cell> seen;
  for (const auto& line : tokenize(in)) {
    expect_fields(source, line, 2);
    const Cell c{parse_index(source, line, line.fields[0], m), parse_index(source, line, line.fields[1], n)};
    if (!seen.insert(c).second) fail(source, line.number, "duplicate cell " + line.fields[0] + " " + line.fields[1]);
    cells.push_back(c);
  }
  return cells;
}

DissimilarityMap read_values(std::istream& in, int n, const std::string& source) {
  DissimilarityMap d(n);
  std::set<Edge> seen;
  for (const auto& line : tokenize(in)) {
    auto [e, value] = parse_valued_pair(source, line, n, seen);
    d.set(e.u, e.v, std::move(value));
  }
  return d;
}

DissimilarityMap read_metric(std::istream& in, const std::string& source) {
  const auto lines = tokenize(in);
  if (lines.empty()) throw InputError(source + ": empty metric file (expected header 'n')");
  const Line& header = lines.front();
  expect_fields(source, header, 1);
  const int n = parse_index(source, header, header.fields[0], 1 << 16) + 1;
  DissimilarityMap d(n);
  std::set<Edge> seen;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    auto [e, value] = parse_valued_pair(source, lines[k], n, seen);
    d.set(e.u, e.v, std::move(value));
  }
  if (!d.is_total()) {
    for (const auto& e : all_pairs(n))
      if (!d.get(e.u, e.v))
        throw InputError(source + ": missing pair " + std::to_string(e.u + 1) + " " + std::to_string(e.v + 1));
  }
  return d;
}

void write_edges(std::ostream& out, const std::vector<Edge>& edges) {
  for (const auto& e : edges) out << e.u + 1 << ' ' << e.v + 1 << '\n';
}

void write_metric(std::ostream& out, const DissimilarityMap& d) {
  out << d.size() << '\n';
  for (const auto& e : all_pairs(d.size())) out << e.u + 1 << ' ' << e.v + 1 << ' ' << to_string(d.at(e.u, e.v)) << '\n';
}

VertexOrder parse_order(const std::string& text, int n) {
  std::vector<int> seq;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw InputError("order: expected an integer, got '" + item + "'");
    }
    if (used != item.size() || v < 1 || v > n) throw InputError("order: invalid vertex '" + item + "'");
    seq.push_back(v - 1);
  }
  std::vector<char> listed(n, 0);
  for (int v : seq) {
    if (listed[v]) throw InputError("order: vertex " + std::to_string(v + 1) + " listed twice");
    listed[v] = 1;
  }
  for (int v = 0; v < n; ++v)
    if (!listed[v]) seq.push_back(v);
  try {
    return VertexOrder(std::move(seq));
  } catch (const std::invalid_argument&) {
    throw InputError("order: not a permutation of 1.." + std::to_string(n));
  }
}

}  // namespace r2m
