#include <chrono>
#include <set>
#include <stdexcept>

#include "r2m/decision.hpp"

namespace r2m {

std::string to_string(Model m) {
  switch (m) {
    case Model::Skew:
      return "skew";
    case Model::Rect:
      return "rect";
    case Model::TreeMetric:
      return "tree";
  }
  return "unknown";
}

Model parse_model(const std::string& name) {
  if (name == "skew") return Model::Skew;
  if (name == "rect") return Model::Rect;
  if (name == "tree") return Model::TreeMetric;
  throw std::invalid_argument("unknown model '" + name + "'");
}

namespace {

// Shared by every model once the input is a pair set on `vertices`.
void decide_pairs(Decision& d, int vertices, const std::vector<Edge>& pairs, const DecideOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const PatternGraph g(vertices, pairs);
  bool run_search = true;
  if (options.prefilter) {
    d.prefilter = laman_sparse(g);
    run_search = *d.prefilter;
  }
  if (run_search) {
    SearchResult r = search_trail_free_order(g, {.parallel = options.parallel});
    d.stats.nodes_explored = r.nodes_explored;
    d.independent = r.order.has_value();
    d.certificate = std::move(r.order);
  }
  if (options.timing)
    d.stats.time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

Decision decide_skew(int n, const std::vector<Edge>& s, const DecideOptions& options) {
  Decision d;
  d.model = Model::Skew;
  d.n = n;
  d.pairs = s;
  decide_pairs(d, n, s, options);
  return d;
}

Decision decide_tree_metric(int n, const std::vector<Edge>& s, const DecideOptions& options) {
  Decision d = decide_skew(n, s, options);
  d.model = Model::TreeMetric;
  return d;
}

std::vector<Edge> translate_rect(int m, int n, const std::vector<Cell>& cells) {
  std::vector<Edge> pairs;
  pairs.reserve(cells.size());
  std::set<Cell> seen;
  for (const auto& c : cells) {
    if (c.row < 0 || c.row >= m || c.col < 0 || c.col >= n)
      throw std::invalid_argument("cell (" + std::to_string(c.row + 1) + "," + std::to_string(c.col + 1) +
                                  ") out of range for " + std::to_string(m) + "x" + std::to_string(n));
    if (!seen.insert(c).second)
      throw std::invalid_argument("duplicate cell (" + std::to_string(c.row + 1) + "," + std::to_string(c.col + 1) +
                                  ")");
    pairs.push_back({c.col, n + c.row});
  }
  return pairs;
}

Decision decide_rect(int m, int n, const std::vector<Cell>& cells, const DecideOptions& options) {
  Decision d;
  d.model = Model::Rect;
  d.m = m;
  d.n = n;
  d.cells = cells;
  decide_pairs(d, m + n, translate_rect(m, n, cells), options);
  return d;
}

bool verify_certificate(int n, const std::vector<Edge>& s, const VertexOrder& order) {
  const PatternGraph g(n, s);
  if (order.size() != n) throw std::invalid_argument("verify_certificate: order is not a permutation of [n]");
  return !has_alternating_closed_trail(orient(g, order));
}

std::size_t matroid_rank(int n, const std::vector<Edge>& s, int cap) {
  if (n > cap)
    throw std::invalid_argument("matroid_rank: n = " + std::to_string(n) + " exceeds enumeration cap " +
                                std::to_string(cap));
  if (s.empty()) return 0;
  if (n < 3) return PatternGraph(n, s).edges().size();
  const PatternGraph g(n, s);
  return binary_tree_catalog(n).max_rank(g.edges());
}

std::size_t matroid_rank_rect(int m, int n, const std::vector<Cell>& cells, int cap) {
  return matroid_rank(m + n, translate_rect(m, n, cells), cap);
}

nlohmann::json to_json(const Decision& d) {
  using nlohmann::json;
  json out;
  out["model"] = to_string(d.model);
  json edges = json::array();
  if (d.model == Model::Rect) {
    out["ambient"] = {{"m", d.m}, {"n", d.n}};
    for (const auto& c : d.cells) edges.push_back({c.row + 1, c.col + 1});
    out["vertex_convention"] = "column j -> vertex j; row i -> vertex n+i";
  } else {
    out["ambient"] = {{"n", d.n}};
    for (const auto& e : d.pairs) edges.push_back({e.u + 1, e.v + 1});
  }
  out["edges"] = std::move(edges);
  out["independent"] = d.independent;
  if (d.certificate) {
    json seq = json::array();
    for (int v : d.certificate->sequence()) seq.push_back(v + 1);
    out["certificate"] = std::move(seq);
  } else {
    out["certificate"] = nullptr;
  }
  out["prefilter"] = d.prefilter ? json(*d.prefilter) : json(nullptr);
  out["stats"] = {{"nodes_explored", d.stats.nodes_explored},
                  {"time_ms", d.stats.time_ms ? json(*d.stats.time_ms) : json(nullptr)}};
  return out;
}

}  // namespace r2m
