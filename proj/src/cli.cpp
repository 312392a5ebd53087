#include <CLI11.hpp>
#include <fstream>
#include <functional>

#include "r2m/algebraic_oracle.hpp"
#include "r2m/cli.hpp"
#include "r2m/completion.hpp"
#include "r2m/crosscheck.hpp"
#include "r2m/io.hpp"

namespace r2m {

namespace {

using nlohmann::json;

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return in;
}

struct Flags {
  int n = 0;
  int m = 0;
  std::string edges;
  std::string order;
  std::string values;
  std::string metric;
  std::string mode = "exhaustive";
  std::uint64_t samples = 1000;
  std::uint64_t seed = 0;
  int trials = kDefaultTrials;
  int cap = kDefaultEnumerationCap;
  bool no_prefilter = false;
  bool parallel = false;
  bool timing = false;

  DecideOptions decide() const { return {.prefilter = !no_prefilter, .parallel = parallel, .timing = timing}; }
};

json edges_json(const std::vector<Edge>& edges) {
  json a = json::array();
  for (const auto& e : edges) a.push_back({e.u + 1, e.v + 1});
  return a;
}

json metric_json(const DissimilarityMap& d) {
  json a = json::array();
  for (const auto& e : all_pairs(d.size())) a.push_back({e.u + 1, e.v + 1, to_string(d.at(e.u, e.v))});
  return a;
}

json order_json(const VertexOrder& o) {
  json a = json::array();
  for (int v : o.sequence()) a.push_back(v + 1);
  return a;
}

json cmd_decide(const std::string& model, const Flags& f) {
  auto in = open_input(f.edges);
  if (model == "rect") return to_json(decide_rect(f.m, f.n, read_cells(in, f.m, f.n, f.edges), f.decide()));
  const auto s = read_edges(in, f.n, f.edges);
  return to_json(model == "tree" ? decide_tree_metric(f.n, s, f.decide()) : decide_skew(f.n, s, f.decide()));
}

json cmd_verify(const Flags& f) {
  auto in = open_input(f.edges);
  std::vector<Edge> pairs;
  int vertices = f.n;
  if (f.m > 0) {
    pairs = translate_rect(f.m, f.n, read_cells(in, f.m, f.n, f.edges));
    vertices = f.m + f.n;
  } else {
    pairs = read_edges(in, f.n, f.edges);
  }
  const VertexOrder order = parse_order(f.order, vertices);
  return {{"valid", verify_certificate(vertices, pairs, order)}, {"order", order_json(order)}};
}

json cmd_oracle(const std::string& model, const Flags& f) {
  auto in = open_input(f.edges);
  OracleResult r;
  json out;
  if (model == "rect") {
    const auto cells = read_cells(in, f.m, f.n, f.edges);
    r = oracle_decide_rect(f.m, f.n, cells, f.trials, f.seed);
    out["ambient"] = {{"m", f.m}, {"n", f.n}};
    out["size"] = cells.size();
  } else {
    const auto s = read_edges(in, f.n, f.edges);
    r = oracle_decide_skew(f.n, s, f.trials, f.seed);
    out["ambient"] = {{"n", f.n}};
    out["size"] = s.size();
  }
  out["model"] = model;
  out["independent"] = r.independent;
  out["ranks"] = r.ranks;
  out["primes"] = r.primes;
  out["seed"] = f.seed;
  out["trials"] = f.trials;
  return out;
}

json cmd_complete(const Flags& f) {
  auto in = open_input(f.values);
  const DissimilarityMap prescribed = read_values(in, f.n, f.values);
  const CompletionOutcome outcome = complete(prescribed, {.decide = f.decide(), .cap = f.cap});
  json out;
  out["ambient"] = {{"n", f.n}};
  out["edges"] = edges_json(prescribed.domain());
  if (const auto* dep = std::get_if<NotIndependent>(&outcome)) {
    out["independent"] = false;
    out["prefilter"] = dep->decision.prefilter ? json(*dep->decision.prefilter) : json(nullptr);
    return out;
  }
  const auto& c = std::get<Completion>(outcome);
  out["independent"] = true;
  out["certificate"] = order_json(*c.decision.certificate);
  out["newick"] = to_newick(c.tree);
  out["metric"] = metric_json(c.metric);
  out["topologies_tried"] = c.topologies_tried;
  out["used_fallback"] = c.used_fallback;
  out["four_point"] = four_point_check(c.metric).holds;
  return out;
}

json cmd_rank(const Flags& f) {
  json out;
  if (f.m > 0) {
    std::vector<Cell> cells;
    if (f.edges.empty()) {
      for (int i = 0; i < f.m; ++i)
        for (int j = 0; j < f.n; ++j) cells.push_back({i, j});
    } else {
      auto in = open_input(f.edges);
      cells = read_cells(in, f.m, f.n, f.edges);
    }
    out["ambient"] = {{"m", f.m}, {"n", f.n}};
    out["size"] = cells.size();
    out["rank"] = matroid_rank_rect(f.m, f.n, cells, f.cap);
    return out;
  }
  std::vector<Edge> s;
  if (f.edges.empty()) {
    s = all_pairs(f.n);
  } else {
    auto in = open_input(f.edges);
    s = read_edges(in, f.n, f.edges);
  }
  out["ambient"] = {{"n", f.n}};
  out["size"] = s.size();
  out["rank"] = matroid_rank(f.n, s, f.cap);
  return out;
}

json cmd_trees(const Flags& f) {
  if (f.n > f.cap)
    throw std::invalid_argument("n = " + std::to_string(f.n) + " exceeds enumeration cap " + std::to_string(f.cap));
  json trees = json::array();
  for_each_binary_tree(f.n, [&](const XTree& t) { trees.push_back(to_newick(t)); });
  return {{"n", f.n}, {"count", trees.size()}, {"trees", trees}};
}

json cmd_fourpoint(const Flags& f) {
  auto in = open_input(f.metric);
  const FourPointResult r = four_point_check(read_metric(in, f.metric));
  json out{{"tree_metric", r.holds}};
  if (r.violation) {
    json q = json::array();
    for (int v : *r.violation) q.push_back(v + 1);
    out["violation"] = q;
  } else {
    out["violation"] = nullptr;
  }
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Independence, certificates and tree-metric completion for rank-2 matrix patterns", "r2m"};
  app.require_subcommand(1);
  Flags f;
  std::function<json()> action;
  int exit_on_success = kExitOk;

  auto add_n = [&](CLI::App* c, bool required = true) {
    auto* opt = c->add_option("--n", f.n, "Vertex count, or column count for rectangular input");
    if (required) opt->required();
    opt->check(CLI::PositiveNumber);
  };
  auto add_m = [&](CLI::App* c) { return c->add_option("--m", f.m, "Row count (rectangular input)")->check(CLI::PositiveNumber); };
  auto add_decide_flags = [&](CLI::App* c) {
    c->add_flag("--no-prefilter", f.no_prefilter, "Skip the (2,3)-sparsity pre-filter");
    c->add_flag("--parallel", f.parallel, "Search top-level branches on worker threads");
    c->add_flag("--timing", f.timing, "Report wall-clock time in stats.time_ms");
  };

  auto* decide = app.add_subcommand("decide", "Decide independence of an observation pattern");
  decide->require_subcommand(1);
  for (const std::string model : {"skew", "rect", "tree"}) {
    auto* c = decide->add_subcommand(model, "Model: " + model);
    add_n(c);
    if (model == "rect") add_m(c)->required();
    c->add_option("--edges", f.edges, "Edge or cell list file")->required();
    add_decide_flags(c);
    c->callback([&, model] { action = [&, model] { return cmd_decide(model, f); }; });
  }

  auto* certificate = app.add_subcommand("certificate", "Certificate utilities");
  certificate->require_subcommand(1);
  auto* verify = certificate->add_subcommand("verify", "Check a vertex-order certificate");
  add_n(verify);
  add_m(verify);
  verify->add_option("--edges", f.edges, "Edge or cell list file")->required();
  verify->add_option("--order", f.order, "Comma-separated vertex order, earliest first")->required();
  verify->callback([&] { action = [&] { return cmd_verify(f); }; });

  auto* oracle = app.add_subcommand("oracle", "Randomized Jacobian-rank oracle");
  std::string oracle_model = "skew";
  oracle->add_option("model", oracle_model, "skew or rect")->check(CLI::IsMember({"skew", "rect"}));
  add_n(oracle);
  add_m(oracle);
  oracle->add_option("--edges", f.edges, "Edge or cell list file")->required();
  oracle->add_option("--seed", f.seed, "Seed for points and primes");
  oracle->add_option("--trials", f.trials, "Number of random points")->check(CLI::PositiveNumber);
  oracle->callback([&] { action = [&] { return cmd_oracle(oracle_model, f); }; });

  auto* completion = app.add_subcommand("complete", "Complete prescribed values to a tree metric");
  add_n(completion);
  completion->add_option("--values", f.values, "Values file: i j p/q per line")->required();
  completion->add_option("--cap", f.cap, "Largest n for the topology enumeration");
  add_decide_flags(completion);
  completion->callback([&] { action = [&] { return cmd_complete(f); }; });

  auto* rank_cmd = app.add_subcommand("rank", "Matroid rank by binary-tree enumeration");
  add_n(rank_cmd);
  add_m(rank_cmd);
  rank_cmd->add_option("--edges", f.edges, "Edge or cell list file (default: all)");
  rank_cmd->add_option("--cap", f.cap, "Largest n for the topology enumeration");
  rank_cmd->callback([&] { action = [&] { return cmd_rank(f); }; });

  auto* trees = app.add_subcommand("trees", "Binary tree utilities");
  trees->require_subcommand(1);
  auto* enumerate = trees->add_subcommand("enumerate", "List all binary topologies as Newick");
  add_n(enumerate);
  enumerate->add_option("--cap", f.cap, "Largest n allowed");
  enumerate->callback([&] { action = [&] { return cmd_trees(f); }; });

  auto* fourpoint = app.add_subcommand("fourpoint", "Four-point condition on a full metric");
  fourpoint->add_option("--metric", f.metric, "Metric file: header n, then i j p/q for all pairs")->required();
  fourpoint->callback([&] { action = [&] { return cmd_fourpoint(f); }; });

  auto* crosscheck = app.add_subcommand("crosscheck", "Compare all deciders on many patterns");
  add_n(crosscheck);
  add_m(crosscheck);
  crosscheck->add_option("--mode", f.mode, "exhaustive or random")->check(CLI::IsMember({"exhaustive", "random"}));
  crosscheck->add_option("--samples", f.samples, "Patterns drawn in random mode");
  crosscheck->add_option("--seed", f.seed, "Seed for sampling and the oracle");
  crosscheck->add_option("--trials", f.trials, "Oracle points per pattern")->check(CLI::PositiveNumber);
  crosscheck->add_option("--cap", f.cap, "Largest n for the topology enumeration");
  add_decide_flags(crosscheck);
  crosscheck->callback([&] {
    action = [&] {
      CrosscheckOptions o{.n = f.n,
                          .m = f.m,
                          .exhaustive = f.mode == "exhaustive",
                          .samples = f.samples,
                          .seed = f.seed,
                          .trials = f.trials,
                          .cap = f.cap,
                          .decide = f.decide()};
      const CrosscheckReport r = run_crosscheck(o);
      if (r.disagreements > 0 || r.certificate_failures > 0) exit_on_success = kExitDisagreement;
      return to_json(r, o);
    };
  });

  std::vector<std::string> argv_store{"r2m"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    const json result = action();
    out << result.dump(2) << '\n';
    return exit_on_success;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternalError;
  }
  return kExitInputError;
}

}  // namespace r2m
