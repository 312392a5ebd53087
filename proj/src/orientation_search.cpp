#include <algorithm>
#include <atomic>
#include <climits>
#include <future>

#include "r2m/graph.hpp"

namespace r2m {

namespace {

// Places the vertices of one component one at a time. Placing v orients
// every edge to an already-placed neighbour u as u -> v, which adds the
// trail-graph edge {u+, v-}; a union that closes a cycle prunes the branch.
class PlacementSearch {
 public:
  PlacementSearch(const PatternGraph& g, const std::vector<int>& component)
      : g_(g), component_(component), uf_(2 * g.vertex_count()), placed_(g.vertex_count(), 0) {}

  bool place(int v) {
    const auto cp = uf_.checkpoint();
    const int in_v = g_.vertex_count() + v;
    for (int u : g_.neighbors(v)) {
      if (placed_[u] && !uf_.unite(u, in_v)) {
        uf_.rollback(cp);
        return false;
      }
    }
    placed_[v] = 1;
    sequence_.push_back(v);
    checkpoints_.push_back(cp);
    return true;
  }

  void unplace() {
    const int v = sequence_.back();
    sequence_.pop_back();
    placed_[v] = 0;
    uf_.rollback(checkpoints_.back());
    checkpoints_.pop_back();
  }

  // Highest count of unplaced neighbours first, ties by smallest label.
  std::vector<int> candidates() const {
    std::vector<std::pair<int, int>> keyed;
    for (int v : component_) {
      if (placed_[v]) continue;
      int remaining = 0;
      for (int u : g_.neighbors(v)) remaining += placed_[u] ? 0 : 1;
      keyed.emplace_back(-remaining, v);
    }
    std::sort(keyed.begin(), keyed.end());
    std::vector<int> out;
    out.reserve(keyed.size());
    for (auto& [_, v] : keyed) out.push_back(v);
    return out;
  }

  bool run(const std::atomic<bool>* abort = nullptr) {
    if (sequence_.size() == component_.size()) return true;
    if (abort && abort->load(std::memory_order_relaxed)) return false;
    for (int v : candidates()) {
      ++nodes_;
      if (!place(v)) continue;
      if (run(abort)) return true;
      unplace();
    }
    return false;
  }

  const std::vector<int>& sequence() const { return sequence_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  const PatternGraph& g_;
  const std::vector<int>& component_;
  RollbackUnionFind uf_;
  std::vector<char> placed_;
  std::vector<int> sequence_;
  std::vector<std::size_t> checkpoints_;
  std::uint64_t nodes_ = 0;
};

struct ComponentResult {
  std::optional<std::vector<int>> sequence;
  std::uint64_t nodes = 0;
};

ComponentResult search_component(const PatternGraph& g, const std::vector<int>& component) {
  PlacementSearch s(g, component);
  const bool ok = s.run();
  return {ok ? std::optional(s.sequence()) : std::nullopt, s.nodes()};
}

// One task per first vertex. The answer is the lowest-index successful
// branch, which is the branch the sequential search would return.
ComponentResult search_component_parallel(const PatternGraph& g, const std::vector<int>& component) {
  const std::vector<int> firsts = PlacementSearch(g, component).candidates();
  std::vector<std::atomic<bool>> abort(firsts.size());
  std::atomic<int> best{INT_MAX};
  std::vector<std::future<ComponentResult>> tasks;
  for (std::size_t i = 0; i < firsts.size(); ++i) {
    abort[i] = false;
    tasks.push_back(std::async(std::launch::async, [&, i] {
      PlacementSearch s(g, component);
      s.place(firsts[i]);
      ComponentResult r;
      if (s.run(&abort[i])) {
        r.sequence = s.sequence();
        int cur = best.load();
        while (static_cast<int>(i) < cur && !best.compare_exchange_weak(cur, static_cast<int>(i))) {
        }
        for (std::size_t j = i + 1; j < abort.size(); ++j) abort[j] = true;
      }
      r.nodes = s.nodes() + 1;
      return r;
    }));
  }
  ComponentResult out;
  std::vector<ComponentResult> results;
  for (auto& t : tasks) results.push_back(t.get());
  for (auto& r : results) out.nodes += r.nodes;
  if (best.load() != INT_MAX) out.sequence = results[best.load()].sequence;
  return out;
}

}  // namespace

SearchResult search_trail_free_order(const PatternGraph& g, const SearchOptions& options) {
  SearchResult result;
  std::vector<int> order;
  order.reserve(g.vertex_count());
  for (const auto& comp : g.components()) {
    if (comp.size() == 1) {
      order.push_back(comp.front());
      continue;
    }
    ComponentResult r = options.parallel ? search_component_parallel(g, comp) : search_component(g, comp);
    result.nodes_explored += r.nodes;
    if (!r.sequence) return result;
    order.insert(order.end(), r.sequence->begin(), r.sequence->end());
  }
  result.order = VertexOrder(std::move(order));
  return result;
}

}  // namespace r2m
