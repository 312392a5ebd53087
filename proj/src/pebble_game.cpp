#include <vector>

#include "r2m/graph.hpp"

namespace r2m {

namespace {

// (k, l) = (2, 3) pebble game: each vertex starts with two pebbles; an edge
// uv is accepted when four pebbles can be gathered on u and v, after which
// one pebble from u covers it and the edge is directed u -> v.
class PebbleGame {
 public:
  explicit PebbleGame(int n) : pebbles_(n, 2), out_(n) {}

  bool try_add(int u, int v) {
    while (pebbles_[u] < 2)
      if (!fetch(u, v)) break;
    while (pebbles_[v] < 2)
      if (!fetch(v, u)) break;
    if (pebbles_[u] + pebbles_[v] < 4) return false;
    --pebbles_[u];
    out_[u].push_back(v);
    return true;
  }

 private:
  // Moves one free pebble to `target` along a directed path that avoids
  // `keep`, reversing the path. Returns false if none is reachable.
  bool fetch(int target, int keep) {
    const int n = static_cast<int>(pebbles_.size());
    std::vector<int> from(n, -1);
    std::vector<char> seen(n, 0);
    seen[target] = seen[keep] = 1;
    std::vector<int> stack{target};
    int found = -1;
    while (!stack.empty() && found < 0) {
      const int x = stack.back();
      stack.pop_back();
      for (int y : out_[x]) {
        if (seen[y]) continue;
        seen[y] = 1;
        from[y] = x;
        if (pebbles_[y] > 0) {
          found = y;
          break;
        }
        stack.push_back(y);
      }
    }
    if (found < 0) return false;
    --pebbles_[found];
    ++pebbles_[target];
    for (int y = found; y != target; y = from[y]) reverse_arc(from[y], y);
    return true;
  }

  void reverse_arc(int a, int b) {
    auto& list = out_[a];
    for (std::size_t i = 0; i < list.size(); ++i)
      if (list[i] == b) {
        list[i] = list.back();
        list.pop_back();
        break;
      }
    out_[b].push_back(a);
  }

  std::vector<int> pebbles_;
  std::vector<std::vector<int>> out_;
};

}  // namespace

bool laman_sparse(const PatternGraph& g) {
  PebbleGame game(g.vertex_count());
  for (const auto& e : g.edges())
    if (!game.try_add(e.u, e.v)) return false;
  return true;
}

}  // namespace r2m
