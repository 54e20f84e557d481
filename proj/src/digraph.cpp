#include "digraph.hpp"

#include <deque>
#include <numeric>

namespace syncwalk::detail {

std::vector<int> bfs_depths(const std::vector<std::vector<int>>& adj,
                            int start) {
  std::vector<int> depth(adj.size(), -1);
  std::deque<int> queue;
  depth[start] = 0;
  queue.push_back(start);
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int v : adj[u]) {
      if (depth[v] < 0) {
        depth[v] = depth[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return depth;
}

bool strongly_connected(const std::vector<std::vector<int>>& succ,
                        const std::vector<std::vector<int>>& pred) {
  if (succ.empty()) {
    return false;
  }
  for (int d : bfs_depths(succ, 0)) {
    if (d < 0) {
      return false;
    }
  }
  for (int d : bfs_depths(pred, 0)) {
    if (d < 0) {
      return false;
    }
  }
  return true;
}

int cycle_gcd_through(const std::vector<std::vector<int>>& succ,
                      const std::vector<std::vector<int>>& pred, int x) {
  const int n = static_cast<int>(succ.size());
  std::vector<int> fwd = bfs_depths(succ, x);
  std::vector<int> bwd = bfs_depths(pred, x);
  std::vector<bool> in_scc(n, false);
  for (int v = 0; v < n; ++v) {
    in_scc[v] = fwd[v] >= 0 && bwd[v] >= 0;
  }
  int g = 0;
  for (int u = 0; u < n; ++u) {
    if (!in_scc[u]) {
      continue;
    }
    for (int v : succ[u]) {
      if (in_scc[v]) {
        g = std::gcd(g, fwd[u] + 1 - fwd[v]);
      }
    }
  }
  return g;
}

}  // namespace syncwalk::detail
