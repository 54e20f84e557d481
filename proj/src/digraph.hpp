#pragma once

#include <vector>

namespace syncwalk::detail {

/// BFS depths from start over adjacency lists; -1 marks unreachable nodes.
std::vector<int> bfs_depths(const std::vector<std::vector<int>>& adj,
                            int start);

bool strongly_connected(const std::vector<std::vector<int>>& succ,
                        const std::vector<std::vector<int>>& pred);

/// gcd of the lengths of all cycles through x (0 when x lies on no cycle),
/// from BFS depth differences within x's strongly connected component.
int cycle_gcd_through(const std::vector<std::vector<int>>& succ,
                      const std::vector<std::vector<int>>& pred, int x);

}  // namespace syncwalk::detail
