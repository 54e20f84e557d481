#include "syncwalk/road.hpp"

#include <algorithm>
#include <numeric>

#include "digraph.hpp"
#include "syncwalk/error.hpp"
#include "syncwalk/sync.hpp"

namespace syncwalk {

ColoredGraph from_mapping_law(const MappingLaw& law) {
  const int n = law.size();
  const int d = law.support_size();
  ColoredGraph out;
  out.graph.sites = law.states;
  out.coloring.num_colors = d;
  for (int x = 0; x < n; ++x) {
    for (int k = 0; k < d; ++k) {
      Road road;
      road.id = "a^(" + law.states[x] + "," + std::to_string(k + 1) + ")";
      road.from = x;
      road.to = law.support[k](x);
      out.graph.roads.push_back(std::move(road));
      out.coloring.color.push_back(k);
    }
  }
  out.color_probs = law.probs;
  return out;
}

std::vector<Mapping> to_mappings(const RoadGraph& graph,
                                 const RoadColoring& coloring) {
  const int n = graph.site_count();
  const int d = coloring.num_colors;
  if (coloring.color.size() != graph.roads.size()) {
    throw Error(ErrorCode::InvalidColoring,
                "coloring covers " + std::to_string(coloring.color.size()) +
                    " roads, the graph has " +
                    std::to_string(graph.roads.size()));
  }
  if (d <= 0) {
    throw Error(ErrorCode::InvalidColoring, "no colors");
  }
  std::vector<std::vector<int>> chosen(n, std::vector<int>(d, -1));
  for (std::size_t i = 0; i < graph.roads.size(); ++i) {
    const Road& road = graph.roads[i];
    const int c = coloring.color[i];
    if (c < 0 || c >= d) {
      throw Error(ErrorCode::InvalidColoring,
                  "road " + road.id + " has color index out of range");
    }
    if (chosen[road.from][c] != -1) {
      throw Error(ErrorCode::InvalidColoring,
                  "site " + graph.sites[road.from] +
                      " has two roads of color " + std::to_string(c + 1));
    }
    chosen[road.from][c] = static_cast<int>(i);
  }
  std::vector<Mapping> maps(d);
  for (int k = 0; k < d; ++k) {
    maps[k].images.resize(n);
    for (int x = 0; x < n; ++x) {
      if (chosen[x][k] == -1) {
        throw Error(ErrorCode::InvalidColoring,
                    "site " + graph.sites[x] + " has no road of color " +
                        std::to_string(k + 1));
      }
      maps[k].images[x] = graph.roads[chosen[x][k]].to;
    }
  }
  return maps;
}

std::optional<ColorSyncWitness> is_sync_coloring(
    const RoadGraph& graph, const RoadColoring& coloring) {
  std::vector<Mapping> maps = to_mappings(graph, coloring);
  auto word = find_sync_word(maps);
  if (!word) {
    return std::nullopt;
  }
  return ColorSyncWitness{std::move(word->indices), word->target};
}

GraphProperties graph_properties(const RoadGraph& graph) {
  const int n = graph.site_count();
  GraphProperties props;
  if (n == 0) {
    return props;
  }

  std::vector<int> outdegree(n, 0);
  std::vector<std::vector<int>> succ(n);
  std::vector<std::vector<int>> pred(n);
  for (const Road& road : graph.roads) {
    ++outdegree[road.from];
    succ[road.from].push_back(road.to);
    pred[road.to].push_back(road.from);
  }
  props.constant_outdegree =
      std::all_of(outdegree.begin(), outdegree.end(),
                  [&](int o) { return o == outdegree[0]; });
  props.strongly_connected = detail::strongly_connected(succ, pred);
  props.aperiodic = true;
  for (int x = 0; x < n; ++x) {
    if (detail::cycle_gcd_through(succ, pred, x) != 1) {
      props.aperiodic = false;
      break;
    }
  }
  return props;
}

std::optional<RoadColoring> brute_force_sync_coloring(const RoadGraph& graph,
                                                      std::uint64_t cap) {
  const int n = graph.site_count();
  if (n == 0 || graph.roads.empty()) {
    throw Error(ErrorCode::InvalidGraph, "empty graph");
  }

  std::vector<std::vector<int>> outgoing(n);
  for (std::size_t i = 0; i < graph.roads.size(); ++i) {
    outgoing[graph.roads[i].from].push_back(static_cast<int>(i));
  }
  const int d = static_cast<int>(outgoing[0].size());
  for (int x = 0; x < n; ++x) {
    if (static_cast<int>(outgoing[x].size()) != d) {
      throw Error(ErrorCode::InvalidGraph,
                  "outdegree is not constant: site " + graph.sites[x] +
                      " has " + std::to_string(outgoing[x].size()) +
                      " roads, site " + graph.sites[0] + " has " +
                      std::to_string(d));
    }
    // Deterministic enumeration order: roads sorted by id per site.
    std::sort(outgoing[x].begin(), outgoing[x].end(), [&](int a, int b) {
      return graph.roads[a].id < graph.roads[b].id;
    });
  }

  std::uint64_t factorial = 1;
  for (int k = 2; k <= d; ++k) {
    factorial *= k;
  }
  std::uint64_t total = 1;
  for (int x = 0; x < n; ++x) {
    if (total > cap / std::max<std::uint64_t>(factorial, 1)) {
      throw Error(ErrorCode::SearchSpaceTooLarge,
                  "more than " + std::to_string(cap) + " colorings");
    }
    total *= factorial;
  }

  std::vector<std::vector<int>> assignment(n);
  for (int x = 0; x < n; ++x) {
    assignment[x].resize(d);
    std::iota(assignment[x].begin(), assignment[x].end(), 0);
  }

  RoadColoring coloring;
  coloring.num_colors = d;
  coloring.color.assign(graph.roads.size(), 0);
  while (true) {
    for (int x = 0; x < n; ++x) {
      for (int j = 0; j < d; ++j) {
        coloring.color[outgoing[x][j]] = assignment[x][j];
      }
    }
    if (is_sync(to_mappings(graph, coloring))) {
      return coloring;
    }
    // Odometer over per-site permutations, rightmost site fastest.
    int x = n - 1;
    while (x >= 0 &&
           !std::next_permutation(assignment[x].begin(), assignment[x].end())) {
      --x;  // wrapped back to the identity permutation
    }
    if (x < 0) {
      return std::nullopt;
    }
  }
}

std::string export_dot(const RoadGraph& graph, const RoadColoring* coloring) {
  std::vector<int> order(graph.roads.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (graph.roads[a].id != graph.roads[b].id) {
      return graph.roads[a].id < graph.roads[b].id;
    }
    return a < b;
  });

  std::string out = "digraph roads {\n  rankdir=LR;\n";
  for (const auto& site : graph.sites) {
    out += "  \"" + site + "\";\n";
  }
  for (int i : order) {
    const Road& road = graph.roads[i];
    out += "  \"" + graph.sites[road.from] + "\" -> \"" +
           graph.sites[road.to] + "\" [label=\"" + road.id + "\"";
    if (coloring != nullptr) {
      const int c = coloring->color[i];
      out += " colorscheme=set19 color=" + std::to_string(c % 9 + 1);
    }
    out += "];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace syncwalk
