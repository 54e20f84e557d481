#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "syncwalk/mapping.hpp"

namespace syncwalk {

/// One directed road of a multigraph; from/to are site indices.
struct Road {
  std::string id;
  int from = 0;
  int to = 0;
};

/// Directed multigraph over labeled sites. Parallel roads are first-class;
/// they carry distinct ids.
struct RoadGraph {
  std::vector<std::string> sites;
  std::vector<Road> roads;

  int site_count() const { return static_cast<int>(sites.size()); }
};

/// Partition of the roads into color classes: color[i] in [0, num_colors)
/// for roads[i]. Valid when each site has exactly one outgoing road of
/// each color.
struct RoadColoring {
  int num_colors = 0;
  std::vector<int> color;
};

/// Sequence of color indices; paths along it take the k-th road from the
/// k-th color, left to right.
using ColorWord = std::vector<int>;

struct ColoredGraph {
  RoadGraph graph;
  RoadColoring coloring;
  std::vector<Rational> color_probs;
};

/// The road graph induced by a mapping law: one road per (site, support
/// index), colored by support index, color k carrying probability mu(k).
ColoredGraph from_mapping_law(const MappingLaw& law);

/// Reads the coloring back into one mapping per color. Throws
/// InvalidColoring when some site/color pair lacks or duplicates a road.
std::vector<Mapping> to_mappings(const RoadGraph& graph,
                                 const RoadColoring& coloring);

struct ColorSyncWitness {
  ColorWord colors;
  int terminal = 0;
};

/// Witness color word along which all paths share one terminal site, or
/// empty when the coloring is not synchronizing.
std::optional<ColorSyncWitness> is_sync_coloring(const RoadGraph& graph,
                                                 const RoadColoring& coloring);

struct GraphProperties {
  bool constant_outdegree = false;
  bool strongly_connected = false;
  bool aperiodic = false;
};

/// The three hypotheses of the road coloring theorem, checked directly on
/// the underlying digraph.
GraphProperties graph_properties(const RoadGraph& graph);

/// Exhaustive search for a synchronizing coloring, lexicographic over
/// per-site road-to-color assignments; the first hit is returned. Empty
/// after exhausting the space (an anomaly when the graph is constant
/// outdegree, strongly connected and aperiodic). Throws InvalidGraph when
/// the outdegree is not constant, SearchSpaceTooLarge past cap.
std::optional<RoadColoring> brute_force_sync_coloring(
    const RoadGraph& graph, std::uint64_t cap = 1'000'000);

/// DOT rendering, one edge per road, label = road id, color index as edge
/// color. Output ordering is fixed (sites, then road ids) so repeated calls
/// are byte-identical.
std::string export_dot(const RoadGraph& graph,
                       const RoadColoring* coloring = nullptr);

}  // namespace syncwalk
