#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "json.hpp"
#include "syncwalk/chain.hpp"
#include "syncwalk/mapping.hpp"
#include "syncwalk/road.hpp"
#include "syncwalk/sync.hpp"

namespace syncwalk {

using Json = nlohmann::ordered_json;

/// Contents of a mapping-law file: the law plus an optional embedded
/// synchronizing word.
struct LawFile {
  MappingLaw law;
  std::optional<SyncWord> sync_word;
};

// Chain files: {"states": ["1","2"], "rows": [["1/2","1/2"], ...]} with
// entries parsed as rationals ("a/b", integers, terminating decimals).
TransitionMatrix chain_from_json(const Json& j);
Json chain_to_json(const TransitionMatrix& chain);

// Law files: {"states": [...], "support": [[3,1,1], ...] (1-based images,
// ordered by state), "probs": ["1/2", ...]}, optionally
// {"sync_word": [2,3,3,2] (1-based support indices, applied left to right),
//  "target": "3"}.
LawFile law_from_json(const Json& j);
Json law_to_json(const LawFile& file);

// Graph files: {"sites": [...], "roads": [{"id":..., "from":..., "to":...,
// "color": 1-based-optional}, ...], "color_probs": optional}.
struct GraphFile {
  RoadGraph graph;
  std::optional<RoadColoring> coloring;
  std::vector<Rational> color_probs;
};
GraphFile graph_from_json(const Json& j);
Json graph_to_json(const RoadGraph& graph, const RoadColoring* coloring,
                   const std::vector<Rational>* color_probs);

/// Parses a JSON document, rewrapping parse failures as ParseError with
/// the source position. name labels the stream in messages.
Json parse_json(std::istream& in, const std::string& name);
Json parse_json_text(const std::string& text, const std::string& name);

/// Rounds to 12 significant digits so serialized reports carry a fixed
/// precision.
double round_for_report(double value);

std::string format_probability_vector_entry(const Rational& q);

}  // namespace syncwalk
