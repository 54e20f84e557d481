#include "syncwalk/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <istream>

#include "syncwalk/error.hpp"

namespace syncwalk {

namespace {

Rational entry_from_json(const Json& value, const char* what) {
  if (value.is_string()) {
    return parse_rational(value.get<std::string>());
  }
  if (value.is_number_integer()) {
    return Rational(value.get<long>());
  }
  throw Error(ErrorCode::ParseError,
              std::string(what) +
                  " must be a rational string (\"a/b\") or an integer");
}

std::vector<std::string> labels_from_json(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_array() || j.at(key).empty()) {
    throw Error(ErrorCode::ParseError,
                std::string("missing or empty \"") + key + "\" array");
  }
  std::vector<std::string> labels;
  for (const auto& item : j.at(key)) {
    if (!item.is_string()) {
      throw Error(ErrorCode::ParseError,
                  std::string("\"") + key + "\" entries must be strings");
    }
    labels.push_back(item.get<std::string>());
  }
  return labels;
}

}  // namespace

TransitionMatrix chain_from_json(const Json& j) {
  std::vector<std::string> states = labels_from_json(j, "states");
  const int n = static_cast<int>(states.size());
  if (!j.contains("rows") || !j.at("rows").is_array()) {
    throw Error(ErrorCode::ParseError, "missing \"rows\" array");
  }
  const Json& rows_json = j.at("rows");
  if (static_cast<int>(rows_json.size()) != n) {
    throw Error(ErrorCode::SizeMismatch,
                "expected " + std::to_string(n) + " rows, got " +
                    std::to_string(rows_json.size()));
  }
  RationalMatrix rows(n, n);
  for (int x = 0; x < n; ++x) {
    const Json& row = rows_json.at(x);
    if (!row.is_array() || static_cast<int>(row.size()) != n) {
      throw Error(ErrorCode::SizeMismatch,
                  "row " + std::to_string(x + 1) + " must have " +
                      std::to_string(n) + " entries");
    }
    for (int y = 0; y < n; ++y) {
      rows(x, y) = entry_from_json(row.at(y), "matrix entry");
    }
  }
  return validate_chain(std::move(states), std::move(rows));
}

Json chain_to_json(const TransitionMatrix& chain) {
  Json j;
  j["states"] = chain.states;
  Json rows = Json::array();
  for (int x = 0; x < chain.size(); ++x) {
    Json row = Json::array();
    for (int y = 0; y < chain.size(); ++y) {
      row.push_back(format_rational(chain(x, y)));
    }
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j;
}

LawFile law_from_json(const Json& j) {
  std::vector<std::string> states = labels_from_json(j, "states");
  const int n = static_cast<int>(states.size());
  if (!j.contains("support") || !j.at("support").is_array()) {
    throw Error(ErrorCode::ParseError, "missing \"support\" array");
  }
  if (!j.contains("probs") || !j.at("probs").is_array()) {
    throw Error(ErrorCode::ParseError, "missing \"probs\" array");
  }

  std::vector<Mapping> support;
  for (const auto& images_json : j.at("support")) {
    if (!images_json.is_array() ||
        static_cast<int>(images_json.size()) != n) {
      throw Error(ErrorCode::ParseError,
                  "each support row must list " + std::to_string(n) +
                      " 1-based images");
    }
    Mapping m;
    for (const auto& image : images_json) {
      if (!image.is_number_integer()) {
        throw Error(ErrorCode::ParseError, "images must be integers");
      }
      const long v = image.get<long>();
      if (v < 1 || v > n) {
        throw Error(ErrorCode::ParseError,
                    "image " + std::to_string(v) + " outside 1.." +
                        std::to_string(n));
      }
      m.images.push_back(static_cast<int>(v - 1));
    }
    support.push_back(std::move(m));
  }

  std::vector<Rational> probs;
  for (const auto& p : j.at("probs")) {
    probs.push_back(entry_from_json(p, "probability"));
  }

  LawFile file;
  file.law = make_mapping_law(std::move(states), std::move(support),
                              std::move(probs));

  if (j.contains("sync_word")) {
    if (!j.at("sync_word").is_array() || j.at("sync_word").empty()) {
      throw Error(ErrorCode::ParseError,
                  "\"sync_word\" must be a nonempty array");
    }
    SyncWord word;
    for (const auto& idx : j.at("sync_word")) {
      if (!idx.is_number_integer()) {
        throw Error(ErrorCode::ParseError,
                    "sync word entries must be integers");
      }
      const long v = idx.get<long>();
      if (v < 1 || v > file.law.support_size()) {
        throw Error(ErrorCode::ParseError,
                    "sync word index " + std::to_string(v) +
                        " outside the support");
      }
      word.indices.push_back(static_cast<int>(v - 1));
    }
    if (!j.contains("target") || !j.at("target").is_string()) {
      throw Error(ErrorCode::ParseError,
                  "\"sync_word\" needs a \"target\" state label");
    }
    const std::string target = j.at("target").get<std::string>();
    int target_index = -1;
    for (int i = 0; i < file.law.size(); ++i) {
      if (file.law.states[i] == target) {
        target_index = i;
        break;
      }
    }
    if (target_index < 0) {
      throw Error(ErrorCode::ParseError,
                  "target \"" + target + "\" is not a state");
    }
    word.target = target_index;
    file.sync_word = std::move(word);
  }
  return file;
}

Json law_to_json(const LawFile& file) {
  Json j;
  j["states"] = file.law.states;
  Json support = Json::array();
  for (const auto& m : file.law.support) {
    Json images = Json::array();
    for (int image : m.images) {
      images.push_back(image + 1);
    }
    support.push_back(std::move(images));
  }
  j["support"] = std::move(support);
  Json probs = Json::array();
  for (const auto& p : file.law.probs) {
    probs.push_back(format_rational(p));
  }
  j["probs"] = std::move(probs);
  if (file.sync_word) {
    Json word = Json::array();
    for (int idx : file.sync_word->indices) {
      word.push_back(idx + 1);
    }
    j["sync_word"] = std::move(word);
    j["target"] = file.law.states[file.sync_word->target];
  }
  return j;
}

GraphFile graph_from_json(const Json& j) {
  GraphFile file;
  file.graph.sites = labels_from_json(j, "sites");
  if (!j.contains("roads") || !j.at("roads").is_array() ||
      j.at("roads").empty()) {
    throw Error(ErrorCode::ParseError, "missing or empty \"roads\" array");
  }

  auto site_index = [&](const std::string& label) {
    for (int i = 0; i < file.graph.site_count(); ++i) {
      if (file.graph.sites[i] == label) {
        return i;
      }
    }
    throw Error(ErrorCode::ParseError, "unknown site \"" + label + "\"");
  };

  std::vector<int> colors;
  bool any_color = false;
  for (const auto& road_json : j.at("roads")) {
    if (!road_json.is_object() || !road_json.contains("id") ||
        !road_json.contains("from") || !road_json.contains("to")) {
      throw Error(ErrorCode::ParseError,
                  "each road needs \"id\", \"from\", \"to\"");
    }
    Road road;
    road.id = road_json.at("id").get<std::string>();
    road.from = site_index(road_json.at("from").get<std::string>());
    road.to = site_index(road_json.at("to").get<std::string>());
    file.graph.roads.push_back(std::move(road));
    if (road_json.contains("color")) {
      any_color = true;
      const long c = road_json.at("color").get<long>();
      if (c < 1) {
        throw Error(ErrorCode::ParseError, "colors are 1-based");
      }
      colors.push_back(static_cast<int>(c - 1));
    } else {
      colors.push_back(-1);
    }
  }

  if (any_color) {
    RoadColoring coloring;
    coloring.color = std::move(colors);
    for (int c : coloring.color) {
      if (c < 0) {
        throw Error(ErrorCode::ParseError,
                    "either all roads carry a color or none");
      }
      coloring.num_colors = std::max(coloring.num_colors, c + 1);
    }
    file.coloring = std::move(coloring);
  }

  if (j.contains("color_probs")) {
    for (const auto& p : j.at("color_probs")) {
      file.color_probs.push_back(entry_from_json(p, "color probability"));
    }
  }
  return file;
}

Json graph_to_json(const RoadGraph& graph, const RoadColoring* coloring,
                   const std::vector<Rational>* color_probs) {
  Json j;
  j["sites"] = graph.sites;
  Json roads = Json::array();
  for (std::size_t i = 0; i < graph.roads.size(); ++i) {
    const Road& road = graph.roads[i];
    Json rj;
    rj["id"] = road.id;
    rj["from"] = graph.sites[road.from];
    rj["to"] = graph.sites[road.to];
    if (coloring != nullptr) {
      rj["color"] = coloring->color[i] + 1;
    }
    roads.push_back(std::move(rj));
  }
  j["roads"] = std::move(roads);
  if (color_probs != nullptr && !color_probs->empty()) {
    Json probs = Json::array();
    for (const auto& p : *color_probs) {
      probs.push_back(format_rational(p));
    }
    j["color_probs"] = std::move(probs);
  }
  return j;
}

Json parse_json(std::istream& in, const std::string& name) {
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, name + ": " + e.what());
  }
}

Json parse_json_text(const std::string& text, const std::string& name) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, name + ": " + e.what());
  }
}

double round_for_report(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return std::strtod(buffer, nullptr);
}

std::string format_probability_vector_entry(const Rational& q) {
  return format_rational(q);
}

}  // namespace syncwalk
