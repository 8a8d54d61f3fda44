#include <fstream>
#include <sstream>
#include <stdexcept>

#include "carpetdim/carpet.hpp"
#include "json.hpp"

namespace carpetdim {

namespace {

using nlohmann::json;

std::vector<double> ratio_list(const json& doc, const char* key) {
  if (!doc.contains(key)) throw std::runtime_error(std::string("missing field \"") + key + "\"");
  const json& arr = doc.at(key);
  if (!arr.is_array()) throw std::runtime_error(std::string("field \"") + key + "\" must be an array");
  std::vector<double> out;
  out.reserve(arr.size());
  for (const json& v : arr) {
    if (!v.is_number()) throw std::runtime_error(std::string("field \"") + key + "\" must hold numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

}  // namespace

CarpetSpec carpet_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(std::string("carpet file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw std::runtime_error("carpet file must be a JSON object");

  CarpetSpec spec;
  spec.widths = ratio_list(doc, "widths");
  spec.heights = ratio_list(doc, "heights");

  if (!doc.contains("cells")) throw std::runtime_error("missing field \"cells\"");
  const json& cells = doc.at("cells");
  if (!cells.is_array()) throw std::runtime_error("field \"cells\" must be an array");
  for (const json& pair : cells) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
        !pair[1].is_number_integer())
      throw std::runtime_error("field \"cells\" must hold [column,row] integer pairs");
    spec.cells.push_back(Cell{pair[0].get<int>(), pair[1].get<int>()});
  }

  if (doc.contains("allow_gaps")) {
    if (!doc.at("allow_gaps").is_boolean())
      throw std::runtime_error("field \"allow_gaps\" must be a boolean");
    spec.allow_gaps = doc.at("allow_gaps").get<bool>();
  }

  for (const auto& [key, _] : doc.items())
    if (key != "widths" && key != "heights" && key != "cells" && key != "allow_gaps")
      throw std::runtime_error("unknown field \"" + key + "\"");

  return spec;
}

std::string carpet_to_json(const CarpetSpec& spec) {
  nlohmann::ordered_json doc;
  doc["widths"] = spec.widths;
  doc["heights"] = spec.heights;
  nlohmann::ordered_json cells = nlohmann::ordered_json::array();
  for (const Cell& c : spec.cells) cells.push_back({c.col, c.row});
  doc["cells"] = cells;
  doc["allow_gaps"] = spec.allow_gaps;
  return doc.dump();
}

CarpetSpec load_carpet_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open carpet file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return carpet_from_json(buf.str());
}

}  // namespace carpetdim
