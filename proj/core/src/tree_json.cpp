#include "hopfarb/tree_json.hpp"

#include <json.hpp>

#include "hopfarb/errors.hpp"

namespace hopfarb {

namespace {

using nlohmann::json;

json to_json_node(const PlaneTree& t, Vertex v) {
  json children = json::array();
  for (Vertex c : t.children(v)) children.push_back(to_json_node(t, c));
  return json{{"label", std::string(1, to_char(t.label(v)))},
              {"children", std::move(children)}};
}

void from_json_node(const json& j, std::optional<Vertex> parent,
                    std::vector<PlaneTree::VertexRecord>& records) {
  if (!j.is_object()) throw DomainError("tree node must be a JSON object");
  const auto label = j.find("label");
  if (label == j.end() || !label->is_string() ||
      (*label != "+" && *label != "-")) {
    throw DomainError("tree node needs \"label\": \"+\" or \"-\"");
  }
  const Vertex id = records.size();
  records.push_back({*label == "+" ? Sign::plus : Sign::minus, parent, {}});
  const auto children = j.find("children");
  if (children == j.end()) return;
  if (!children->is_array()) throw DomainError("\"children\" must be an array");
  for (const auto& c : *children) {
    records[id].children.push_back(records.size());
    from_json_node(c, id, records);
  }
}

}  // namespace

std::string tree_to_json(const PlaneTree& t) {
  return to_json_node(t, t.root()).dump();
}

PlaneTree tree_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("invalid JSON", e.byte == 0 ? 0 : e.byte - 1);
  }
  std::vector<PlaneTree::VertexRecord> records;
  from_json_node(j, std::nullopt, records);
  return PlaneTree::from_records(records);
}

}  // namespace hopfarb
