#pragma once

// Instance file format (UTF-8 JSON):
//   {"vertices":[{"id":0,"weight":"1","capacity":"2","multiplicity":1},...],
//    "edges":[{"id":0,"vertices":[0,1],"demand":"2"},...]}
// Rationals are strings ("3", "0.5", "7/3"); integers are also accepted
// as bare JSON numbers.

#include <json.hpp>

#include <istream>
#include <map>
#include <sstream>
#include <string>

#include "vchc/errors.hpp"
#include "vchc/instance.hpp"

namespace vchc {

using Json = nlohmann::json;

namespace detail {

inline Rational rational_field(const Json& obj, const char* key, const std::string& where) {
  const std::string loc = where + "/" + key;
  if (!obj.contains(key)) throw ParseError(loc, "missing field");
  const Json& value = obj.at(key);
  Rational r;
  if (value.is_string()) {
    try {
      r = Rational::parse(value.get<std::string>());
    } catch (const std::invalid_argument& ex) {
      throw ParseError(loc, ex.what());
    }
  } else if (value.is_number_integer()) {
    r = Rational(value.get<long>());
  } else {
    throw ParseError(loc, "expected a rational string");
  }
  if (r.is_negative()) throw ParseError(loc, "negative number");
  return r;
}

inline long integer_field(const Json& obj, const char* key, const std::string& where) {
  const std::string loc = where + "/" + key;
  if (!obj.contains(key)) throw ParseError(loc, "missing field");
  const Json& value = obj.at(key);
  long out = 0;
  if (value.is_number_integer()) {
    out = value.get<long>();
  } else if (value.is_string()) {
    try {
      Rational r = Rational::parse(value.get<std::string>());
      if (!r.is_integer()) throw ParseError(loc, "expected an integer");
      out = r.ceil();
    } catch (const std::invalid_argument& ex) {
      throw ParseError(loc, ex.what());
    }
  } else {
    throw ParseError(loc, "expected an integer");
  }
  if (out < 0) throw ParseError(loc, "negative number");
  return out;
}

}  // namespace detail

inline Instance instance_from_json(const Json& doc) {
  if (!doc.is_object()) throw ParseError("", "document must be a JSON object");
  if (!doc.contains("vertices") || !doc["vertices"].is_array()) throw ParseError("/vertices", "missing array");
  const Json empty = Json::array();
  const Json& edge_list = doc.contains("edges") ? doc["edges"] : empty;
  if (!edge_list.is_array()) throw ParseError("/edges", "expected an array");

  std::map<long, Vertex> vertices;
  for (std::size_t i = 0; i < doc["vertices"].size(); ++i) {
    const Json& item = doc["vertices"][i];
    const std::string where = "/vertices/" + std::to_string(i);
    if (!item.is_object()) throw ParseError(where, "expected an object");
    Vertex v;
    const long id = detail::integer_field(item, "id", where);
    v.id = static_cast<VertexId>(id);
    v.weight = detail::rational_field(item, "weight", where);
    v.capacity = detail::rational_field(item, "capacity", where);
    v.multiplicity = detail::integer_field(item, "multiplicity", where);
    if (!vertices.emplace(id, std::move(v)).second) throw ParseError(where + "/id", "duplicate vertex id");
  }
  std::vector<Vertex> vertex_list;
  for (auto& [id, v] : vertices) {
    if (id != static_cast<long>(vertex_list.size()))
      throw ParseError("/vertices", "vertex ids must be dense 0..|V|-1 (missing " +
                                        std::to_string(vertex_list.size()) + ")");
    vertex_list.push_back(std::move(v));
  }

  std::map<long, Edge> edges;
  for (std::size_t i = 0; i < edge_list.size(); ++i) {
    const Json& item = edge_list[i];
    const std::string where = "/edges/" + std::to_string(i);
    if (!item.is_object()) throw ParseError(where, "expected an object");
    Edge e;
    const long id = detail::integer_field(item, "id", where);
    e.id = static_cast<EdgeId>(id);
    e.demand = detail::rational_field(item, "demand", where);
    if (!item.contains("vertices") || !item["vertices"].is_array())
      throw ParseError(where + "/vertices", "missing array");
    for (std::size_t j = 0; j < item["vertices"].size(); ++j) {
      const Json& m = item["vertices"][j];
      const std::string mloc = where + "/vertices/" + std::to_string(j);
      if (!m.is_number_integer()) throw ParseError(mloc, "expected a vertex id");
      const long v = m.get<long>();
      if (v < 0 || v >= static_cast<long>(vertex_list.size()))
        throw ParseError(mloc, "unknown vertex " + std::to_string(v));
      e.members.push_back(static_cast<VertexId>(v));
    }
    if (e.members.empty()) throw ParseError(where + "/vertices", "edge has no vertices");
    std::sort(e.members.begin(), e.members.end());
    if (std::adjacent_find(e.members.begin(), e.members.end()) != e.members.end())
      throw ParseError(where + "/vertices", "duplicate vertex in edge");
    if (!edges.emplace(id, std::move(e)).second) throw ParseError(where + "/id", "duplicate edge id");
  }
  std::vector<Edge> edge_vec;
  for (auto& [id, e] : edges) {
    if (id != static_cast<long>(edge_vec.size()))
      throw ParseError("/edges", "edge ids must be dense 0..|E|-1 (missing " + std::to_string(edge_vec.size()) + ")");
    edge_vec.push_back(std::move(e));
  }
  return Instance(std::move(vertex_list), std::move(edge_vec));
}

/// Parses an instance document. Throws ParseError with a JSON-pointer location.
inline Instance parse_instance(std::istream& in) {
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& ex) {
    throw ParseError("", std::string("malformed JSON: ") + ex.what());
  }
  return instance_from_json(doc);
}

inline Instance parse_instance(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in);
}

inline Json instance_to_json(const Instance& inst) {
  Json vertices = Json::array();
  for (const Vertex& v : inst.vertices())
    vertices.push_back({{"id", v.id},
                        {"weight", v.weight.str()},
                        {"capacity", v.capacity.str()},
                        {"multiplicity", v.multiplicity}});
  Json edges = Json::array();
  for (const Edge& e : inst.edges()) edges.push_back({{"id", e.id}, {"vertices", e.members}, {"demand", e.demand.str()}});
  return {{"vertices", vertices}, {"edges", edges}};
}

/// Canonical form: keys sorted, rationals in lowest terms, two-space indent.
inline std::string serialize_instance(const Instance& inst) { return instance_to_json(inst).dump(2) + "\n"; }

}  // namespace vchc
