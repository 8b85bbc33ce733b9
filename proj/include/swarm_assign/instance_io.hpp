#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "swarm_assign/errors.hpp"
#include "swarm_assign/graph.hpp"

namespace swarm_assign {

/// Canonical JSON text for an instance. Node/edge order is canonical (sorted
/// by id), so equal graphs serialize to identical bytes.
inline std::string serialize(const TripartiteGraph& g) {
  nlohmann::ordered_json j;
  j["robots"] = nlohmann::ordered_json::array();
  for (const int r : g.robot_ids()) j["robots"].push_back({{"id", r}});
  j["primitives"] = nlohmann::ordered_json::array();
  for (const PrimitiveNode& p : g.primitives())
    j["primitives"].push_back({{"id", p.id}, {"robot", p.robot}});
  j["targets"] = nlohmann::ordered_json::array();
  for (const int t : g.target_ids()) j["targets"].push_back({{"id", t}});
  j["edges"] = nlohmann::ordered_json::array();
  for (const SensingEdge& e : g.edges())
    j["edges"].push_back({{"primitive", e.primitive}, {"target", e.target}, {"weight", e.weight}});
  return j.dump(2) + "\n";
}

namespace detail {

inline int require_int(const nlohmann::json& rec, const char* field, const std::string& where) {
  if (!rec.is_object() || !rec.contains(field))
    throw ParseError(where + ": missing field '" + field + "'");
  const auto& v = rec.at(field);
  if (!v.is_number_integer())
    throw ParseError(where + ": field '" + field + "' must be an integer");
  const long long n = v.get<long long>();
  if (n < 0) throw ParseError(where + ": field '" + field + "' must be non-negative");
  return static_cast<int>(n);
}

inline double require_weight(const nlohmann::json& rec, const std::string& where) {
  if (!rec.is_object() || !rec.contains("weight"))
    throw ParseError(where + ": missing field 'weight'");
  const auto& v = rec.at("weight");
  if (!v.is_number()) throw ParseError(where + ": field 'weight' must be a number");
  const double w = v.get<double>();
  if (!(w >= 0.0) || !std::isfinite(w))
    throw ParseError(where + ": negative or non-finite weight");
  return w;
}

inline const nlohmann::json& require_array(const nlohmann::json& j, const char* field) {
  if (!j.contains(field))
    throw ParseError(std::string("instance: missing section '") + field + "'");
  const auto& v = j.at(field);
  if (!v.is_array())
    throw ParseError(std::string("instance: section '") + field + "' must be an array");
  return v;
}

}  // namespace detail

inline TripartiteGraph parse_instance(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("instance: invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("instance: top level must be an object");

  std::vector<int> robots;
  std::vector<PrimitiveNode> prims;
  std::vector<int> targets;
  std::vector<SensingEdge> edges;

  const auto& jr = detail::require_array(j, "robots");
  for (std::size_t i = 0; i < jr.size(); ++i)
    robots.push_back(detail::require_int(jr[i], "id", "robots[" + std::to_string(i) + "]"));
  const auto& jp = detail::require_array(j, "primitives");
  for (std::size_t i = 0; i < jp.size(); ++i) {
    const std::string where = "primitives[" + std::to_string(i) + "]";
    prims.push_back({detail::require_int(jp[i], "id", where),
                     detail::require_int(jp[i], "robot", where)});
  }
  const auto& jt = detail::require_array(j, "targets");
  for (std::size_t i = 0; i < jt.size(); ++i)
    targets.push_back(detail::require_int(jt[i], "id", "targets[" + std::to_string(i) + "]"));
  const auto& je = detail::require_array(j, "edges");
  for (std::size_t i = 0; i < je.size(); ++i) {
    const std::string where = "edges[" + std::to_string(i) + "]";
    edges.push_back({detail::require_int(je[i], "primitive", where),
                     detail::require_int(je[i], "target", where),
                     detail::require_weight(je[i], where)});
  }

  try {
    return TripartiteGraph(std::move(robots), std::move(prims), std::move(targets),
                           std::move(edges));
  } catch (const Error& e) {
    throw ParseError(std::string("instance: ") + e.what());
  }
}

inline TripartiteGraph load_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open instance file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_instance(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

inline void save_instance(const TripartiteGraph& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write instance file: " + path);
  out << serialize(g);
}

}  // namespace swarm_assign
