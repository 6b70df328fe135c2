#ifndef MTSP_IO_HPP
#define MTSP_IO_HPP

#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "mtsp/errors.hpp"
#include "mtsp/labeling.hpp"
#include "mtsp/objectives.hpp"
#include "mtsp/temporal_graph.hpp"

namespace mtsp::io {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

/// One entry of the objective config file.
struct ObjectiveConfig {
  std::string name;
  ObjectiveKind kind = ObjectiveKind::earliest_arrival;
  std::optional<Direction> direction;
  std::optional<std::string> key;

  friend bool operator==(const ObjectiveConfig&, const ObjectiveConfig&) = default;
};

namespace detail {

inline std::string field_error(const std::string& where, const std::string& what) { return where + ": " + what; }

inline std::string scalar_text(const json& v, const std::string& where) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<std::int64_t>());
  throw InputError(field_error(where, "expected a rational string"));
}

inline Rational rational_field(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) throw InputError(field_error(where, std::string("missing field '") + key + "'"));
  const std::string sub = where + "." + key;
  try {
    return parse_rational(scalar_text(obj.at(key), sub));
  } catch (const InputError& e) {
    throw InputError(field_error(sub, e.what()));
  }
}

inline std::string string_field(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key) || !obj.at(key).is_string()) {
    throw InputError(field_error(where, std::string("missing or non-string field '") + key + "'"));
  }
  return obj.at(key).get<std::string>();
}

}  // namespace detail

/// Parses JSON text; syntax errors are reported as "<origin>:<line>:<column>: ...".
inline json parse_json_text(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw InputError(origin + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + e.what());
  }
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline json load_json_file(const std::filesystem::path& path) { return parse_json_text(read_file(path), path.string()); }

inline void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path.string() + "'");
  out << text;
}

inline TemporalGraph graph_from_json(const json& doc) {
  if (!doc.is_object()) throw InputError("graph: expected a JSON object");
  GraphBuilder builder;
  if (doc.contains("nodes")) {
    const json& nodes = doc.at("nodes");
    if (!nodes.is_array()) throw InputError("graph.nodes: expected an array");
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (!nodes[i].is_string()) throw InputError("graph.nodes[" + std::to_string(i) + "]: expected a string");
      builder.add_node(nodes[i].get<std::string>());
    }
  }
  if (!doc.contains("arcs") || !doc.at("arcs").is_array()) throw InputError("graph: missing array 'arcs'");
  const json& arcs = doc.at("arcs");
  const bool closed_node_set = doc.contains("nodes");
  const TemporalGraph declared = builder.build();
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const std::string where = "graph.arcs[" + std::to_string(i) + "]";
    const json& a = arcs[i];
    if (!a.is_object()) throw InputError(where + ": expected an object");
    std::string id = detail::string_field(a, "id", where);
    std::string from = detail::string_field(a, "from", where);
    std::string to = detail::string_field(a, "to", where);
    for (const std::string* end : {&from, &to}) {
      if (closed_node_set && !declared.find_node(*end)) {
        throw InputError(where + ": node '" + *end + "' is not listed in 'nodes'");
      }
    }
    Rational tau = detail::rational_field(a, "tau", where);
    Rational lambda = detail::rational_field(a, "lambda", where);
    std::map<std::string, ObjectiveValue, std::less<>> values;
    if (a.contains("values")) {
      const json& vs = a.at("values");
      if (!vs.is_object()) throw InputError(where + ".values: expected an object");
      for (auto it = vs.begin(); it != vs.end(); ++it) {
        const std::string sub = where + ".values." + it.key();
        try {
          values.emplace(it.key(), parse_value(detail::scalar_text(it.value(), sub)));
        } catch (const InputError& e) {
          throw InputError(detail::field_error(sub, e.what()));
        }
      }
    }
    try {
      builder.add_arc(std::move(id), from, to, tau, lambda, std::move(values));
    } catch (const InputError& e) {
      throw InputError(where + ": " + e.what());
    }
  }
  return std::move(builder).build();
}

inline ordered_json graph_to_json(const TemporalGraph& g) {
  ordered_json doc;
  doc["nodes"] = ordered_json::array();
  for (NodeIndex v = 0; v < g.node_count(); ++v) doc["nodes"].push_back(g.node_name(v));
  doc["arcs"] = ordered_json::array();
  for (const TemporalArc& a : g.arcs()) {
    ordered_json arc;
    arc["id"] = a.id;
    arc["from"] = g.node_name(a.from);
    arc["to"] = g.node_name(a.to);
    arc["tau"] = to_string(a.tau);
    arc["lambda"] = to_string(a.lambda);
    arc["values"] = ordered_json::object();
    for (const auto& [name, value] : a.values) arc["values"][name] = to_string(value);
    doc["arcs"].push_back(std::move(arc));
  }
  return doc;
}

inline std::vector<ObjectiveConfig> objectives_from_json(const json& doc) {
  if (!doc.is_array()) throw InputError("objectives: expected an array");
  std::vector<ObjectiveConfig> out;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const std::string where = "objectives[" + std::to_string(i) + "]";
    const json& o = doc[i];
    if (!o.is_object()) throw InputError(where + ": expected an object");
    ObjectiveConfig c;
    c.name = detail::string_field(o, "name", where);
    try {
      c.kind = parse_objective_kind(detail::string_field(o, "kind", where));
    } catch (const ConfigError& e) {
      throw ConfigError(where + ": " + e.what());
    }
    if (o.contains("direction")) {
      std::string d = detail::string_field(o, "direction", where);
      if (d != "min" && d != "max") throw InputError(where + ".direction: expected \"min\" or \"max\"");
      c.direction = d == "min" ? Direction::min : Direction::max;
    }
    if (o.contains("params")) {
      const json& params = o.at("params");
      if (!params.is_object()) throw InputError(where + ".params: expected an object");
      for (auto it = params.begin(); it != params.end(); ++it) {
        if (it.key() != "key") throw ConfigError(where + ".params: unknown parameter '" + it.key() + "'");
      }
      if (params.contains("key")) c.key = detail::string_field(params, "key", where + ".params");
    }
    out.push_back(std::move(c));
  }
  return out;
}

inline ordered_json objectives_to_json(const std::vector<ObjectiveConfig>& configs) {
  ordered_json doc = ordered_json::array();
  for (const auto& c : configs) {
    ordered_json o;
    o["name"] = c.name;
    o["kind"] = std::string(to_string(c.kind));
    if (c.direction) o["direction"] = std::string(to_string(*c.direction));
    if (c.key) o["params"] = ordered_json{{"key", *c.key}};
    doc.push_back(std::move(o));
  }
  return doc;
}

inline ObjectiveSuite make_suite(const std::vector<ObjectiveConfig>& configs) {
  std::vector<ObjectiveSpec> specs;
  for (const auto& c : configs) specs.push_back(builtin(c.kind, c.name, {c.direction, c.key}));
  return ObjectiveSuite(std::move(specs));
}

/// {"node": "rational", ...}; every node needs an entry.
inline WaitingTimes waiting_from_json(const json& doc, const TemporalGraph& g) {
  if (!doc.is_object()) throw InputError("waiting: expected an object mapping node ids to rationals");
  WaitingTimes out(g.node_count());
  std::vector<bool> seen(g.node_count(), false);
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    NodeIndex v = g.node(it.key());
    const std::string where = "waiting." + it.key();
    try {
      out[v] = parse_rational(detail::scalar_text(it.value(), where));
    } catch (const InputError& e) {
      throw InputError(detail::field_error(where, e.what()));
    }
    seen[v] = true;
  }
  for (NodeIndex v = 0; v < g.node_count(); ++v) {
    if (!seen[v]) throw InputError("waiting: no entry for node '" + g.node_name(v) + "'");
  }
  return out;
}

inline ordered_json image_to_json(const Image& im) {
  ordered_json out = ordered_json::array();
  for (const auto& v : im.values()) out.push_back(to_string(v));
  return out;
}

inline ordered_json path_to_json(const TemporalGraph& g, const TemporalPath& p) {
  ordered_json out = ordered_json::array();
  for (ArcIndex r : p.arcs) out.push_back(g.arc(r).id);
  return out;
}

/// Result document: per node the (image, path) list, then run metadata.
inline ordered_json result_to_json(const TemporalGraph& g, const SolveResult& result, std::string_view result_kind) {
  ordered_json doc;
  doc["nodes"] = ordered_json::object();
  for (NodeIndex v = 0; v < g.node_count(); ++v) {
    ordered_json entries = ordered_json::array();
    for (const auto& sol : result.per_node[v]) {
      entries.push_back({{"image", image_to_json(sol.image)}, {"path", path_to_json(g, sol.path)}});
    }
    doc["nodes"][g.node_name(v)] = std::move(entries);
  }
  ordered_json meta;
  meta["iterations"] = result.iterations;
  meta["stop_reason"] = std::string(to_string(result.stop_reason));
  meta["effective_K"] = result.effective_K;
  meta["result_kind"] = std::string(result_kind);
  if (result.witness) {
    meta["witness_cycle"] = path_to_json(g, result.witness->cycle);
    meta["witness_objective"] = result.witness->objective;
    meta["witness_cycle_value"] = to_string(result.witness->cycle_value);
  }
  doc["metadata"] = std::move(meta);
  return doc;
}

}  // namespace mtsp::io

#endif  // MTSP_IO_HPP
