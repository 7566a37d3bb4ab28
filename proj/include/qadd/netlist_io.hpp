// Copyright 2026 The qadd Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/*!
  \file netlist_io.hpp
  \brief JSON document and Graphviz export of netlists

  Document layout (version 1), fields in this order:

    { "version": 1, "kind": <architecture>, "width": n,
      "params": { ... },
      "nodes": [ { "id", "kind", "inputs": [...], "const"?, "name"? }, ... ],
      "ports": { "A": [...], "B": [...], "cin": id, "S": [...], "cout": id },
      "signals": { name: id, ... } }

  Nodes appear in id order. Output is byte-stable for a given netlist.
*/

#pragma once

#include <sstream>
#include <string>
#include <string_view>

#include <json.hpp>

#include "errors.hpp"
#include "netlist.hpp"

namespace qadd {

inline constexpr int netlist_format_version = 1;

inline nlohmann::ordered_json to_json(const netlist& nl) {
  nl.validate();
  using json = nlohmann::ordered_json;
  json doc;
  doc["version"] = netlist_format_version;
  doc["kind"] = nl.architecture();
  doc["width"] = nl.width();
  json params = json::object();
  for (const auto& [key, value] : nl.params()) {
    params[key] = value;
  }
  doc["params"] = params;

  json nodes = json::array();
  for (node_id id = 0; id < nl.size(); ++id) {
    const auto& n = nl.at(id);
    json entry;
    entry["id"] = id;
    entry["kind"] = std::string(to_string(n.kind));
    entry["inputs"] = n.fanins;
    if (n.kind == gate_kind::constant) {
      entry["const"] = n.value.value();
    }
    if (n.kind == gate_kind::input) {
      entry["name"] = n.name;
    }
    nodes.push_back(std::move(entry));
  }
  doc["nodes"] = std::move(nodes);

  json ports;
  json a = json::array(), b = json::array(), s = json::array();
  for (std::size_t i = 1; i <= nl.width(); ++i) {
    a.push_back(nl.a(i));
    b.push_back(nl.b(i));
    s.push_back(nl.sum(i));
  }
  ports["A"] = std::move(a);
  ports["B"] = std::move(b);
  ports["cin"] = nl.cin();
  ports["S"] = std::move(s);
  ports["cout"] = nl.cout();
  doc["ports"] = std::move(ports);

  json signals = json::object();
  for (const auto& [name, id] : nl.signals()) {
    signals[name] = id;
  }
  doc["signals"] = std::move(signals);
  return doc;
}

inline std::string export_json(const netlist& nl) { return to_json(nl).dump(2) + "\n"; }

/// Render-ready Graphviz digraph: one vertex per node, one edge per fan-in.
inline std::string export_dot(const netlist& nl) {
  std::ostringstream os;
  os << "digraph \"" << nl.architecture() << "_" << nl.width() << "\" {\n";
  os << "  rankdir=LR;\n";
  for (node_id id = 0; id < nl.size(); ++id) {
    const auto& n = nl.at(id);
    os << "  n" << id << " [label=\"";
    switch (n.kind) {
      case gate_kind::input: os << n.name << "\", shape=box"; break;
      case gate_kind::constant: os << n.value << "\", shape=plaintext"; break;
      default: os << to_string(n.kind) << "\", shape=ellipse"; break;
    }
    os << "];\n";
  }
  for (node_id id = 0; id < nl.size(); ++id) {
    for (auto f : nl.at(id).fanins) {
      os << "  n" << f << " -> n" << id << ";\n";
    }
  }
  for (std::size_t i = 1; i <= nl.width(); ++i) {
    os << "  S" << i << " [shape=box];\n  n" << nl.sum(i) << " -> S" << i << ";\n";
  }
  os << "  cout [shape=box];\n  n" << nl.cout() << " -> cout;\n";
  os << "}\n";
  return os.str();
}

namespace detail {

template<class Json>
const Json& field(const Json& object, const char* name) {
  if (!object.is_object() || !object.contains(name)) {
    throw parse_error(std::string("missing field '") + name + "'");
  }
  return object.at(name);
}

template<class Json>
std::int64_t integer(const Json& value, const char* what) {
  if (!value.is_number_integer()) {
    throw parse_error(std::string("field '") + what + "' must be an integer");
  }
  return value.template get<std::int64_t>();
}

inline node_id reference(std::int64_t id, std::size_t count, std::string_view what) {
  if (id < 0 || static_cast<std::size_t>(id) >= count) {
    throw dangling_reference(std::string(what) + " refers to missing node " + std::to_string(id));
  }
  return static_cast<node_id>(id);
}

}  // namespace detail

/// Parses and validates a netlist document. Errors are distinct per cause:
/// parse_error (malformed), version_error, dangling_reference, cycle_error,
/// arity_error.
inline netlist import_json(std::string_view text) {
  using json = nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw parse_error(std::string("malformed netlist document: ") + e.what());
  }
  if (!doc.is_object()) {
    throw parse_error("netlist document must be an object");
  }
  const auto version = detail::integer(detail::field(doc, "version"), "version");
  if (version != netlist_format_version) {
    throw version_error("unsupported netlist version " + std::to_string(version));
  }
  const auto& kind = detail::field(doc, "kind");
  if (!kind.is_string()) {
    throw parse_error("field 'kind' must be a string");
  }
  const auto width = detail::integer(detail::field(doc, "width"), "width");
  if (width < 1) {
    throw parse_error("width must be positive");
  }
  const auto n = static_cast<std::size_t>(width);

  netlist nl(n, kind.get<std::string>(), false);
  const auto& params = detail::field(doc, "params");
  if (!params.is_object()) {
    throw parse_error("field 'params' must be an object");
  }
  for (const auto& [key, value] : params.items()) {
    nl.set_param(key, detail::integer(value, "params"));
  }

  const auto& nodes = detail::field(doc, "nodes");
  if (!nodes.is_array()) {
    throw parse_error("field 'nodes' must be an array");
  }
  const auto count = nodes.size();
  const auto inputs = 2 * n + 1;
  if (count < inputs) {
    throw parse_error("document has fewer nodes than input ports");
  }
  for (std::size_t id = 0; id < count; ++id) {
    const auto& entry = nodes[id];
    if (static_cast<std::size_t>(detail::integer(detail::field(entry, "id"), "id")) != id) {
      throw parse_error("node ids must be dense and in order at position " + std::to_string(id));
    }
    const auto& kind_text = detail::field(entry, "kind");
    const auto kind = kind_text.is_string() ? gate_kind_from_string(kind_text.get<std::string>()) : std::nullopt;
    if (!kind) {
      throw parse_error("unknown gate kind at node " + std::to_string(id));
    }
    const auto& fanin_list = detail::field(entry, "inputs");
    if (!fanin_list.is_array()) {
      throw parse_error("field 'inputs' must be an array at node " + std::to_string(id));
    }
    std::vector<node_id> fanins;
    for (const auto& f : fanin_list) {
      const auto ref = detail::reference(detail::integer(f, "inputs"), count, "node " + std::to_string(id));
      if (ref >= id) {
        throw cycle_error("node " + std::to_string(id) + " reads node " + std::to_string(ref) +
                          ", which is not earlier in topological order");
      }
      fanins.push_back(ref);
    }
    check_arity(*kind, fanins.size());

    if (id < inputs) {
      const auto& name = detail::field(entry, "name");
      if (*kind != gate_kind::input || !name.is_string() || name.get<std::string>() != nl.at(static_cast<node_id>(id)).name) {
        throw parse_error("node " + std::to_string(id) + " must be input port " + nl.at(static_cast<node_id>(id)).name);
      }
      continue;
    }
    node fresh;
    fresh.kind = *kind;
    fresh.fanins = std::move(fanins);
    if (*kind == gate_kind::input) {
      throw parse_error("input nodes are only allowed at the port positions");
    }
    if (*kind == gate_kind::constant) {
      const auto value = detail::integer(detail::field(entry, "const"), "const");
      if (value < 0 || value > 3) {
        throw parse_error("constant out of range at node " + std::to_string(id));
      }
      fresh.value = qudit{static_cast<int>(value)};
    }
    nl.append_raw(std::move(fresh));
  }

  const auto& ports = detail::field(doc, "ports");
  auto port_list = [&](const char* name) {
    const auto& list = detail::field(ports, name);
    if (!list.is_array() || list.size() != n) {
      throw parse_error(std::string("port list '") + name + "' must have one entry per qudit");
    }
    std::vector<node_id> ids;
    for (const auto& v : list) {
      ids.push_back(detail::reference(detail::integer(v, name), count, std::string("port ") + name));
    }
    return ids;
  };
  const auto a = port_list("A");
  const auto b = port_list("B");
  const auto s = port_list("S");
  const auto cin = detail::reference(detail::integer(detail::field(ports, "cin"), "cin"), count, "port cin");
  const auto cout = detail::reference(detail::integer(detail::field(ports, "cout"), "cout"), count, "port cout");
  for (std::size_t i = 1; i <= n; ++i) {
    if (a[i - 1] != nl.a(i) || b[i - 1] != nl.b(i)) {
      throw parse_error("input ports must reference the input nodes in port order");
    }
    nl.set_sum(i, s[i - 1]);
  }
  if (cin != nl.cin()) {
    throw parse_error("port cin must reference the cin input node");
  }
  nl.set_cout(cout);

  if (doc.contains("signals")) {
    const auto& signals = doc.at("signals");
    if (!signals.is_object()) {
      throw parse_error("field 'signals' must be an object");
    }
    for (const auto& [name, value] : signals.items()) {
      nl.name_signal(name, detail::reference(detail::integer(value, "signals"), count, "signal " + name));
    }
  }
  return nl;
}

}  // namespace qadd
