#pragma once

// Graph files:
//
//   { "initial": 0,
//     "exit": "e",
//     "vertices": [
//       { "id": 0, "label": { "kind": "and" }, "succ": [1, 2], "priority": 2 },
//       { "id": 2, "label": { "kind": "lit", "atom": "e", "neg": false }, "succ": [] },
//       { "id": 1, "label": { "kind": "dia", "game": "g", "dual": false }, "succ": [0] } ] }
//
// "exit" and "priority" are optional; ids must be exactly 0..n-1 in any
// order. Arity violations are rejected here rather than repaired.

#include <string>
#include <vector>

#include "glw/io_common.hpp"
#include "glw/syntax_graph.hpp"

namespace glw {

inline SyntaxGraph graph_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
    throw SchemaError("graph: expected an object with a \"vertices\" array");
  const Json& vs = j["vertices"];
  int n = static_cast<int>(vs.size());
  if (n == 0) throw SchemaError("graph: at least one vertex is required");

  SyntaxGraph g;
  g.label.assign(n, VertexLabel{});
  g.succ.assign(n, {});
  g.priority.assign(n, kNoPriority);
  std::vector<bool> seen(n, false);

  for (const auto& v : vs) {
    if (!v.is_object() || !v.contains("id") || !v["id"].is_number_integer())
      throw SchemaError("graph: each vertex needs an integer \"id\"");
    int id = v["id"].get<int>();
    if (id < 0 || id >= n) throw SchemaError("graph: id " + std::to_string(id) + " out of range (ids must be 0..n-1)");
    if (seen[id]) throw SchemaError("graph: duplicate id " + std::to_string(id));
    seen[id] = true;
    std::string at = "vertex " + std::to_string(id);

    if (!v.contains("label") || !v["label"].is_object() || !v["label"].contains("kind") ||
        !v["label"]["kind"].is_string())
      throw SchemaError("graph: " + at + ": missing label kind");
    const Json& l = v["label"];
    std::string kind = l["kind"].get<std::string>();
    if (kind == "lit") {
      if (!l.contains("atom") || !l["atom"].is_string()) throw SchemaError("graph: " + at + ": lit needs \"atom\"");
      bool neg = false;
      if (l.contains("neg")) {
        if (!l["neg"].is_boolean()) throw SchemaError("graph: " + at + ": \"neg\" must be boolean");
        neg = l["neg"].get<bool>();
      }
      g.label[id] = lit_label(l["atom"].get<std::string>(), neg);
    } else if (kind == "and") {
      g.label[id] = and_label();
    } else if (kind == "or") {
      g.label[id] = or_label();
    } else if (kind == "dia") {
      if (!l.contains("game") || !l["game"].is_string()) throw SchemaError("graph: " + at + ": dia needs \"game\"");
      bool dual = false;
      if (l.contains("dual")) {
        if (!l["dual"].is_boolean()) throw SchemaError("graph: " + at + ": \"dual\" must be boolean");
        dual = l["dual"].get<bool>();
      }
      g.label[id] = dia_label(l["game"].get<std::string>(), dual);
    } else {
      throw SchemaError("graph: " + at + ": unknown label kind \"" + kind + "\"");
    }

    if (!v.contains("succ") || !v["succ"].is_array()) throw SchemaError("graph: " + at + ": missing \"succ\" array");
    for (const auto& s : v["succ"]) {
      if (!s.is_number_integer()) throw SchemaError("graph: " + at + ": successors must be integers");
      int t = s.get<int>();
      if (t < 0 || t >= n) throw SchemaError("graph: " + at + ": dangling successor " + std::to_string(t));
      g.succ[id].push_back(t);
    }
    if (static_cast<int>(g.succ[id].size()) != label_arity(g.label[id]))
      throw SchemaError("graph: " + at + ": label expects " + std::to_string(label_arity(g.label[id])) +
                        " successors, found " + std::to_string(g.succ[id].size()));

    if (v.contains("priority") && !v["priority"].is_null()) {
      if (!v["priority"].is_number_integer() || v["priority"].get<int>() < 0)
        throw SchemaError("graph: " + at + ": priority must be a non-negative integer");
      g.priority[id] = v["priority"].get<int>();
    }
  }

  if (!j.contains("initial") || !j["initial"].is_number_integer())
    throw SchemaError("graph: missing integer \"initial\"");
  g.initial = j["initial"].get<int>();
  if (g.initial < 0 || g.initial >= n) throw SchemaError("graph: initial out of range");

  if (j.contains("exit") && !j["exit"].is_null()) {
    if (!j["exit"].is_string()) throw SchemaError("graph: \"exit\" must be a string");
    g.exit = j["exit"].get<std::string>();
  }
  return g;
}

inline Json graph_to_json(const SyntaxGraph& g) {
  Json j;
  j["initial"] = g.initial;
  if (g.exit) j["exit"] = *g.exit;
  Json vs = Json::array();
  for (int v = 0; v < g.size(); ++v) {
    Json one;
    one["id"] = v;
    Json l;
    switch (g.label[v].kind) {
      case LabelKind::Lit:
        l["kind"] = "lit";
        l["atom"] = g.label[v].name;
        l["neg"] = g.label[v].negated;
        break;
      case LabelKind::And: l["kind"] = "and"; break;
      case LabelKind::Or: l["kind"] = "or"; break;
      case LabelKind::Dia:
        l["kind"] = "dia";
        l["game"] = g.label[v].name;
        l["dual"] = g.label[v].dual;
        break;
    }
    one["label"] = std::move(l);
    one["succ"] = g.succ[v];
    if (g.has_priority(v)) one["priority"] = g.priority[v];
    vs.push_back(std::move(one));
  }
  j["vertices"] = std::move(vs);
  return j;
}

inline SyntaxGraph read_graph(const std::string& path) { return graph_from_json(load_json_file(path)); }

inline void write_graph(const std::string& path, const SyntaxGraph& g) { save_json_file(path, graph_to_json(g)); }

// Graphviz rendering: conjunction and disjunction glyphs with priority
// subscripts, diamonds for modal vertices, double circles for exit
// literals, and an arrow head marking the initial vertex.
inline std::string export_dot(const SyntaxGraph& g) {
  std::string out = "digraph syntax_graph {\n  rankdir=TB;\n  node [shape=circle, fontsize=12];\n";
  out += "  init [shape=none, label=\"\", width=0, height=0];\n";
  for (int v = 0; v < g.size(); ++v) {
    std::string text;
    switch (g.label[v].kind) {
      case LabelKind::Lit: text = (g.label[v].negated ? "\xc2\xac" : "") + g.label[v].name; break;
      case LabelKind::And: text = "\xe2\x88\xa7"; break;
      case LabelKind::Or: text = "\xe2\x88\xa8"; break;
      case LabelKind::Dia:
        text = "\xe2\x9f\xa8" + g.label[v].name + (g.label[v].dual ? "^d" : "") + "\xe2\x9f\xa9";
        break;
    }
    if (g.has_priority(v)) text += "_" + std::to_string(g.priority[v]);
    out += "  v" + std::to_string(v) + " [label=\"" + text + "\"";
    if (g.is_exit_vertex(v)) out += ", shape=doublecircle";
    out += "];\n";
  }
  out += "  init -> v" + std::to_string(g.initial) + ";\n";
  for (int v = 0; v < g.size(); ++v)
    for (int w : g.succ[v]) out += "  v" + std::to_string(v) + " -> v" + std::to_string(w) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace glw
