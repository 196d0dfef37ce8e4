#pragma once

// Syntax graphs: vertex-labelled graphs with a partial priority map, an
// initial vertex and an optional exit letter. Vertices are labelled with a
// literal, a binary conjunction or disjunction, or a diamond over an atomic
// game (possibly dualised); the label fixes the out-degree.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace glw {

enum class LabelKind { Lit, And, Or, Dia };

struct VertexLabel {
  LabelKind kind;
  std::string name;      // atom (Lit) or game (Dia)
  bool negated = false;  // Lit
  bool dual = false;     // Dia

  bool operator==(const VertexLabel&) const = default;
};

inline VertexLabel lit_label(std::string atom, bool negated = false) {
  return {LabelKind::Lit, std::move(atom), negated, false};
}
inline VertexLabel and_label() { return {LabelKind::And, "", false, false}; }
inline VertexLabel or_label() { return {LabelKind::Or, "", false, false}; }
inline VertexLabel dia_label(std::string game, bool dual = false) {
  return {LabelKind::Dia, std::move(game), false, dual};
}

inline int label_arity(const VertexLabel& l) {
  switch (l.kind) {
    case LabelKind::Lit: return 0;
    case LabelKind::And:
    case LabelKind::Or: return 2;
    case LabelKind::Dia: return 1;
  }
  return 0;
}

constexpr int kNoPriority = -1;

struct SyntaxGraph {
  std::vector<VertexLabel> label;
  std::vector<std::vector<int>> succ;
  std::vector<int> priority;  // kNoPriority where undefined
  int initial = 0;
  std::optional<std::string> exit;

  int size() const { return static_cast<int>(label.size()); }

  int add_vertex(VertexLabel l, std::vector<int> successors = {}, int prio = kNoPriority) {
    label.push_back(std::move(l));
    succ.push_back(std::move(successors));
    priority.push_back(prio);
    return size() - 1;
  }

  bool has_priority(int v) const { return priority[v] != kNoPriority; }

  bool is_exit_vertex(int v) const {
    return exit && label[v].kind == LabelKind::Lit && !label[v].negated && label[v].name == *exit;
  }
};

struct GraphReport {
  bool wellformed = true;       // indices in range, initial valid, priorities >= 0
  bool arity_ok = true;         // |succ(v)| = arity(label(v)), successors pairwise distinct
  bool priority_ok = true;      // priority-free induced subgraph is acyclic
  bool exit_ok = true;          // declared exit labels some vertex, never negated
  std::vector<std::string> problems;
  std::vector<int> priority_cycle;  // first priority-free cycle found, if any

  bool ok() const { return wellformed && arity_ok && priority_ok && exit_ok; }
};

inline GraphReport validate_graph(const SyntaxGraph& g) {
  GraphReport r;
  int n = g.size();
  auto complain = [&](bool& flag, const std::string& msg) {
    flag = false;
    r.problems.push_back(msg);
  };

  if (n == 0) complain(r.wellformed, "graph has no vertices");
  if (n > 0 && (g.initial < 0 || g.initial >= n)) complain(r.wellformed, "initial vertex out of range");
  if (static_cast<int>(g.succ.size()) != n || static_cast<int>(g.priority.size()) != n)
    complain(r.wellformed, "ragged vertex data");

  for (int v = 0; v < n && r.wellformed; ++v) {
    for (int w : g.succ[v])
      if (w < 0 || w >= n) complain(r.wellformed, "vertex " + std::to_string(v) + ": successor out of range");
    if (g.priority[v] < kNoPriority)
      complain(r.wellformed, "vertex " + std::to_string(v) + ": negative priority");
  }
  if (!r.wellformed) return r;

  for (int v = 0; v < n; ++v) {
    int want = label_arity(g.label[v]);
    if (static_cast<int>(g.succ[v].size()) != want)
      complain(r.arity_ok, "vertex " + std::to_string(v) + ": expected " + std::to_string(want) +
                               " successors, found " + std::to_string(g.succ[v].size()));
    auto s = g.succ[v];
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      complain(r.arity_ok, "vertex " + std::to_string(v) + ": repeated successor");
  }

  // Priority condition: the subgraph induced by priority-free vertices is
  // acyclic, so every cycle of the graph passes a vertex with a priority.
  {
    std::vector<int> colour(n, 0);  // 0 unseen, 1 on stack, 2 done
    std::vector<std::pair<int, size_t>> stack;
    for (int root = 0; root < n && r.priority_ok; ++root) {
      if (colour[root] != 0 || g.has_priority(root)) continue;
      stack.push_back({root, 0});
      colour[root] = 1;
      while (!stack.empty() && r.priority_ok) {
        auto& [v, i] = stack.back();
        if (i == g.succ[v].size()) {
          colour[v] = 2;
          stack.pop_back();
          continue;
        }
        int w = g.succ[v][i++];
        if (g.has_priority(w)) continue;
        if (colour[w] == 1) {
          std::string cyc;
          bool in_cycle = false;
          for (const auto& [u, _] : stack) {
            if (u == w) in_cycle = true;
            if (in_cycle) {
              cyc += std::to_string(u) + " -> ";
              r.priority_cycle.push_back(u);
            }
          }
          complain(r.priority_ok, "priority-free cycle: " + cyc + std::to_string(w));
        } else if (colour[w] == 0) {
          colour[w] = 1;
          stack.push_back({w, 0});
        }
      }
      stack.clear();
    }
  }

  if (g.exit) {
    bool found = false;
    for (int v = 0; v < n; ++v) {
      if (g.label[v].kind != LabelKind::Lit || g.label[v].name != *g.exit) continue;
      if (g.label[v].negated)
        complain(r.exit_ok, "vertex " + std::to_string(v) + ": exit letter appears negated");
      else
        found = true;
    }
    if (!found) complain(r.exit_ok, "exit letter '" + *g.exit + "' labels no vertex");
  }
  return r;
}

// Restriction to the vertices reachable from `from`; vertex order follows
// discovery order from a breadth-first sweep, so the result is a function of
// the graph and the root alone.
inline SyntaxGraph generated_subgraph(const SyntaxGraph& g, int from) {
  if (from < 0 || from >= g.size()) throw std::out_of_range("generated_subgraph: root out of range");
  std::vector<int> remap(g.size(), -1);
  std::vector<int> order;
  order.push_back(from);
  remap[from] = 0;
  for (size_t i = 0; i < order.size(); ++i)
    for (int w : g.succ[order[i]])
      if (remap[w] < 0) {
        remap[w] = static_cast<int>(order.size());
        order.push_back(w);
      }
  SyntaxGraph out;
  out.initial = 0;
  out.exit = g.exit;
  for (int old : order) {
    std::vector<int> s;
    for (int w : g.succ[old]) s.push_back(remap[w]);
    out.add_vertex(g.label[old], std::move(s), g.priority[old]);
  }
  return out;
}

// Maximal priority along a vertex path, -1 when none is defined. The path
// must follow edges of the graph.
inline int path_priority(const SyntaxGraph& g, const std::vector<int>& path) {
  for (size_t i = 0; i + 1 < path.size(); ++i) {
    bool edge = false;
    for (int w : g.succ[path[i]])
      if (w == path[i + 1]) edge = true;
    if (!edge)
      throw std::invalid_argument("path_priority: " + std::to_string(path[i]) + " -> " +
                                  std::to_string(path[i + 1]) + " is not an edge");
  }
  int best = -1;
  for (int v : path) {
    if (v < 0 || v >= g.size()) throw std::out_of_range("path_priority: vertex out of range");
    best = std::max(best, g.priority[v]);
  }
  return best;
}

}  // namespace glw
