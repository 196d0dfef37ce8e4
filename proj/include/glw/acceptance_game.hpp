#pragma once

// The acceptance game of a syntax graph against a model. Positions pair a
// vertex with either a state or a neighbourhood set; the rows mirror the
// evaluation game, with the graph's successor structure standing in for
// subformulas. A vertex position inherits the vertex priority (0 when
// undefined); set positions carry 0, sound because every return to a diamond
// vertex passes through its vertex position.

#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "glw/model.hpp"
#include "glw/parity.hpp"
#include "glw/syntax_graph.hpp"

namespace glw {

struct AcceptancePosition {
  bool is_subset;
  int vertex = 0;
  int state = 0;       // when !is_subset
  StateSet subset = 0; // when is_subset
};

struct AcceptanceArena {
  ParityArena arena;
  std::vector<AcceptancePosition> positions;
  std::vector<std::vector<int>> vertex_state;  // [vertex][state] -> id or -1
};

inline AcceptanceArena build_acceptance_arena(const SyntaxGraph& g, const GameModel& m,
                                              Lookup mode = Lookup::Lenient) {
  GraphReport rep = validate_graph(g);
  if (!rep.ok()) throw std::invalid_argument("build_acceptance_arena: graph fails validation: " + rep.problems[0]);

  AcceptanceArena out;
  out.vertex_state.assign(g.size(), std::vector<int>(m.n_states(), -1));
  std::unordered_map<std::uint64_t, int> subset_index;  // (vertex, subset) packed

  struct Item {
    bool is_subset;
    int vertex;
    std::uint32_t where;
  };
  std::vector<Item> todo;

  auto state_pos = [&](int v, int s) {
    int& slot = out.vertex_state[v][s];
    if (slot >= 0) return slot;
    slot = out.arena.add_position(Player::Eloise, g.has_priority(v) ? g.priority[v] : 0);
    out.positions.push_back(AcceptancePosition{false, v, s, 0});
    todo.push_back({false, v, static_cast<std::uint32_t>(s)});
    return slot;
  };

  auto subset_pos = [&](int v, StateSet u) {
    std::uint64_t key = (static_cast<std::uint64_t>(v) << 32) | u;
    auto it = subset_index.find(key);
    if (it != subset_index.end()) return it->second;
    int id = out.arena.add_position(Player::Eloise, 0);
    out.positions.push_back(AcceptancePosition{true, v, 0, u});
    subset_index.emplace(key, id);
    todo.push_back({true, v, u});
    return id;
  };

  for (int s = 0; s < m.n_states(); ++s) state_pos(g.initial, s);

  while (!todo.empty()) {
    Item it = todo.back();
    todo.pop_back();
    int v = it.vertex;
    const VertexLabel& l = g.label[v];

    if (it.is_subset) {
      int id = subset_index.at((static_cast<std::uint64_t>(v) << 32) | it.where);
      out.arena.owner[id] = l.dual ? Player::Eloise : Player::Abelard;
      int w = g.succ[v][0];
      for (int t = 0; t < m.n_states(); ++t)
        if (it.where & (StateSet{1} << t)) out.arena.add_edge(id, state_pos(w, t));
      continue;
    }

    int s = static_cast<int>(it.where);
    int id = out.vertex_state[v][s];
    switch (l.kind) {
      case LabelKind::Lit: {
        bool holds = (prop_of(m, l.name, mode) >> s) & 1;
        bool angel_happy = holds != l.negated;
        out.arena.owner[id] = angel_happy ? Player::Abelard : Player::Eloise;
        break;
      }
      case LabelKind::And:
      case LabelKind::Or: {
        out.arena.owner[id] = l.kind == LabelKind::And ? Player::Abelard : Player::Eloise;
        for (int w : g.succ[v]) out.arena.add_edge(id, state_pos(w, s));
        break;
      }
      case LabelKind::Dia: {
        out.arena.owner[id] = l.dual ? Player::Abelard : Player::Eloise;
        const Frame& fr = frame_of(m, l.name, mode);
        StateSet full = m.full();
        for (StateSet u = 0;; ++u) {
          if (family_member(fr.at[s], u)) out.arena.add_edge(id, subset_pos(v, u));
          if (u == full) break;
        }
        break;
      }
    }
  }
  return out;
}

// States at which Eloise wins the acceptance game from the initial vertex.
inline StateSet accepts(const SyntaxGraph& g, const GameModel& m, Lookup mode = Lookup::Lenient) {
  AcceptanceArena aa = build_acceptance_arena(g, m, mode);
  SolveResult sol = solve(aa.arena);
  StateSet out = 0;
  for (int s = 0; s < m.n_states(); ++s)
    if (sol.won_by_eloise[aa.vertex_state[g.initial][s]]) out |= StateSet{1} << s;
  return out;
}

}  // namespace glw
