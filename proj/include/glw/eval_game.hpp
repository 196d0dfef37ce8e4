#pragma once

// The evaluation game of a formula against a model, and the two fixpoint
// membership games. Winning regions of the evaluation game match
// eval_standard; the test suite exercises that correspondence heavily.
//
// Positions are (state, closure formula) pairs plus (subset, modal formula)
// pairs for the two atomic-diamond rows. Owners follow the move table:
// conjunctive choices belong to Abelard, disjunctive ones to Eloise, and the
// single-successor unfolding rows are given to Eloise (their owner is
// irrelevant for winners). A position (s, <a>k) carries the priority of a
// when a has one assigned; subset positions carry 0, which is sound because
// every cycle through a subset position also passes its diamond position.

#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "glw/fixpoint_terms.hpp"
#include "glw/model.hpp"
#include "glw/parity.hpp"

namespace glw {

struct EvalPosition {
  bool is_subset;   // false: (state, formula); true: (subset, modal formula)
  int state = 0;
  StateSet subset = 0;
  Formula formula;
};

struct EvalArena {
  ParityArena arena;
  std::vector<EvalPosition> positions;

  // Index of (state, formula), -1 when the position was never reachable.
  int state_position(int state, const Formula& f) const {
    for (size_t i = 0; i < positions.size(); ++i)
      if (!positions[i].is_subset && positions[i].state == state && equal(positions[i].formula, f))
        return static_cast<int>(i);
    return -1;
  }
};

namespace detail {

struct EvalKey {
  bool is_subset;
  std::uint32_t where;  // state index or subset mask
  Formula formula;

  bool operator==(const EvalKey& o) const {
    return is_subset == o.is_subset && where == o.where && equal(formula, o.formula);
  }
};

struct EvalKeyHash {
  std::size_t operator()(const EvalKey& k) const {
    std::size_t h = k.formula ? k.formula->hash : 0;
    hash_mix(h, k.where * 2 + (k.is_subset ? 1 : 0));
    return h;
  }
};

}  // namespace detail

// Builds the full reachable arena from every (state, f) root. minimal_only
// restricts Angel's and Demon's subset choices to minimal neighbourhood sets;
// winners are unchanged since any member contains a minimal one.
inline EvalArena build_eval_arena(const GameModel& m, const Formula& f, const PriorityAssignment& priorities,
                                  bool minimal_only = false, Lookup mode = Lookup::Lenient) {
  if (!is_dnnf(f)) throw std::invalid_argument("build_eval_arena: formula not in dnnf");
  for (const Game& fx : fixpoint_subterms(f))
    if (priorities.find(fx) == priorities.end())
      throw std::invalid_argument("build_eval_arena: missing priority for a fixpoint subterm");

  EvalArena out;
  std::unordered_map<detail::EvalKey, int, detail::EvalKeyHash> index;
  std::vector<detail::EvalKey> todo;

  auto position = [&](detail::EvalKey key) {
    auto it = index.find(key);
    if (it != index.end()) return it->second;
    int id = out.arena.add_position(Player::Eloise, 0);  // owner patched below
    out.positions.push_back(EvalPosition{key.is_subset, key.is_subset ? 0 : static_cast<int>(key.where),
                                         key.is_subset ? key.where : 0, key.formula});
    index.emplace(key, id);
    todo.push_back(std::move(key));
    return id;
  };

  auto subset_choices = [&](const std::string& game, int s) {
    const Frame& fr = frame_of(m, game, mode);
    std::vector<StateSet> choices;
    if (minimal_only) {
      choices = fr.at[s].min;
    } else {
      StateSet full = m.full();
      for (StateSet u = 0;; ++u) {
        if (family_member(fr.at[s], u)) choices.push_back(u);
        if (u == full) break;
      }
    }
    return choices;
  };

  for (int s = 0; s < m.n_states(); ++s) position({false, static_cast<std::uint32_t>(s), f});

  for (size_t done = 0; done < todo.size(); ++done) {
    detail::EvalKey key = todo[done];
    int id = index.at(key);
    const Formula& g = key.formula;

    if (key.is_subset) {
      // (U, <g>k) or (U, <g^d>k): pick a state of U; Demon picks after Angel
      // chose the set, and dually.
      bool dual = g->game->kind == GameKind::Dual;
      out.arena.owner[id] = dual ? Player::Eloise : Player::Abelard;
      for (int t = 0; t < m.n_states(); ++t)
        if (key.where & (StateSet{1} << t))
          out.arena.add_edge(id, position({false, static_cast<std::uint32_t>(t), g->lhs}));
      continue;
    }

    int s = static_cast<int>(key.where);
    switch (g->kind) {
      case FormulaKind::Atom: {
        bool holds = (prop_of(m, g->atom, mode) >> s) & 1;
        out.arena.owner[id] = holds ? Player::Abelard : Player::Eloise;
        break;  // stuck either way; the stuck owner loses
      }
      case FormulaKind::Neg: {
        bool holds = (prop_of(m, g->lhs->atom, mode) >> s) & 1;
        out.arena.owner[id] = holds ? Player::Eloise : Player::Abelard;
        break;
      }
      case FormulaKind::And:
      case FormulaKind::Or: {
        out.arena.owner[id] = g->kind == FormulaKind::And ? Player::Abelard : Player::Eloise;
        out.arena.add_edge(id, position({false, key.where, g->lhs}));
        out.arena.add_edge(id, position({false, key.where, g->rhs}));
        break;
      }
      case FormulaKind::Dia: {
        const Game& a = g->game;
        if (auto it = priorities.find(a); it != priorities.end()) out.arena.priority[id] = it->second;
        if (a->kind == GameKind::Atomic || a->kind == GameKind::Dual) {
          // Angel proposes a neighbourhood set for <g>, Demon for <g^d>; the
          // dual row quantifies over the same family as the plain one.
          const std::string& name = a->kind == GameKind::Atomic ? a->atom : a->lhs->atom;
          out.arena.owner[id] = a->kind == GameKind::Atomic ? Player::Eloise : Player::Abelard;
          for (StateSet u : subset_choices(name, s)) out.arena.add_edge(id, position({true, u, g}));
        } else {
          out.arena.owner[id] = Player::Eloise;
          for (const Formula& nxt : unfold_successors(g))
            out.arena.add_edge(id, position({false, key.where, nxt}));
        }
        break;
      }
    }
  }
  return out;
}

// Winning-region semantics: the states whose root position Eloise wins.
inline StateSet eval_by_game(const GameModel& m, const Formula& f, Lookup mode = Lookup::Lenient,
                             bool minimal_only = false) {
  Formula nf = to_dnnf(f);
  EvalArena ea = build_eval_arena(m, nf, canonical_priorities(nf), minimal_only, mode);
  SolveResult sol = solve(ea.arena);
  StateSet out = 0;
  for (size_t i = 0; i < ea.positions.size(); ++i) {
    const EvalPosition& p = ea.positions[i];
    if (!p.is_subset && equal(p.formula, nf) && sol.won_by_eloise[i]) out |= StateSet{1} << p.state;
  }
  return out;
}

// -- fixpoint membership games ------------------------------------------------

enum class FixKind { Star, Cross };

struct FixpointArena {
  ParityArena arena;
  std::vector<int> state_position;               // per state
  std::unordered_map<StateSet, int> subset_position;
};

// The one-fixpoint game characterising membership of target in star/cross of
// the frame of `body`. States belong to Eloise, subsets to Abelard; the empty
// subset is an ordinary position where Abelard is stuck. Star plays carry
// priority 1 everywhere (infinite play loses for Eloise), cross priority 0.
inline FixpointArena build_fixpoint_arena(const GameModel& m, FixKind kind, const Game& body, StateSet target,
                                          Lookup mode = Lookup::Lenient) {
  Frame fr = game_denotation(m, body, mode);
  int prio = kind == FixKind::Star ? 1 : 0;
  FixpointArena out;
  out.state_position.assign(m.n_states(), -1);
  for (int s = 0; s < m.n_states(); ++s)
    out.state_position[s] = out.arena.add_position(Player::Eloise, prio);

  auto subset_pos = [&](StateSet u) {
    auto it = out.subset_position.find(u);
    if (it != out.subset_position.end()) return it->second;
    int id = out.arena.add_position(Player::Abelard, prio);
    out.subset_position.emplace(u, id);
    for (int t = 0; t < m.n_states(); ++t)
      if (u & (StateSet{1} << t)) out.arena.add_edge(id, out.state_position[t]);
    return id;
  };

  StateSet full = m.full();
  for (int s = 0; s < m.n_states(); ++s) {
    bool in_target = (target >> s) & 1;
    int id = out.state_position[s];
    if (kind == FixKind::Star) {
      if (in_target) {
        out.arena.add_edge(id, subset_pos(0));  // claim the unfolding ends here
      } else {
        for (StateSet u = 0;; ++u) {
          if (family_member(fr.at[s], u)) out.arena.add_edge(id, subset_pos(u));
          if (u == full) break;
        }
      }
    } else {
      if (in_target) {
        for (StateSet u = 0;; ++u) {
          if (family_member(fr.at[s], u)) out.arena.add_edge(id, subset_pos(u));
          if (u == full) break;
        }
      }
      // outside the target Eloise is stuck and loses immediately
    }
  }
  return out;
}

inline bool fixpoint_member_by_game(const GameModel& m, FixKind kind, const Game& body, StateSet target, int state,
                                    Lookup mode = Lookup::Lenient) {
  FixpointArena fa = build_fixpoint_arena(m, kind, body, target, mode);
  SolveResult sol = solve(fa.arena);
  return sol.won_by_eloise[fa.state_position[state]];
}

}  // namespace glw
