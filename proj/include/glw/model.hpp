#pragma once

// Monotone neighbourhood frames over a finite state space, game models, the
// frame algebra (unit, composition, pointwise joins and meets, dual, star,
// cross), and the standard semantics of formulas and games.
//
// Composition and dual are computed extensionally: membership of each of the
// 2^|S| candidate sets is decided from the definition and the result is
// re-minimised. Star and cross iterate their defining maps from the bottom
// (resp. top) frame until the first repeat, which on this finite lattice is
// the least (resp. greatest) fixpoint.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "glw/family.hpp"
#include "glw/term.hpp"

namespace glw {

// One neighbourhood function S -> M(S): a family per state.
struct Frame {
  std::vector<NbhdFamily> at;

  int n_states() const { return static_cast<int>(at.size()); }
  bool operator==(const Frame&) const = default;
};

inline Frame frame_empty(int n) { return Frame{std::vector<NbhdFamily>(static_cast<size_t>(n))}; }

inline Frame frame_top(int n) { return Frame{std::vector<NbhdFamily>(static_cast<size_t>(n), family_all())}; }

// eta: U is a neighbourhood of s iff s is in U, so {s} is the sole minimal set.
inline Frame frame_unit(int n) {
  Frame f = frame_empty(n);
  for (int s = 0; s < n; ++s) f.at[s] = NbhdFamily{{StateSet{1} << s}};
  return f;
}

inline Frame frame_cup(const Frame& a, const Frame& b) {
  Frame out = frame_empty(a.n_states());
  for (int s = 0; s < a.n_states(); ++s) out.at[s] = family_cup(a.at[s], b.at[s]);
  return out;
}

inline Frame frame_cap(const Frame& a, const Frame& b) {
  Frame out = frame_empty(a.n_states());
  for (int s = 0; s < a.n_states(); ++s) out.at[s] = family_cap(a.at[s], b.at[s]);
  return out;
}

// U ∈ (f;g)(s) iff the set of states where U ∈ g holds is a neighbourhood at s.
inline Frame frame_seq(const Frame& f, const Frame& g) {
  int n = f.n_states();
  StateSet limit = full_set(n);
  Frame out = frame_empty(n);
  for (int s = 0; s < n; ++s) {
    std::vector<StateSet> members;
    for (StateSet u = 0;; ++u) {
      StateSet pre = 0;
      for (int t = 0; t < n; ++t)
        if (family_member(g.at[t], u)) pre |= StateSet{1} << t;
      if (family_member(f.at[s], pre)) members.push_back(u);
      if (u == limit) break;
    }
    out.at[s] = make_family(std::move(members));
  }
  return out;
}

// U ∈ f^d(s) iff the complement of U is not a neighbourhood at s.
inline Frame frame_dual(const Frame& f) {
  int n = f.n_states();
  StateSet limit = full_set(n);
  Frame out = frame_empty(n);
  for (int s = 0; s < n; ++s) {
    std::vector<StateSet> members;
    for (StateSet u = 0;; ++u) {
      if (!family_member(f.at[s], limit & ~u)) members.push_back(u);
      if (u == limit) break;
    }
    out.at[s] = make_family(std::move(members));
  }
  return out;
}

inline bool frame_leq(const Frame& a, const Frame& b) {
  for (int s = 0; s < a.n_states(); ++s)
    if (!family_leq(a.at[s], b.at[s])) return false;
  return true;
}

// A strictly monotone chain of frames adds at least one minimal-set slot per
// step, so n * 2^n + 4 iterations can never be reached before the fixpoint.
inline long frame_chain_bound(int n) { return static_cast<long>(n) * (1L << n) + 4; }

// Least fixpoint of g ↦ eta ∪ (f;g), by iteration from the empty frame.
inline Frame frame_star(const Frame& f) {
  int n = f.n_states();
  Frame eta = frame_unit(n);
  Frame cur = frame_empty(n);
  for (long guard = 0;; ++guard) {
    Frame nxt = frame_cup(eta, frame_seq(f, cur));
    if (nxt == cur) return cur;
    cur = std::move(nxt);
    if (guard > frame_chain_bound(n)) throw std::logic_error("frame_star: iteration failed to converge");
  }
}

// Greatest fixpoint of g ↦ eta ∩ (f;g), by iteration from the full frame.
inline Frame frame_cross(const Frame& f) {
  int n = f.n_states();
  Frame eta = frame_unit(n);
  Frame cur = frame_top(n);
  for (long guard = 0;; ++guard) {
    Frame nxt = frame_cap(eta, frame_seq(f, cur));
    if (nxt == cur) return cur;
    cur = std::move(nxt);
    if (guard > frame_chain_bound(n)) throw std::logic_error("frame_cross: iteration failed to converge");
  }
}

// -- models -----------------------------------------------------------------

struct GameModel {
  std::vector<std::string> states;                // index is the bit position
  std::map<std::string, StateSet> props;          // valuation per atom
  std::map<std::string, Frame> games;             // frame per atomic game

  int n_states() const { return static_cast<int>(states.size()); }
  StateSet full() const { return full_set(n_states()); }
  bool operator==(const GameModel&) const = default;

  int state_index(const std::string& name) const {
    for (size_t i = 0; i < states.size(); ++i)
      if (states[i] == name) return static_cast<int>(i);
    throw std::out_of_range("unknown state '" + name + "'");
  }
};

// Missing atoms denote the empty set and missing games the empty frame
// unless strict lookups are requested.
enum class Lookup { Lenient, Strict };

inline StateSet prop_of(const GameModel& m, const std::string& atom, Lookup mode = Lookup::Lenient) {
  auto it = m.props.find(atom);
  if (it != m.props.end()) return it->second;
  if (mode == Lookup::Strict) throw std::out_of_range("model has no atom '" + atom + "'");
  return 0;
}

inline const Frame& frame_of(const GameModel& m, const std::string& game, Lookup mode = Lookup::Lenient) {
  auto it = m.games.find(game);
  if (it != m.games.end()) return it->second;
  if (mode == Lookup::Strict) throw std::out_of_range("model has no game '" + game + "'");
  static thread_local std::map<int, Frame> empties;
  auto [e, inserted] = empties.try_emplace(m.n_states(), Frame{});
  if (inserted) e->second = frame_empty(m.n_states());
  return e->second;
}

// -- standard semantics -----------------------------------------------------

namespace detail {

struct EvalMemo {
  FormulaMap<StateSet> formulas;
  GameMap<Frame> games;
};

inline StateSet eval_std(const GameModel& m, const Formula& f, EvalMemo& memo, Lookup mode);
inline const Frame& denote(const GameModel& m, const Game& g, EvalMemo& memo, Lookup mode);

inline StateSet eval_std(const GameModel& m, const Formula& f, EvalMemo& memo, Lookup mode) {
  if (auto it = memo.formulas.find(f); it != memo.formulas.end()) return it->second;
  StateSet out = 0;
  switch (f->kind) {
    case FormulaKind::Atom: out = prop_of(m, f->atom, mode); break;
    case FormulaKind::Neg: out = m.full() & ~eval_std(m, f->lhs, memo, mode); break;
    case FormulaKind::And: out = eval_std(m, f->lhs, memo, mode) & eval_std(m, f->rhs, memo, mode); break;
    case FormulaKind::Or: out = eval_std(m, f->lhs, memo, mode) | eval_std(m, f->rhs, memo, mode); break;
    case FormulaKind::Dia: {
      StateSet target = eval_std(m, f->lhs, memo, mode);
      const Frame& fr = denote(m, f->game, memo, mode);
      for (int s = 0; s < m.n_states(); ++s)
        if (family_member(fr.at[s], target)) out |= StateSet{1} << s;
      break;
    }
  }
  memo.formulas.emplace(f, out);
  return out;
}

inline const Frame& denote(const GameModel& m, const Game& g, EvalMemo& memo, Lookup mode) {
  if (auto it = memo.games.find(g); it != memo.games.end()) return it->second;
  Frame out;
  switch (g->kind) {
    case GameKind::Atomic: out = frame_of(m, g->atom, mode); break;
    case GameKind::Dual: out = frame_dual(denote(m, g->lhs, memo, mode)); break;
    case GameKind::Seq: out = frame_seq(denote(m, g->lhs, memo, mode), denote(m, g->rhs, memo, mode)); break;
    case GameKind::Cup: out = frame_cup(denote(m, g->lhs, memo, mode), denote(m, g->rhs, memo, mode)); break;
    case GameKind::Cap: out = frame_cap(denote(m, g->lhs, memo, mode), denote(m, g->rhs, memo, mode)); break;
    case GameKind::Star: out = frame_star(denote(m, g->lhs, memo, mode)); break;
    case GameKind::Cross: out = frame_cross(denote(m, g->lhs, memo, mode)); break;
    case GameKind::Test: {
      // Angel may confirm the test where it holds and is stuck elsewhere.
      StateSet holds = eval_std(m, g->test, memo, mode);
      out = frame_empty(m.n_states());
      for (int s = 0; s < m.n_states(); ++s)
        if (holds & (StateSet{1} << s)) out.at[s] = NbhdFamily{{StateSet{1} << s}};
      break;
    }
    case GameKind::DualTest: {
      // Demon is stuck where the test holds: every set is a neighbourhood there.
      StateSet holds = eval_std(m, g->test, memo, mode);
      out = frame_empty(m.n_states());
      for (int s = 0; s < m.n_states(); ++s)
        out.at[s] = (holds & (StateSet{1} << s)) ? family_all() : NbhdFamily{{StateSet{1} << s}};
      break;
    }
  }
  auto [it, _] = memo.games.emplace(g, std::move(out));
  return it->second;
}

}  // namespace detail

// States satisfying f, as a bitmask over m.states.
inline StateSet eval_standard(const GameModel& m, const Formula& f, Lookup mode = Lookup::Lenient) {
  detail::EvalMemo memo;
  return detail::eval_std(m, f, memo, mode);
}

// The frame a game term denotes in m.
inline Frame game_denotation(const GameModel& m, const Game& g, Lookup mode = Lookup::Lenient) {
  detail::EvalMemo memo;
  return detail::denote(m, g, memo, mode);
}

inline std::vector<std::string> state_names(const GameModel& m, StateSet u) {
  std::vector<std::string> out;
  for (int s = 0; s < m.n_states(); ++s)
    if (u & (StateSet{1} << s)) out.push_back(m.states[s]);
  return out;
}

}  // namespace glw
