#pragma once

// Fixpoint subterms, the canonical priority assignment over them, and the
// closure of a formula under the unfolding steps used by the evaluation game.

#include <algorithm>
#include <string>
#include <vector>

#include "glw/normal_form.hpp"
#include "glw/render.hpp"
#include "glw/term.hpp"

namespace glw {

namespace detail {

template <typename Term>
std::vector<Game> collect_fixpoints(const Term& t) {
  std::vector<Game> out;
  GameSet seen;
  walk(t, [](const Formula&) {},
       [&](const Game& g) {
         if ((g->kind == GameKind::Star || g->kind == GameKind::Cross) && seen.insert(g).second)
           out.push_back(g);
       });
  // Subterm count ascending; render string breaks ties so the order is a
  // function of the term alone.
  std::sort(out.begin(), out.end(), [](const Game& a, const Game& b) {
    if (a->size != b->size) return a->size < b->size;
    return render(a) < render(b);
  });
  return out;
}

}  // namespace detail

// All Star/Cross subterms of t, recursing through test formulas, each listed
// once up to structural equality.
inline std::vector<Game> fixpoint_subterms(const Formula& f) { return detail::collect_fixpoints(f); }
inline std::vector<Game> fixpoint_subterms(const Game& g) { return detail::collect_fixpoints(g); }

using PriorityAssignment = GameMap<int>;

// Priorities for the fixpoint subterms of f: a Star with n fixpoint subterms
// (itself included) gets 2n+1, a Cross gets 2n. Strictly smaller fixpoints
// then carry strictly smaller priorities, and parity encodes the kind.
inline PriorityAssignment canonical_priorities(const Formula& f) {
  PriorityAssignment out;
  for (const Game& g : fixpoint_subterms(f)) {
    int n = static_cast<int>(fixpoint_subterms(g).size());
    out[g] = g->kind == GameKind::Star ? 2 * n + 1 : 2 * n;
  }
  return out;
}

// Checks the two conditions a priority assignment must satisfy: parity even
// iff the term is a Cross, and strict subterms carry strictly smaller
// priorities.
inline bool is_valid_priority_assignment(const PriorityAssignment& pr) {
  for (const auto& [g, n] : pr) {
    if (n < 0) return false;
    bool want_even = g->kind == GameKind::Cross;
    if (g->kind != GameKind::Star && g->kind != GameKind::Cross) return false;
    if ((n % 2 == 0) != want_even) return false;
  }
  for (const auto& [a, na] : pr)
    for (const auto& [b, nb] : pr) {
      if (equal(a, b)) continue;
      if (is_subterm(a, b) && !(na < nb)) return false;
    }
  return true;
}

// One unfolding step: the formulas a position (s, f) can hand control to,
// independent of the state component. Literals have none. Requires f in
// dual negation normal form.
inline std::vector<Formula> unfold_successors(const Formula& f) {
  switch (f->kind) {
    case FormulaKind::Atom: return {};
    case FormulaKind::Neg:
      if (f->lhs->kind != FormulaKind::Atom) throw std::invalid_argument("unfold_successors: formula not in dnnf");
      return {};
    case FormulaKind::And:
    case FormulaKind::Or: return {f->lhs, f->rhs};
    case FormulaKind::Dia: break;
  }
  const Game& g = f->game;
  const Formula& k = f->lhs;
  switch (g->kind) {
    case GameKind::Atomic: return {k};
    case GameKind::Dual:
      if (g->lhs->kind != GameKind::Atomic) throw std::invalid_argument("unfold_successors: game not in dnnf");
      return {k};
    case GameKind::Seq: return {mk_dia(g->lhs, mk_dia(g->rhs, k))};
    case GameKind::Cup: return {mk_or(mk_dia(g->lhs, k), mk_dia(g->rhs, k))};
    case GameKind::Cap: return {mk_and(mk_dia(g->lhs, k), mk_dia(g->rhs, k))};
    case GameKind::Star: return {mk_or(k, mk_dia(g->lhs, mk_dia(g, k)))};
    case GameKind::Cross: return {mk_and(k, mk_dia(g->lhs, mk_dia(g, k)))};
    case GameKind::Test: return {mk_and(g->test, k)};
    case GameKind::DualTest: return {mk_or(g->test, k)};
  }
  throw std::logic_error("unfold_successors: bad kind");
}

// Least set of formulas containing f and closed under unfold_successors.
// Finite: every member is built from subterms of f and the grammar of the
// unfolding steps, which revisits the same diamonds.
inline std::vector<Formula> eval_closure(const Formula& f) {
  if (!is_dnnf(f)) throw std::invalid_argument("eval_closure: formula not in dnnf");
  std::vector<Formula> order;
  FormulaSet seen;
  std::vector<Formula> todo{f};
  seen.insert(f);
  while (!todo.empty()) {
    Formula cur = todo.back();
    todo.pop_back();
    order.push_back(cur);
    for (const Formula& nxt : unfold_successors(cur))
      if (seen.insert(nxt).second) todo.push_back(nxt);
  }
  return order;
}

}  // namespace glw
