#pragma once

// Dual negation normal form: negation only on atoms, dual only on atomic
// games. to_dnnf pushes both inward along De Morgan duals; the four mutually
// recursive rewrites below terminate because each call strictly descends into
// subterms.

#include "glw/term.hpp"

namespace glw {

inline Formula to_dnnf(const Formula& f);
inline Game to_dnnf(const Game& g);

namespace detail {

inline Formula dnnf_neg(const Formula& f);
inline Game dnnf_dual(const Game& g);

inline Formula dnnf_f(const Formula& f) {
  switch (f->kind) {
    case FormulaKind::Atom: return f;
    case FormulaKind::Neg: return dnnf_neg(f->lhs);
    case FormulaKind::And: return mk_and(dnnf_f(f->lhs), dnnf_f(f->rhs));
    case FormulaKind::Or: return mk_or(dnnf_f(f->lhs), dnnf_f(f->rhs));
    case FormulaKind::Dia: return mk_dia(to_dnnf(f->game), dnnf_f(f->lhs));
  }
  throw std::logic_error("dnnf_f: bad kind");
}

// dnnf of the negation of f
inline Formula dnnf_neg(const Formula& f) {
  switch (f->kind) {
    case FormulaKind::Atom: return mk_neg(f);
    case FormulaKind::Neg: return dnnf_f(f->lhs);
    case FormulaKind::And: return mk_or(dnnf_neg(f->lhs), dnnf_neg(f->rhs));
    case FormulaKind::Or: return mk_and(dnnf_neg(f->lhs), dnnf_neg(f->rhs));
    case FormulaKind::Dia: return mk_dia(dnnf_dual(f->game), dnnf_neg(f->lhs));
  }
  throw std::logic_error("dnnf_neg: bad kind");
}

inline Game dnnf_g(const Game& g) {
  switch (g->kind) {
    case GameKind::Atomic: return g;
    case GameKind::Dual: return dnnf_dual(g->lhs);
    case GameKind::Seq: return mk_seq(dnnf_g(g->lhs), dnnf_g(g->rhs));
    case GameKind::Cup: return mk_cup(dnnf_g(g->lhs), dnnf_g(g->rhs));
    case GameKind::Cap: return mk_cap(dnnf_g(g->lhs), dnnf_g(g->rhs));
    case GameKind::Star: return mk_star(dnnf_g(g->lhs));
    case GameKind::Cross: return mk_cross(dnnf_g(g->lhs));
    case GameKind::Test: return mk_test(dnnf_f(g->test));
    case GameKind::DualTest: return mk_dual_test(dnnf_f(g->test));
  }
  throw std::logic_error("dnnf_g: bad kind");
}

// dnnf of the dual of g
inline Game dnnf_dual(const Game& g) {
  switch (g->kind) {
    case GameKind::Atomic: return mk_dual(g);
    case GameKind::Dual: return dnnf_g(g->lhs);
    case GameKind::Seq: return mk_seq(dnnf_dual(g->lhs), dnnf_dual(g->rhs));
    case GameKind::Cup: return mk_cap(dnnf_dual(g->lhs), dnnf_dual(g->rhs));
    case GameKind::Cap: return mk_cup(dnnf_dual(g->lhs), dnnf_dual(g->rhs));
    case GameKind::Star: return mk_cross(dnnf_dual(g->lhs));
    case GameKind::Cross: return mk_star(dnnf_dual(g->lhs));
    case GameKind::Test: return mk_dual_test(dnnf_neg(g->test));
    case GameKind::DualTest: return mk_test(dnnf_neg(g->test));
  }
  throw std::logic_error("dnnf_dual: bad kind");
}

}  // namespace detail

inline Formula to_dnnf(const Formula& f) { return detail::dnnf_f(f); }
inline Game to_dnnf(const Game& g) { return detail::dnnf_g(g); }

inline bool is_dnnf(const Formula& f);
inline bool is_dnnf(const Game& g);

inline bool is_dnnf(const Formula& f) {
  switch (f->kind) {
    case FormulaKind::Atom: return true;
    case FormulaKind::Neg: return f->lhs->kind == FormulaKind::Atom;
    case FormulaKind::And:
    case FormulaKind::Or: return is_dnnf(f->lhs) && is_dnnf(f->rhs);
    case FormulaKind::Dia: return is_dnnf(f->game) && is_dnnf(f->lhs);
  }
  return false;
}

inline bool is_dnnf(const Game& g) {
  switch (g->kind) {
    case GameKind::Atomic: return true;
    case GameKind::Dual: return g->lhs->kind == GameKind::Atomic;
    case GameKind::Seq:
    case GameKind::Cup:
    case GameKind::Cap: return is_dnnf(g->lhs) && is_dnnf(g->rhs);
    case GameKind::Star:
    case GameKind::Cross: return is_dnnf(g->lhs);
    case GameKind::Test:
    case GameKind::DualTest: return is_dnnf(g->test);
  }
  return false;
}

}  // namespace glw
