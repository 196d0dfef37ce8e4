#pragma once

// Canonical concrete syntax. render(parse(s)) normalises whitespace and
// parentheses; parse(render(t)) == t structurally, which the test suite
// checks by property.

#include <string>

#include "glw/term.hpp"

namespace glw {

namespace detail {

// Binding strength, loosest first. Formulas: Or < And < prefix < atoms.
// Games: Cup/Cap < Seq < postfix < base. A child is bracketed when its own
// level is below what its position requires.
inline int level(const Formula& f) {
  switch (f->kind) {
    case FormulaKind::Or: return 1;
    case FormulaKind::And: return 2;
    case FormulaKind::Neg:
    case FormulaKind::Dia: return 3;
    case FormulaKind::Atom: return 4;
  }
  return 4;
}

inline int level(const Game& g) {
  switch (g->kind) {
    case GameKind::Cup:
    case GameKind::Cap: return 1;
    case GameKind::Seq: return 2;
    case GameKind::Dual:
    case GameKind::Star:
    case GameKind::Cross: return 3;
    case GameKind::Atomic:
    case GameKind::Test:
    case GameKind::DualTest: return 4;
  }
  return 4;
}

inline void render_to(const Formula& f, std::string& out);
inline void render_to(const Game& g, std::string& out);

inline void render_child(const Formula& f, int min_level, std::string& out) {
  if (level(f) >= min_level) {
    render_to(f, out);
  } else {
    out += '(';
    render_to(f, out);
    out += ')';
  }
}

inline void render_child(const Game& g, int min_level, std::string& out) {
  if (level(g) >= min_level) {
    render_to(g, out);
  } else {
    out += '(';
    render_to(g, out);
    out += ')';
  }
}

inline void render_to(const Formula& f, std::string& out) {
  switch (f->kind) {
    case FormulaKind::Atom:
      out += f->atom;
      break;
    case FormulaKind::Neg:
      out += '!';
      render_child(f->lhs, 3, out);
      break;
    case FormulaKind::And:
      render_child(f->lhs, 2, out);
      out += " & ";
      render_child(f->rhs, 3, out);
      break;
    case FormulaKind::Or:
      render_child(f->lhs, 1, out);
      out += " | ";
      render_child(f->rhs, 2, out);
      break;
    case FormulaKind::Dia:
      out += '<';
      render_to(f->game, out);
      out += '>';
      render_child(f->lhs, 3, out);
      break;
  }
}

inline void render_to(const Game& g, std::string& out) {
  switch (g->kind) {
    case GameKind::Atomic:
      out += g->atom;
      break;
    case GameKind::Dual:
      render_child(g->lhs, 3, out);
      out += "^d";
      break;
    case GameKind::Star:
      render_child(g->lhs, 3, out);
      out += "^*";
      break;
    case GameKind::Cross:
      render_child(g->lhs, 3, out);
      out += "^x";
      break;
    case GameKind::Seq:
      render_child(g->lhs, 2, out);
      out += " ; ";
      render_child(g->rhs, 3, out);
      break;
    case GameKind::Cup:
      render_child(g->lhs, 1, out);
      out += " u ";
      render_child(g->rhs, 2, out);
      break;
    case GameKind::Cap:
      render_child(g->lhs, 1, out);
      out += " n ";
      render_child(g->rhs, 2, out);
      break;
    case GameKind::Test:
    case GameKind::DualTest: {
      // Bare atoms may be tested without brackets; everything else needs them.
      if (g->test->kind == FormulaKind::Atom) {
        out += g->test->atom;
      } else {
        out += '(';
        render_to(g->test, out);
        out += ')';
      }
      out += g->kind == GameKind::Test ? '?' : '!';
      break;
    }
  }
}

}  // namespace detail

inline std::string render(const Formula& f) {
  std::string out;
  detail::render_to(f, out);
  return out;
}

inline std::string render(const Game& g) {
  std::string out;
  detail::render_to(g, out);
  return out;
}

}  // namespace glw
