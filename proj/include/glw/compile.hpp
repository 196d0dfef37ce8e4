#pragma once

// Compiling terms to syntax graphs. Each constructor builds the graph of its
// subterms, lifts the left component's priorities above the right one by an
// even shift, wires exits, and prunes to the part reachable from the initial
// vertex. Fixpoints add a fresh head above everything below them, with the
// parity of the operator; the result always satisfies the guarded-linear
// conditions, which the test suite checks per constructor.

#include <algorithm>
#include <stdexcept>
#include <string>

#include "glw/normal_form.hpp"
#include "glw/syntax_graph.hpp"
#include "glw/term.hpp"

namespace glw {

namespace detail {

inline int max_priority(const SyntaxGraph& g, int from, int to) {
  int best = -1;
  for (int v = from; v < to; ++v) best = std::max(best, g.priority[v]);
  return best;
}

inline int even_above(int p) { return p < 0 ? 0 : (p % 2 == 0 ? p + 2 : p + 1); }
inline int odd_above(int p) { return p < 0 ? 1 : (p % 2 == 1 ? p + 2 : p + 1); }

// Appends `tail` to `head`, returning the index offset of the tail's
// vertices.
inline int append_graph(SyntaxGraph& head, const SyntaxGraph& tail) {
  int offset = head.size();
  for (int v = 0; v < tail.size(); ++v) {
    std::vector<int> s;
    for (int w : tail.succ[v]) s.push_back(w + offset);
    head.add_vertex(tail.label[v], std::move(s), tail.priority[v]);
  }
  return offset;
}

inline void shift_priorities(SyntaxGraph& g, int from, int to, int k) {
  if (k == 0) return;
  for (int v = from; v < to; ++v)
    if (g.priority[v] != kNoPriority) g.priority[v] += k;
}

// Redirects every edge from [0, limit) that points at a vertex of
// `targets` to `to`.
inline void reroute_edges(SyntaxGraph& g, int limit, const std::vector<bool>& targets, int to) {
  for (int v = 0; v < limit; ++v)
    for (int& w : g.succ[v])
      if (targets[w]) w = to;
}

inline std::vector<bool> exit_vertices(const SyntaxGraph& g, int limit, const std::string& exit) {
  std::vector<bool> out(g.size(), false);
  for (int v = 0; v < limit; ++v)
    out[v] = g.label[v].kind == LabelKind::Lit && !g.label[v].negated && g.label[v].name == exit;
  return out;
}

inline void check_compiled(const SyntaxGraph& g) {
  GraphReport r = validate_graph(g);
  if (!r.ok()) throw std::logic_error("compile: constructed graph fails validation: " + r.problems[0]);
  std::vector<int> prios;
  for (int v = 0; v < g.size(); ++v)
    if (g.has_priority(v)) prios.push_back(g.priority[v]);
  std::sort(prios.begin(), prios.end());
  if (std::adjacent_find(prios.begin(), prios.end()) != prios.end())
    throw std::logic_error("compile: constructed graph has duplicate priorities");
  if (g.is_exit_vertex(g.initial)) throw std::logic_error("compile: initial vertex is exit-labelled");
}

class Compiler {
 public:
  // `taken` are the atom names of the whole term being compiled; internal
  // exit letters are chosen to avoid them.
  explicit Compiler(std::vector<std::string> taken) : taken_(std::move(taken)) {}

  SyntaxGraph game(const Game& g, const std::string& exit) {
    SyntaxGraph out;
    switch (g->kind) {
      case GameKind::Atomic:
      case GameKind::Dual: {
        const std::string& name = g->kind == GameKind::Atomic ? g->atom : g->lhs->atom;
        out.add_vertex(dia_label(name, g->kind == GameKind::Dual), {1});
        out.add_vertex(lit_label(exit));
        out.initial = 0;
        out.exit = exit;
        break;
      }
      case GameKind::Test:
      case GameKind::DualTest: {
        out = formula(g->test);
        int leaf = out.add_vertex(lit_label(exit));
        int root = out.add_vertex(g->kind == GameKind::Test ? and_label() : or_label(), {out.initial, leaf});
        out.initial = root;
        out.exit = exit;
        break;
      }
      case GameKind::Seq: {
        out = game(g->lhs, exit);
        SyntaxGraph right = game(g->rhs, exit);
        int left_size = out.size();
        shift_priorities(out, 0, left_size, even_above(max_priority(right, 0, right.size())));
        std::vector<bool> old_exits = exit_vertices(out, left_size, exit);
        int offset = append_graph(out, right);
        reroute_edges(out, left_size, old_exits, offset + right.initial);
        break;
      }
      case GameKind::Cup:
      case GameKind::Cap: {
        out = game(g->lhs, exit);
        SyntaxGraph right = game(g->rhs, exit);
        int left_size = out.size();
        shift_priorities(out, 0, left_size, even_above(max_priority(right, 0, right.size())));
        int offset = append_graph(out, right);
        int root = out.add_vertex(g->kind == GameKind::Cup ? or_label() : and_label(),
                                  {out.initial, offset + right.initial});
        out.initial = root;
        break;
      }
      case GameKind::Star:
      case GameKind::Cross: {
        out = game(g->lhs, exit);
        int body_size = out.size();
        int body_max = max_priority(out, 0, body_size);
        int n = g->kind == GameKind::Star ? odd_above(body_max) : even_above(body_max);
        std::vector<bool> old_exits = exit_vertices(out, body_size, exit);
        int leaf = out.add_vertex(lit_label(exit));
        int root = out.add_vertex(g->kind == GameKind::Star ? or_label() : and_label(), {out.initial, leaf}, n);
        reroute_edges(out, body_size, old_exits, root);
        out.initial = root;
        break;
      }
    }
    out = generated_subgraph(out, out.initial);
    check_compiled(out);
    return out;
  }

  SyntaxGraph formula(const Formula& f) {
    SyntaxGraph out;
    switch (f->kind) {
      case FormulaKind::Atom: {
        out.add_vertex(lit_label(f->atom));
        out.initial = 0;
        break;
      }
      case FormulaKind::Neg: {
        if (f->lhs->kind != FormulaKind::Atom) throw std::invalid_argument("compile: formula not in dnnf");
        out.add_vertex(lit_label(f->lhs->atom, true));
        out.initial = 0;
        break;
      }
      case FormulaKind::And:
      case FormulaKind::Or: {
        out = formula(f->lhs);
        SyntaxGraph right = formula(f->rhs);
        int left_size = out.size();
        shift_priorities(out, 0, left_size, even_above(max_priority(right, 0, right.size())));
        int offset = append_graph(out, right);
        int root = out.add_vertex(f->kind == FormulaKind::And ? and_label() : or_label(),
                                  {out.initial, offset + right.initial});
        out.initial = root;
        break;
      }
      case FormulaKind::Dia: {
        std::string inner_exit = fresh_exit();
        out = game(f->game, inner_exit);
        SyntaxGraph right = formula(f->lhs);
        int left_size = out.size();
        shift_priorities(out, 0, left_size, even_above(max_priority(right, 0, right.size())));
        std::vector<bool> old_exits = exit_vertices(out, left_size, inner_exit);
        int offset = append_graph(out, right);
        reroute_edges(out, left_size, old_exits, offset + right.initial);
        break;
      }
    }
    out.exit.reset();
    out = generated_subgraph(out, out.initial);
    check_compiled(out);
    return out;
  }

 private:
  std::vector<std::string> taken_;
  int fresh_ = 0;

  std::string fresh_exit() {
    for (;;) {
      std::string name = "$e" + std::to_string(fresh_++);
      if (std::find(taken_.begin(), taken_.end(), name) == taken_.end()) return name;
    }
  }
};

}  // namespace detail

// Graph of a game term with the given exit letter. The letter must not occur
// in the term, and the term must be in dual negation normal form.
inline SyntaxGraph compile_game(const Game& g, const std::string& exit) {
  if (!is_dnnf(g)) throw std::invalid_argument("compile_game: game not in dual negation normal form");
  if (exit.empty()) throw std::invalid_argument("compile_game: empty exit letter");
  std::vector<std::string> atoms = atom_names(g);
  if (std::find(atoms.begin(), atoms.end(), exit) != atoms.end())
    throw std::invalid_argument("compile_game: exit letter '" + exit + "' occurs in the game");
  atoms.push_back(exit);
  return detail::Compiler{std::move(atoms)}.game(g, exit);
}

// Graph of a formula; no exit letter remains in the result.
inline SyntaxGraph compile_formula(const Formula& f) {
  if (!is_dnnf(f)) throw std::invalid_argument("compile_formula: formula not in dual negation normal form");
  return detail::Compiler{atom_names(f)}.formula(f);
}

}  // namespace glw
