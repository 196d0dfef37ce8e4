#pragma once

// Extracting terms from syntax graphs, inverse to compilation up to semantic
// equivalence. The recursion removes the maximal-priority head h with its
// witness ordering (l, r): one copy of the graph turns h into a diamond over
// a placeholder game and keeps only the leaving edge, the other deletes h's
// edges, makes h a fresh exit and starts at r. The term for the second copy
// becomes the fixpoint body substituted for the placeholder in the first.
//
// The recursion tolerates an exit letter that labels no vertex: the formula
// entry point runs with a fresh letter precisely so that the extracted game
// never mentions it. Each step prunes to the reachable part, which preserves
// acceptance and all path conditions.

#include <algorithm>
#include <cctype>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "glw/glg_check.hpp"
#include "glw/syntax_graph.hpp"
#include "glw/term.hpp"

namespace glw {

namespace detail {

inline bool reachable_from(const SyntaxGraph& g, int from, int to) {
  std::vector<bool> seen(g.size(), false);
  std::vector<int> stack{from};
  seen[from] = true;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    if (v == to) return true;
    for (int w : g.succ[v])
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
  }
  return false;
}

class Extractor {
 public:
  explicit Extractor(const SyntaxGraph& g) {
    // Fresh machine names must clear anything already in the graph.
    for (int v = 0; v < g.size(); ++v) {
      const VertexLabel& l = g.label[v];
      if (l.kind == LabelKind::Lit) bump_counter(l.name, "$e", next_exit_);
      if (l.kind == LabelKind::Dia) bump_counter(l.name, "$g", next_game_);
    }
  }

  std::string fresh_exit() { return "$e" + std::to_string(next_exit_++); }

  Game extract(SyntaxGraph g, const std::string& exit) {
    g = generated_subgraph(g, g.initial);

    int head = -1;
    for (int v = 0; v < g.size(); ++v)
      if (g.has_priority(v) && (head < 0 || g.priority[v] > g.priority[head])) head = v;
    if (head < 0) return base_case(g, exit);

    int n = g.priority[head];
    WitnessSearch ws = search_head_witness(g, n, head, exit);
    if (!ws.found)
      throw std::logic_error("extract: head " + std::to_string(head) + " has no witness ordering");
    int l = ws.l, r = ws.r;

    // Head copy: h becomes a diamond over a placeholder, keeping the leaving
    // edge. The head must not be reachable from l, else the removed cycle
    // survives.
    std::string placeholder = "$g" + std::to_string(next_game_++);
    SyntaxGraph head_copy = g;
    head_copy.label[head] = dia_label(placeholder);
    head_copy.succ[head] = {l};
    head_copy.priority[head] = kNoPriority;
    if (reachable_from(head_copy, l, head))
      throw std::logic_error("extract: head is reachable from its leaving branch");
    Game outer = extract(std::move(head_copy), exit);

    // Body copy: h loses its edges and becomes a fresh exit; the body starts
    // at r and must no longer reach the old exit.
    std::string body_exit = fresh_exit();
    SyntaxGraph body_copy = std::move(g);
    body_copy.label[head] = lit_label(body_exit);
    body_copy.succ[head] = {};
    body_copy.priority[head] = kNoPriority;
    body_copy.initial = r;
    body_copy.exit = body_exit;
    for (int v = 0; v < body_copy.size(); ++v)
      if (body_copy.label[v].kind == LabelKind::Lit && !body_copy.label[v].negated &&
          body_copy.label[v].name == exit && reachable_from(body_copy, r, v))
        throw std::logic_error("extract: body still reaches the outer exit");
    Game body = extract(std::move(body_copy), body_exit);

    Game fix = n % 2 == 1 ? mk_star(body) : mk_cross(body);
    return substitute(outer, placeholder, fix);
  }

 private:
  int next_exit_ = 0;
  int next_game_ = 0;

  static void bump_counter(const std::string& name, const std::string& prefix, int& counter) {
    if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0) return;
    for (size_t i = prefix.size(); i < name.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(name[i]))) return;
    counter = std::max(counter, std::stoi(name.substr(prefix.size())) + 1);
  }

  // Priority-free graphs are acyclic, so a term falls out by recursion on
  // successors.
  Game base_case(const SyntaxGraph& g, const std::string& exit) {
    // The tautology test needs some atom; prefer the least plain atom of the
    // graph that is not the exit, falling back to a reserved one.
    std::string taut = "$t";
    {
      std::vector<std::string> names;
      for (int v = 0; v < g.size(); ++v)
        if (g.label[v].kind == LabelKind::Lit && g.label[v].name != exit &&
            !g.label[v].name.empty() && g.label[v].name[0] != '$')
          names.push_back(g.label[v].name);
      std::sort(names.begin(), names.end());
      if (!names.empty()) taut = names.front();
    }

    std::vector<Game> memo(g.size());
    std::vector<int> state(g.size(), 0);
    std::function<Game(int)> rec = [&](int v) -> Game {
      if (state[v] == 1) throw std::logic_error("extract: cycle without priorities");
      if (state[v] == 2) return memo[v];
      state[v] = 1;
      Game out;
      const VertexLabel& l = g.label[v];
      switch (l.kind) {
        case LabelKind::Lit: {
          if (!l.negated && l.name == exit) {
            // Reaching the exit ends the game unchanged: a trivial test.
            Formula q = mk_atom(taut);
            out = mk_test(mk_or(q, mk_neg(q)));
          } else {
            // Angel must own the literal, Demon must concede it: the
            // composite behaves as the literal at this state.
            Formula lit = l.negated ? mk_neg(mk_atom(l.name)) : mk_atom(l.name);
            out = mk_seq(mk_test(lit), mk_dual_test(lit));
          }
          break;
        }
        case LabelKind::And: out = mk_cap(rec(g.succ[v][0]), rec(g.succ[v][1])); break;
        case LabelKind::Or: out = mk_cup(rec(g.succ[v][0]), rec(g.succ[v][1])); break;
        case LabelKind::Dia: {
          Game head = l.dual ? mk_dual(mk_game(l.name)) : mk_game(l.name);
          out = mk_seq(head, rec(g.succ[v][0]));
          break;
        }
      }
      state[v] = 2;
      memo[v] = out;
      return out;
    };
    return rec(g.initial);
  }

  static Game substitute(const Game& g, const std::string& name, const Game& replacement) {
    GameMap<Game> memo;
    FormulaMap<Formula> fmemo;
    std::function<Game(const Game&)> sg;
    std::function<Formula(const Formula&)> sf;
    sf = [&](const Formula& f) -> Formula {
      if (auto it = fmemo.find(f); it != fmemo.end()) return it->second;
      Formula out;
      switch (f->kind) {
        case FormulaKind::Atom: out = f; break;
        case FormulaKind::Neg: out = mk_neg(sf(f->lhs)); break;
        case FormulaKind::And: out = mk_and(sf(f->lhs), sf(f->rhs)); break;
        case FormulaKind::Or: out = mk_or(sf(f->lhs), sf(f->rhs)); break;
        case FormulaKind::Dia: out = mk_dia(sg(f->game), sf(f->lhs)); break;
      }
      fmemo.emplace(f, out);
      return out;
    };
    sg = [&](const Game& x) -> Game {
      if (auto it = memo.find(x); it != memo.end()) return it->second;
      Game out;
      switch (x->kind) {
        case GameKind::Atomic: out = x->atom == name ? replacement : x; break;
        case GameKind::Dual: out = mk_dual(sg(x->lhs)); break;
        case GameKind::Star: out = mk_star(sg(x->lhs)); break;
        case GameKind::Cross: out = mk_cross(sg(x->lhs)); break;
        case GameKind::Seq: out = mk_seq(sg(x->lhs), sg(x->rhs)); break;
        case GameKind::Cup: out = mk_cup(sg(x->lhs), sg(x->rhs)); break;
        case GameKind::Cap: out = mk_cap(sg(x->lhs), sg(x->rhs)); break;
        case GameKind::Test: out = mk_test(sf(x->test)); break;
        case GameKind::DualTest: out = mk_dual_test(sf(x->test)); break;
      }
      memo.emplace(x, out);
      return out;
    };
    return sg(g);
  }
};

}  // namespace detail

// Game term of a graph with a declared exit; requires the guarded-linear
// conditions including the exit condition.
inline Game extract_game(const SyntaxGraph& g) {
  GraphReport vr = validate_graph(g);
  if (!vr.ok()) throw std::invalid_argument("extract_game: graph fails validation: " + vr.problems[0]);
  if (!g.exit) throw std::invalid_argument("extract_game: graph declares no exit label");
  GlgReport glg = check_glg(g, true);
  if (!glg.pass()) throw std::invalid_argument("extract_game: graph fails the guarded-linear conditions");
  detail::Extractor ex(g);
  return ex.extract(g, *g.exit);
}

// Formula equivalent to a formula graph: the extracted game run against a
// fresh exit letter that occurs nowhere, so its valuation cannot matter.
inline Formula extract_formula(const SyntaxGraph& g) {
  GraphReport vr = validate_graph(g);
  if (!vr.ok()) throw std::invalid_argument("extract_formula: graph fails validation: " + vr.problems[0]);
  GlgReport glg = check_glg(g, false);
  if (!glg.pass()) throw std::invalid_argument("extract_formula: graph fails the guarded-linear conditions");
  detail::Extractor ex(g);
  std::string phantom = ex.fresh_exit();
  SyntaxGraph h = g;
  h.exit = phantom;
  Game d = ex.extract(std::move(h), phantom);
  return mk_dia(d, mk_atom(phantom));
}

}  // namespace glw
