#pragma once

// Terms of game logic: formulas and games as immutable, shared syntax trees.
// Structural hashes and node counts are precomputed at construction so that
// equality tests, hash maps keyed on terms, and subterm-size orderings are
// cheap everywhere else.

#include <algorithm>
#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace glw {

enum class FormulaKind { Atom, Neg, And, Or, Dia };
enum class GameKind { Atomic, Dual, Seq, Cup, Cap, Star, Cross, Test, DualTest };

struct FormulaNode;
struct GameNode;
using Formula = std::shared_ptr<const FormulaNode>;
using Game = std::shared_ptr<const GameNode>;

struct FormulaNode {
  FormulaKind kind;
  std::string atom;  // Atom only
  Formula lhs;       // Neg: operand; And/Or: left; Dia: continuation
  Formula rhs;       // And/Or: right
  Game game;         // Dia only
  std::size_t hash = 0;
  int size = 1;  // number of nodes, counting through tests
};

struct GameNode {
  GameKind kind;
  std::string atom;  // Atomic only
  Game lhs;          // Dual/Star/Cross: operand; Seq/Cup/Cap: left
  Game rhs;          // Seq/Cup/Cap: right
  Formula test;      // Test/DualTest only
  std::size_t hash = 0;
  int size = 1;
};

namespace detail {

inline void hash_mix(std::size_t& seed, std::size_t v) {
  seed ^= v + 0x9e3779b9 + (seed << 6) + (seed >> 2);
}

inline std::size_t hash_leaf(int tag, const std::string& s) {
  std::size_t h = static_cast<std::size_t>(tag) * 0x9e3779b97f4a7c15ull;
  hash_mix(h, std::hash<std::string>{}(s));
  return h;
}

}  // namespace detail

// -- constructors -----------------------------------------------------------

inline Formula mk_atom(std::string name) {
  auto n = std::make_shared<FormulaNode>();
  n->kind = FormulaKind::Atom;
  n->atom = std::move(name);
  n->hash = detail::hash_leaf(1, n->atom);
  n->size = 1;
  return n;
}

inline Formula mk_neg(Formula f) {
  auto n = std::make_shared<FormulaNode>();
  n->kind = FormulaKind::Neg;
  n->lhs = std::move(f);
  n->hash = detail::hash_leaf(2, "");
  detail::hash_mix(n->hash, n->lhs->hash);
  n->size = 1 + n->lhs->size;
  return n;
}

inline Formula mk_bin(FormulaKind k, Formula a, Formula b) {
  auto n = std::make_shared<FormulaNode>();
  n->kind = k;
  n->lhs = std::move(a);
  n->rhs = std::move(b);
  n->hash = detail::hash_leaf(k == FormulaKind::And ? 3 : 4, "");
  detail::hash_mix(n->hash, n->lhs->hash);
  detail::hash_mix(n->hash, n->rhs->hash);
  n->size = 1 + n->lhs->size + n->rhs->size;
  return n;
}

inline Formula mk_and(Formula a, Formula b) { return mk_bin(FormulaKind::And, std::move(a), std::move(b)); }
inline Formula mk_or(Formula a, Formula b) { return mk_bin(FormulaKind::Or, std::move(a), std::move(b)); }

inline Formula mk_dia(Game g, Formula f) {
  auto n = std::make_shared<FormulaNode>();
  n->kind = FormulaKind::Dia;
  n->game = std::move(g);
  n->lhs = std::move(f);
  n->hash = detail::hash_leaf(5, "");
  detail::hash_mix(n->hash, n->game->hash);
  detail::hash_mix(n->hash, n->lhs->hash);
  n->size = 1 + n->game->size + n->lhs->size;
  return n;
}

inline Game mk_game(std::string name) {
  auto n = std::make_shared<GameNode>();
  n->kind = GameKind::Atomic;
  n->atom = std::move(name);
  n->hash = detail::hash_leaf(11, n->atom);
  n->size = 1;
  return n;
}

inline Game mk_un(GameKind k, Game g) {
  auto n = std::make_shared<GameNode>();
  n->kind = k;
  n->lhs = std::move(g);
  int tag = k == GameKind::Dual ? 12 : k == GameKind::Star ? 13 : 14;
  n->hash = detail::hash_leaf(tag, "");
  detail::hash_mix(n->hash, n->lhs->hash);
  n->size = 1 + n->lhs->size;
  return n;
}

inline Game mk_dual(Game g) { return mk_un(GameKind::Dual, std::move(g)); }
inline Game mk_star(Game g) { return mk_un(GameKind::Star, std::move(g)); }
inline Game mk_cross(Game g) { return mk_un(GameKind::Cross, std::move(g)); }

inline Game mk_gbin(GameKind k, Game a, Game b) {
  auto n = std::make_shared<GameNode>();
  n->kind = k;
  n->lhs = std::move(a);
  n->rhs = std::move(b);
  int tag = k == GameKind::Seq ? 15 : k == GameKind::Cup ? 16 : 17;
  n->hash = detail::hash_leaf(tag, "");
  detail::hash_mix(n->hash, n->lhs->hash);
  detail::hash_mix(n->hash, n->rhs->hash);
  n->size = 1 + n->lhs->size + n->rhs->size;
  return n;
}

inline Game mk_seq(Game a, Game b) { return mk_gbin(GameKind::Seq, std::move(a), std::move(b)); }
inline Game mk_cup(Game a, Game b) { return mk_gbin(GameKind::Cup, std::move(a), std::move(b)); }
inline Game mk_cap(Game a, Game b) { return mk_gbin(GameKind::Cap, std::move(a), std::move(b)); }

inline Game mk_tst(GameKind k, Formula f) {
  auto n = std::make_shared<GameNode>();
  n->kind = k;
  n->test = std::move(f);
  n->hash = detail::hash_leaf(k == GameKind::Test ? 18 : 19, "");
  detail::hash_mix(n->hash, n->test->hash);
  n->size = 1 + n->test->size;
  return n;
}

inline Game mk_test(Formula f) { return mk_tst(GameKind::Test, std::move(f)); }
inline Game mk_dual_test(Formula f) { return mk_tst(GameKind::DualTest, std::move(f)); }

// -- structural equality ----------------------------------------------------

inline bool equal(const Formula& a, const Formula& b);
inline bool equal(const Game& a, const Game& b);

inline bool equal(const Formula& a, const Formula& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  if (a->hash != b->hash || a->kind != b->kind || a->size != b->size) return false;
  switch (a->kind) {
    case FormulaKind::Atom: return a->atom == b->atom;
    case FormulaKind::Neg: return equal(a->lhs, b->lhs);
    case FormulaKind::And:
    case FormulaKind::Or: return equal(a->lhs, b->lhs) && equal(a->rhs, b->rhs);
    case FormulaKind::Dia: return equal(a->game, b->game) && equal(a->lhs, b->lhs);
  }
  return false;
}

inline bool equal(const Game& a, const Game& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  if (a->hash != b->hash || a->kind != b->kind || a->size != b->size) return false;
  switch (a->kind) {
    case GameKind::Atomic: return a->atom == b->atom;
    case GameKind::Dual:
    case GameKind::Star:
    case GameKind::Cross: return equal(a->lhs, b->lhs);
    case GameKind::Seq:
    case GameKind::Cup:
    case GameKind::Cap: return equal(a->lhs, b->lhs) && equal(a->rhs, b->rhs);
    case GameKind::Test:
    case GameKind::DualTest: return equal(a->test, b->test);
  }
  return false;
}

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f ? f->hash : 0; }
};
struct FormulaEq {
  bool operator()(const Formula& a, const Formula& b) const { return equal(a, b); }
};
struct GameHash {
  std::size_t operator()(const Game& g) const { return g ? g->hash : 0; }
};
struct GameEq {
  bool operator()(const Game& a, const Game& b) const { return equal(a, b); }
};

template <typename V>
using FormulaMap = std::unordered_map<Formula, V, FormulaHash, FormulaEq>;
template <typename V>
using GameMap = std::unordered_map<Game, V, GameHash, GameEq>;
using FormulaSet = std::unordered_set<Formula, FormulaHash, FormulaEq>;
using GameSet = std::unordered_set<Game, GameHash, GameEq>;

// -- traversal helpers ------------------------------------------------------

// Visits every subterm, recursing through test formulas and modal games.
template <typename FF, typename GF>
void walk(const Formula& f, FF&& on_formula, GF&& on_game);
template <typename FF, typename GF>
void walk(const Game& g, FF&& on_formula, GF&& on_game);

template <typename FF, typename GF>
void walk(const Formula& f, FF&& on_formula, GF&& on_game) {
  on_formula(f);
  switch (f->kind) {
    case FormulaKind::Atom: break;
    case FormulaKind::Neg: walk(f->lhs, on_formula, on_game); break;
    case FormulaKind::And:
    case FormulaKind::Or:
      walk(f->lhs, on_formula, on_game);
      walk(f->rhs, on_formula, on_game);
      break;
    case FormulaKind::Dia:
      walk(f->game, on_formula, on_game);
      walk(f->lhs, on_formula, on_game);
      break;
  }
}

template <typename FF, typename GF>
void walk(const Game& g, FF&& on_formula, GF&& on_game) {
  on_game(g);
  switch (g->kind) {
    case GameKind::Atomic: break;
    case GameKind::Dual:
    case GameKind::Star:
    case GameKind::Cross: walk(g->lhs, on_formula, on_game); break;
    case GameKind::Seq:
    case GameKind::Cup:
    case GameKind::Cap:
      walk(g->lhs, on_formula, on_game);
      walk(g->rhs, on_formula, on_game);
      break;
    case GameKind::Test:
    case GameKind::DualTest: walk(g->test, on_formula, on_game); break;
  }
}

// True iff `needle` occurs in `hay` (reflexively, through tests).
inline bool is_subterm(const Game& needle, const Game& hay) {
  bool found = false;
  walk(hay, [](const Formula&) {}, [&](const Game& g) {
    if (!found && equal(g, needle)) found = true;
  });
  return found;
}

// Atom / atomic-game alphabets, sorted and deduplicated.
template <typename Term>
std::vector<std::string> atom_names(const Term& t) {
  std::vector<std::string> out;
  walk(t,
       [&](const Formula& f) {
         if (f->kind == FormulaKind::Atom) out.push_back(f->atom);
       },
       [](const Game&) {});
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

template <typename Term>
std::vector<std::string> game_names(const Term& t) {
  std::vector<std::string> out;
  walk(t, [](const Formula&) {},
       [&](const Game& g) {
         if (g->kind == GameKind::Atomic) out.push_back(g->atom);
       });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace glw
