#include <catch2/catch_amalgamated.hpp>

#include "glw/glw.hpp"
#include "support/corpus.hpp"
#include "support/gen.hpp"

using namespace glw;

namespace {

GameModel two_state_model() {
  GameModel m;
  m.states = {"s0", "s1"};
  m.props["p"] = 0b10;
  Frame g;
  g.at = {make_family({0b10}), make_family({0b10})};
  m.games["g"] = g;
  return m;
}

}  // namespace

TEST_CASE("literal positions are stuck for the right player", "[evalgame]") {
  GameModel m = two_state_model();
  Formula p = parse_formula("p");
  EvalArena ea = build_eval_arena(m, p, {});

  int at_s0 = ea.state_position(0, p);
  int at_s1 = ea.state_position(1, p);
  REQUIRE(at_s0 >= 0);
  REQUIRE(at_s1 >= 0);
  CHECK(ea.arena.succ[at_s0].empty());
  CHECK(ea.arena.succ[at_s1].empty());
  CHECK(ea.arena.owner[at_s0] == Player::Eloise);   // p false: Eloise stuck
  CHECK(ea.arena.owner[at_s1] == Player::Abelard);  // p true: Abelard stuck

  SolveResult r = solve(ea.arena);
  CHECK_FALSE(r.won_by_eloise[at_s0]);
  CHECK(r.won_by_eloise[at_s1]);
}

TEST_CASE("diamond positions carry their game's priority", "[evalgame]") {
  GameModel m = two_state_model();
  Formula f = parse_formula("<g^*>p");
  EvalArena ea = build_eval_arena(m, f, canonical_priorities(f));

  int root = ea.state_position(0, f);
  REQUIRE(root >= 0);
  CHECK(ea.arena.priority[root] == 3);
  REQUIRE(ea.arena.succ[root].size() == 1);  // single unfolding move

  // Subset positions all sit at priority 0.
  for (size_t i = 0; i < ea.positions.size(); ++i)
    if (ea.positions[i].is_subset) CHECK(ea.arena.priority[i] == 0);
}

TEST_CASE("atomic diamonds offer neighbourhood sets", "[evalgame]") {
  GameModel m = two_state_model();
  Formula f = parse_formula("<g>p");
  EvalArena ea = build_eval_arena(m, f, {});

  int root = ea.state_position(0, f);
  REQUIRE(root >= 0);
  CHECK(ea.arena.owner[root] == Player::Eloise);
  // g(s0) is the up-closure of {s1}: two member sets on two states.
  REQUIRE(ea.arena.succ[root].size() == 2);
  for (int t : ea.arena.succ[root]) {
    const EvalPosition& pos = ea.positions[t];
    CHECK(pos.is_subset);
    CHECK(ea.arena.owner[t] == Player::Abelard);
    CHECK(family_member(frame_of(m, "g").at[0], pos.subset));
  }

  EvalArena minimal = build_eval_arena(m, f, {}, /*minimal_only=*/true);
  int mroot = minimal.state_position(0, f);
  REQUIRE(minimal.arena.succ[mroot].size() == 1);
  CHECK(minimal.positions[minimal.arena.succ[mroot][0]].subset == 0b10);
}

TEST_CASE("dual diamonds swap the chooser", "[evalgame]") {
  GameModel m = two_state_model();
  Formula f = parse_formula("<g^d>p");
  EvalArena ea = build_eval_arena(m, f, {});
  int root = ea.state_position(0, f);
  REQUIRE(root >= 0);
  CHECK(ea.arena.owner[root] == Player::Abelard);
  for (int t : ea.arena.succ[root]) CHECK(ea.arena.owner[t] == Player::Eloise);
}

TEST_CASE("bad inputs are rejected", "[evalgame]") {
  GameModel m = two_state_model();
  CHECK_THROWS_AS(build_eval_arena(m, parse_formula("!(p & q)"), {}), std::invalid_argument);
  Formula star = parse_formula("<g^*>p");
  CHECK_THROWS_AS(build_eval_arena(m, star, {}), std::invalid_argument);  // missing priority
}

TEST_CASE("game evaluation matches standard evaluation on the corpus", "[evalgame]") {
  GameModel m = two_state_model();
  for (const std::string& s : glwtest::corpus()) {
    Formula f = parse_formula(s);
    INFO(s);
    CHECK(eval_by_game(m, f) == eval_standard(m, f));
  }
}

TEST_CASE("game evaluation matches standard evaluation on random instances", "[evalgame]") {
  Rng rng(812001);
  const std::vector<std::string> atoms = {"p", "q"}, games = {"g", "h"};
  for (int i = 0; i < 150; ++i) {
    int n = 1 + static_cast<int>(rng.below(3));
    GameModel m = random_model(n, atoms, games, 0.6, rng.next());
    Formula f = glwtest::random_formula(rng, 3, atoms, games);
    INFO(render(f) << " on " << n << " states");
    StateSet expect = eval_standard(m, f);
    CHECK(eval_by_game(m, f) == expect);
    CHECK(eval_by_game(m, f, Lookup::Lenient, /*minimal_only=*/true) == expect);
  }
}

TEST_CASE("restricting to minimal sets keeps the arena small", "[evalgame]") {
  GameModel m = random_model(4, {"p"}, {"g"}, 0.5, 99);
  Formula f = parse_formula("<g><g>p");
  EvalArena full = build_eval_arena(m, f, {});
  EvalArena min = build_eval_arena(m, f, {}, /*minimal_only=*/true);
  CHECK(min.arena.size() <= full.arena.size());
  SolveResult a = solve(full.arena);
  SolveResult b = solve(min.arena);
  for (int s = 0; s < m.n_states(); ++s) {
    int pf = full.state_position(s, f);
    int pm = min.state_position(s, f);
    CHECK(a.won_by_eloise[pf] == b.won_by_eloise[pm]);
  }
}
