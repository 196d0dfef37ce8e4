#include <catch2/catch_amalgamated.hpp>

#include "glw/glw.hpp"
#include "support/ext_family.hpp"
#include "support/gen.hpp"

using namespace glw;

namespace {

// Two states, p only at s1, g points every state at {s1}.
GameModel two_state_model() {
  GameModel m;
  m.states = {"s0", "s1"};
  m.props["p"] = 0b10;
  Frame g;
  g.at = {make_family({0b10}), make_family({0b10})};
  m.games["g"] = g;
  return m;
}

StateSet sat(const GameModel& m, const char* s) { return eval_standard(m, parse_formula(s)); }

}  // namespace

TEST_CASE("frame constants and the unit", "[model]") {
  Frame eta = frame_unit(2);
  CHECK(eta.at[0] == make_family({0b01}));
  CHECK(eta.at[1] == make_family({0b10}));
  CHECK(frame_empty(2).at[0] == family_empty());
  CHECK(frame_top(2).at[1] == family_all());
  CHECK(frame_leq(frame_empty(2), eta));
  CHECK(frame_leq(eta, frame_top(2)));
  CHECK_FALSE(frame_leq(frame_top(2), eta));
}

TEST_CASE("evaluation on the two-state model", "[model]") {
  GameModel m = two_state_model();
  CHECK(sat(m, "p") == 0b10);
  CHECK(sat(m, "!p") == 0b01);
  CHECK(sat(m, "<g>p") == 0b11);
  CHECK(sat(m, "<g^*>p") == 0b11);
  CHECK(sat(m, "<g^x>p") == 0b10);
  CHECK(sat(m, "<g^d>p") == 0b11);
  CHECK(sat(m, "<g^d>!p") == 0b00);
  CHECK(sat(m, "<p?>p") == 0b10);
  CHECK(sat(m, "<p!>!p") == 0b11);
  CHECK(sat(m, "p & !p") == 0b00);
  CHECK(sat(m, "p | !p") == 0b11);
}

TEST_CASE("iterated frames on the two-state model", "[model]") {
  GameModel m = two_state_model();
  Frame star = game_denotation(m, parse_game("g^*"));
  REQUIRE(star.n_states() == 2);
  CHECK(star.at[0] == make_family({0b01, 0b10}));
  CHECK(star.at[1] == make_family({0b10}));

  Frame cross = game_denotation(m, parse_game("g^x"));
  CHECK(cross.at[0] == make_family({0b11}));
  CHECK(cross.at[1] == make_family({0b10}));

  Frame dual = game_denotation(m, parse_game("g^d"));
  CHECK(dual.at[0] == make_family({0b10}));
  CHECK(dual.at[1] == make_family({0b10}));
}

TEST_CASE("test games freeze or free the player", "[model]") {
  GameModel m = two_state_model();
  Frame test = game_denotation(m, parse_game("p?"));
  CHECK(test.at[0] == family_empty());
  CHECK(test.at[1] == make_family({0b10}));

  Frame dual_test = game_denotation(m, parse_game("p!"));
  CHECK(dual_test.at[0] == make_family({0b01}));
  CHECK(dual_test.at[1] == family_all());
}

TEST_CASE("lenient and strict lookups", "[model]") {
  GameModel m = two_state_model();
  CHECK(sat(m, "q") == 0b00);
  CHECK(sat(m, "!q") == 0b11);
  CHECK(sat(m, "<k>p") == 0b00);
  CHECK(sat(m, "<k^d>p") == 0b11);  // empty frame dualises to the full one
  CHECK_THROWS_AS(eval_standard(m, parse_formula("q"), Lookup::Strict), std::out_of_range);
  CHECK_THROWS_AS(eval_standard(m, parse_formula("<k>p"), Lookup::Strict), std::out_of_range);
  CHECK_THROWS_AS(game_denotation(m, parse_game("k"), Lookup::Strict), std::out_of_range);
  CHECK_NOTHROW(eval_standard(m, parse_formula("<g>p"), Lookup::Strict));
}

TEST_CASE("standard evaluation matches the explicit-powerset evaluator", "[model]") {
  Rng rng(501100);
  const std::vector<std::string> atoms = {"p", "q"}, games = {"g", "h"};
  for (int i = 0; i < 250; ++i) {
    int n = 1 + static_cast<int>(rng.below(4));
    GameModel m = random_model(n, atoms, games, 0.6, rng.next());
    Formula f = glwtest::random_formula(rng, 4, atoms, games);
    INFO(render(f) << " on " << n << " states");
    CHECK(eval_standard(m, f) == glwtest::ext_eval(m, f));
  }
}

TEST_CASE("frame operations satisfy the dual laws", "[model]") {
  Rng rng(501101);
  for (int i = 0; i < 200; ++i) {
    int n = 1 + static_cast<int>(rng.below(3));
    Frame f = glwtest::random_frame(rng, n);
    Frame g = glwtest::random_frame(rng, n);

    CHECK(frame_dual(frame_dual(f)) == f);
    CHECK(frame_dual(frame_seq(f, g)) == frame_seq(frame_dual(f), frame_dual(g)));
    CHECK(frame_dual(frame_unit(n)) == frame_unit(n));
    CHECK(frame_dual(frame_cup(f, g)) == frame_cap(frame_dual(f), frame_dual(g)));
    CHECK(frame_dual(frame_cap(f, g)) == frame_cup(frame_dual(f), frame_dual(g)));
    if (frame_leq(f, g)) CHECK(frame_leq(frame_dual(g), frame_dual(f)));
    CHECK(frame_dual(frame_star(f)) == frame_cross(frame_dual(f)));
    CHECK(frame_dual(frame_cross(f)) == frame_star(frame_dual(f)));
  }
}

TEST_CASE("frame operations match the explicit-powerset versions", "[model]") {
  Rng rng(501102);
  using namespace glwtest;
  for (int i = 0; i < 200; ++i) {
    int n = 1 + static_cast<int>(rng.below(3));
    Frame f = random_frame(rng, n);
    Frame g = random_frame(rng, n);
    ExtFrame ef = ext_from_frame(f);
    ExtFrame eg = ext_from_frame(g);

    CHECK(ext_from_frame(frame_seq(f, g)).at == ext_seq(ef, eg).at);
    CHECK(ext_from_frame(frame_dual(f)).at == ext_dual(ef).at);
    CHECK(ext_from_frame(frame_cup(f, g)).at == ext_cup(ef, eg).at);
    CHECK(ext_from_frame(frame_cap(f, g)).at == ext_cap(ef, eg).at);
    CHECK(ext_from_frame(frame_star(f)).at == ext_star(ef).at);
    CHECK(ext_from_frame(frame_cross(f)).at == ext_cross(ef).at);
    CHECK(frame_leq(f, g) == ext_leq(ef, eg));
  }
}

TEST_CASE("star and cross are extremal fixpoints", "[model]") {
  Rng rng(501103);
  int prefix_hits = 0, postfix_hits = 0;
  for (int i = 0; i < 400; ++i) {
    int n = 1 + static_cast<int>(rng.below(3));
    Frame f = glwtest::random_frame(rng, n);
    Frame eta = frame_unit(n);

    Frame star = frame_star(f);
    CHECK(star == frame_cup(eta, frame_seq(f, star)));
    Frame cross = frame_cross(f);
    CHECK(cross == frame_cap(eta, frame_seq(f, cross)));

    // Against a random frame: anything the map fixes from above bounds the
    // star, anything fixed from below is bounded by the cross.
    Frame g = glwtest::random_frame(rng, n);
    if (frame_leq(frame_cup(eta, frame_seq(f, g)), g)) {
      ++prefix_hits;
      CHECK(frame_leq(star, g));
    }
    if (frame_leq(g, frame_cap(eta, frame_seq(f, g)))) {
      ++postfix_hits;
      CHECK(frame_leq(g, cross));
    }
  }
  CHECK(prefix_hits > 10);
  CHECK(postfix_hits > 10);
}

TEST_CASE("evaluation respects the fixpoint unfoldings", "[model]") {
  Rng rng(501104);
  const std::vector<std::string> atoms = {"p", "q"}, games = {"g", "h"};
  for (int i = 0; i < 120; ++i) {
    int n = 1 + static_cast<int>(rng.below(4));
    GameModel m = random_model(n, atoms, games, 0.6, rng.next());
    Formula body = glwtest::random_formula(rng, 2, atoms, games);
    Game game = glwtest::random_game(rng, 2, atoms, games);
    Formula star = mk_dia(mk_star(game), body);
    Formula unfolded_star = mk_or(body, mk_dia(game, star));
    CHECK(eval_standard(m, star) == eval_standard(m, unfolded_star));
    Formula cross = mk_dia(mk_cross(game), body);
    Formula unfolded_cross = mk_and(body, mk_dia(game, cross));
    CHECK(eval_standard(m, cross) == eval_standard(m, unfolded_cross));
  }
}
