#include <catch2/catch_amalgamated.hpp>

#include "glw/glw.hpp"
#include "support/gen.hpp"

using namespace glw;

TEST_CASE("known negation-pushing rewrites", "[dnnf]") {
  auto nf = [](const char* s) { return render(to_dnnf(parse_formula(s))); };
  CHECK(nf("!!p") == "p");
  CHECK(nf("!(p & q)") == "!p | !q");
  CHECK(nf("!(p | q)") == "!p & !q");
  CHECK(nf("!<g>p") == "<g^d>!p");
  CHECK(nf("<(g^*)^d>p") == "<g^d^x>p");
  CHECK(nf("<(g^x)^d>p") == "<g^d^*>p");
  CHECK(nf("<(g ; h)^d>p") == "<g^d ; h^d>p");
  CHECK(nf("<(g u h)^d>p") == "<g^d n h^d>p");
  CHECK(nf("<(g n h)^d>p") == "<g^d u h^d>p");
  // Dualising a test negates it: demanding is refusing the complement.
  CHECK(nf("<p?^d>q") == "<(!p)!>q");
  CHECK(nf("<p!^d>q") == "<(!p)?>q");
  CHECK(nf("<g^d^d>p") == "<g>p");
  // Negations inside tests are pushed too.
  CHECK(nf("<(!(p & q))?>r") == "<(!p | !q)?>r");
}

TEST_CASE("dnnf output satisfies the predicate and is idempotent", "[dnnf]") {
  Rng rng(77001);
  const std::vector<std::string> atoms = {"p", "q"}, games = {"g", "h"};
  for (int i = 0; i < 400; ++i) {
    Formula f = glwtest::random_formula(rng, 5, atoms, games);
    Formula n = to_dnnf(f);
    INFO(render(f) << "  ~>  " << render(n));
    CHECK(is_dnnf(n));
    CHECK(equal(n, to_dnnf(n)));
  }
  for (int i = 0; i < 400; ++i) {
    Game g = glwtest::random_game(rng, 5, atoms, games);
    Game n = to_dnnf(g);
    INFO(render(g) << "  ~>  " << render(n));
    CHECK(is_dnnf(n));
    CHECK(equal(n, to_dnnf(n)));
  }
}

TEST_CASE("dnnf predicate rejects buried negations and duals", "[dnnf]") {
  CHECK(is_dnnf(parse_formula("!p")));
  CHECK_FALSE(is_dnnf(parse_formula("!!p")));
  CHECK_FALSE(is_dnnf(parse_formula("!(p & q)")));
  CHECK(is_dnnf(parse_formula("<g^d>p")));
  CHECK_FALSE(is_dnnf(parse_formula("<(g u h)^d>p")));
  CHECK(is_dnnf(parse_formula("<g>!p")));
  CHECK_FALSE(is_dnnf(parse_game("(!(p | q))?")));
  CHECK(is_dnnf(parse_game("(!p)?")));
  // Duals of atomic games are fine, duals of composites are not.
  CHECK(is_dnnf(parse_game("g^d")));
  CHECK_FALSE(is_dnnf(parse_game("(g ; h)^d")));
}

TEST_CASE("normalisation preserves meaning", "[dnnf]") {
  Rng rng(77002);
  const std::vector<std::string> atoms = {"p", "q"}, games = {"g", "h"};
  for (int i = 0; i < 120; ++i) {
    Formula f = glwtest::random_formula(rng, 4, atoms, games);
    Formula n = to_dnnf(f);
    for (int j = 0; j < 4; ++j) {
      int states = 1 + static_cast<int>(rng.below(3));
      GameModel m = random_model(states, atoms, games, 0.6,
                                 derive_seed(990'000 + i, j));
      INFO(render(f) << " vs " << render(n) << " on " << states << " states");
      CHECK(eval_standard(m, f) == eval_standard(m, n));
    }
  }
}
