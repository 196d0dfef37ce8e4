#include <catch2/catch_amalgamated.hpp>

#include <string>

#include "glw/glw.hpp"
#include "support/corpus.hpp"
#include "support/gen.hpp"

using namespace glw;

namespace {

const std::string kExamples = GLW_EXAMPLES_DIR;

EquivOptions quick(int samples, uint64_t seed) {
  EquivOptions opt;
  opt.samples = samples;
  opt.max_states = 3;
  opt.seed = seed;
  return opt;
}

// No exit letter, no fresh names; the reserved tautology atom may appear.
void check_hygiene(const Game& g, const std::string& exit) {
  for (const std::string& a : atom_names(g)) {
    INFO("atom " << a << " in " << render(g));
    CHECK(a != exit);
    if (a.size() >= 2 && a[0] == '$') CHECK(a == "$t");
  }
  for (const std::string& a : game_names(g)) {
    INFO("game " << a << " in " << render(g));
    CHECK(a.rfind("$g", 0) != 0);
  }
}

}  // namespace

TEST_CASE("a bare exit literal extracts to a vacuous test", "[extract]") {
  SyntaxGraph g;
  g.add_vertex(lit_label("e"));
  g.exit = "e";
  Game d = extract_game(g);
  CHECK(render(d) == "($t | !$t)?");

  // Its denotation is the unit frame: the game changes nothing.
  GameModel m = random_model(3, {"p"}, {"g"}, 0.5, 5);
  CHECK(game_denotation(m, d) == frame_unit(3));
}

TEST_CASE("an acyclic diamond extracts to its own game", "[extract]") {
  SyntaxGraph g = compile_game(parse_game("g"), "e");
  Game d = extract_game(g);
  check_hygiene(d, "e");
  Rng rng(771001);
  for (int k = 0; k < 30; ++k) {
    int n = 1 + static_cast<int>(rng.below(3));
    GameModel m = random_model(n, {"p"}, {"g"}, 0.6, rng.next());
    CHECK(game_denotation(m, d) == frame_of(m, "g"));
  }
}

TEST_CASE("ordinary literals extract to a freezing sequence", "[extract]") {
  // A conjunction of p with the exit vertex: the p side must freeze the play.
  SyntaxGraph g;
  g.add_vertex(and_label(), {1, 2});
  g.add_vertex(lit_label("p"));
  g.add_vertex(lit_label("e"));
  g.exit = "e";
  Game d = extract_game(g);
  check_hygiene(d, "e");
  // <d>psi must come out as p AND psi: the p-branch contributes p no matter
  // what continuation follows, while the exit branch forwards psi.
  Rng rng(771002);
  for (int k = 0; k < 30; ++k) {
    GameModel m = random_model(2, {"p", "q"}, {"g"}, 0.6, rng.next());
    StateSet p = prop_of(m, "p"), q = prop_of(m, "q");
    CHECK(eval_standard(m, mk_dia(d, mk_atom("q"))) == (p & q));
    CHECK(eval_standard(m, mk_dia(d, mk_neg(mk_atom("q")))) == (p & (q ^ m.full())));
    // The continuation does not leak into the p-branch: an unknown atom
    // (false everywhere) zeroes the whole diamond only through psi.
    CHECK(eval_standard(m, mk_dia(d, mk_atom("zz"))) == 0u);
    CHECK(eval_standard(m, mk_dia(d, mk_or(mk_atom("zz"), mk_neg(mk_atom("zz"))))) == p);
  }
}

TEST_CASE("the drawn cross graph extracts to the recorded game", "[extract]") {
  SyntaxGraph g = read_graph(kExamples + "/cross_guarded_star.json");
  Game d = extract_game(g);
  check_hygiene(d, "e");
  CHECK(render(d).find("^x") != std::string::npos);  // even head became a demonic iteration

  // The reference answer for this graph, written out by hand.
  Formula claimed = parse_formula("<(g^* n (p? ; p!))^x>e");
  EquivResult r = check_equiv(mk_dia(d, mk_atom("e")), claimed, quick(120, 771003));
  INFO(render(d));
  CHECK(r.equivalent);

  // And it still matches what the graph itself accepts.
  r = check_equiv(mk_dia(d, mk_atom("e")), g, quick(60, 771004));
  CHECK(r.equivalent);
}

TEST_CASE("extraction inverts compilation on sampled corpus entries", "[extract]") {
  Rng rng(771005);
  int idx = 0;
  for (const std::string& s : glwtest::corpus()) {
    ++idx;
    if (idx % 5 != 0) continue;  // a fifth of the corpus; the gate runs it all
    Formula f = to_dnnf(parse_formula(s));
    SyntaxGraph g = compile_formula(f);
    Formula back = extract_formula(g);
    INFO(s << "  ~>  " << render(back));
    EquivResult r = check_equiv(back, f, quick(40, derive_seed(771006, idx)));
    CHECK(r.equivalent);
  }
}

TEST_CASE("formula extraction ignores its phantom exit atom", "[extract]") {
  Formula f = to_dnnf(parse_formula("<(p? ; g^*)^x>e"));
  Formula back = extract_formula(compile_formula(f));
  REQUIRE(back->kind == FormulaKind::Dia);
  // The diamond closes over a fresh atom; δ itself never mentions it.
  const std::string& phantom = back->lhs->atom;
  CHECK(phantom.rfind("$e", 0) == 0);
  for (const std::string& a : atom_names(back->game)) CHECK(a != phantom);

  // Flipping the phantom's valuation cannot change the result.
  Rng rng(771007);
  for (int k = 0; k < 20; ++k) {
    GameModel m = random_model(3, {"p", "e"}, {"g"}, 0.6, rng.next());
    m.props[phantom] = 0;
    StateSet low = eval_standard(m, back);
    m.props[phantom] = m.full();
    CHECK(eval_standard(m, back) == low);
    CHECK(low == eval_standard(m, f));
  }
}

TEST_CASE("remaining drawn graphs extract to equivalents of their formulas", "[extract]") {
  SyntaxGraph mid = read_graph(kExamples + "/choice_dual_test.json");
  EquivResult r = check_equiv(mk_dia(extract_game(mid), mk_atom("e")),
                              parse_formula("<(p! ; g) u q?>e"), quick(80, 771008));
  CHECK(r.equivalent);

  SyntaxGraph right = read_graph(kExamples + "/nested_fixpoints.json");
  Game d = extract_game(right);
  check_hygiene(d, "e");
  r = check_equiv(mk_dia(d, mk_atom("e")),
                  parse_formula("<(((!p)? ; g)^* u h)^x>e"), quick(80, 771009));
  INFO(render(d));
  CHECK(r.equivalent);
}

TEST_CASE("extraction refuses unfit graphs", "[extract]") {
  SyntaxGraph g;
  g.add_vertex(lit_label("e"));
  CHECK_THROWS_AS(extract_game(g), std::invalid_argument);  // no exit declared

  // A graph failing the leaving condition: both branches of the head loop
  // straight back at low priority. The exit vertex sits off to the side.
  SyntaxGraph bad;
  bad.add_vertex(or_label(), {1, 2}, 3);
  bad.add_vertex(dia_label("g"), {0});
  bad.add_vertex(dia_label("h"), {0});
  bad.add_vertex(lit_label("e"));
  bad.exit = "e";
  REQUIRE_FALSE(check_glg(bad, true).pass());
  CHECK_THROWS_AS(extract_game(bad), std::invalid_argument);

  // Structurally broken graphs never reach the conditions.
  SyntaxGraph broken;
  broken.add_vertex(and_label(), {0, 0});
  CHECK_THROWS_AS(extract_game(broken), std::invalid_argument);
  CHECK_THROWS_AS(extract_formula(broken), std::invalid_argument);
}

TEST_CASE("fresh names avoid collisions with input labels", "[extract]") {
  // A graph that already uses $e0 as an atom label cannot confuse the
  // phantom-exit counter: parse rejects such names, but graphs may carry them.
  SyntaxGraph g;
  g.add_vertex(and_label(), {1, 2});
  g.add_vertex(lit_label("$e0"));
  g.add_vertex(lit_label("p"));
  Formula back = extract_formula(g);
  REQUIRE(back->kind == FormulaKind::Dia);
  CHECK(back->lhs->atom != "$e0");  // the phantom skipped past the taken name
}
