#include <catch2/catch_amalgamated.hpp>

#include <string>

#include "glw/glw.hpp"
#include "support/gen.hpp"

using namespace glw;

namespace {
const std::string kExamples = GLW_EXAMPLES_DIR;
}

TEST_CASE("validation catches each failure class", "[graph]") {
  SyntaxGraph g;
  CHECK_FALSE(validate_graph(g).wellformed);  // no vertices

  g.add_vertex(or_label(), {1, 0});
  CHECK_FALSE(validate_graph(g).wellformed);  // successor out of range

  g = SyntaxGraph{};
  g.add_vertex(dia_label("g"), {0, 0});
  CHECK_FALSE(validate_graph(g).arity_ok);  // diamonds are unary

  g = SyntaxGraph{};
  g.add_vertex(and_label(), {0, 0});
  CHECK_FALSE(validate_graph(g).arity_ok);  // duplicate successors

  g = SyntaxGraph{};
  g.add_vertex(lit_label("p"), {}, kNoPriority);
  g.initial = 4;
  CHECK_FALSE(validate_graph(g).wellformed);

  // Priority-free self-loop through an Or vertex.
  g = SyntaxGraph{};
  g.add_vertex(or_label(), {1, 0});
  g.add_vertex(lit_label("p"));
  GraphReport r = validate_graph(g);
  CHECK_FALSE(r.priority_ok);
  CHECK_FALSE(r.priority_cycle.empty());
  // Giving the loop vertex a priority repairs it.
  g.priority[0] = 1;
  r = validate_graph(g);
  CHECK(r.ok());
  CHECK(r.priority_cycle.empty());

  // Negated exit letter.
  g = SyntaxGraph{};
  g.add_vertex(lit_label("e", true));
  g.exit = "e";
  CHECK_FALSE(validate_graph(g).exit_ok);

  // Exit letter labelling nothing.
  g = SyntaxGraph{};
  g.add_vertex(lit_label("p"));
  g.exit = "e";
  CHECK_FALSE(validate_graph(g).exit_ok);

  // Negative priorities other than the sentinel are malformed.
  g = SyntaxGraph{};
  g.add_vertex(lit_label("p"), {}, -7);
  CHECK_FALSE(validate_graph(g).wellformed);
}

TEST_CASE("generated subgraphs keep reachable structure only", "[graph]") {
  SyntaxGraph g;
  g.add_vertex(or_label(), {1, 2}, 1);
  g.add_vertex(lit_label("p"));
  g.add_vertex(dia_label("g"), {1});
  g.add_vertex(and_label(), {1, 2});  // unreachable from 0
  g.initial = 0;
  g.exit = "p";

  SyntaxGraph sub = generated_subgraph(g, 0);
  CHECK(sub.size() == 3);
  CHECK(sub.initial == 0);
  CHECK(sub.exit == g.exit);
  CHECK(sub.label[0] == or_label());
  CHECK(sub.priority[0] == 1);
  CHECK(validate_graph(sub).ok());

  // Rooting at a literal keeps just that literal.
  sub = generated_subgraph(g, 1);
  CHECK(sub.size() == 1);
  CHECK(sub.label[0] == lit_label("p"));

  CHECK_THROWS_AS(generated_subgraph(g, 9), std::out_of_range);
}

TEST_CASE("path priorities", "[graph]") {
  SyntaxGraph g;
  g.add_vertex(or_label(), {1, 2}, 3);
  g.add_vertex(dia_label("g"), {0}, 2);
  g.add_vertex(lit_label("p"));

  CHECK(path_priority(g, {2}) == -1);
  CHECK(path_priority(g, {1, 0, 2}) == 3);
  CHECK(path_priority(g, {1, 0}) == 3);
  CHECK_THROWS_AS(path_priority(g, {2, 0}), std::invalid_argument);  // not an edge
}

TEST_CASE("reading the bundled graph files", "[graph]") {
  SyntaxGraph g = read_graph(kExamples + "/cross_guarded_star.json");
  REQUIRE(g.size() == 6);
  CHECK(g.initial == 0);
  REQUIRE(g.exit);
  CHECK(*g.exit == "e");
  CHECK(g.label[0] == and_label());
  CHECK(g.priority[0] == 2);
  CHECK(g.label[3] == or_label());
  CHECK(g.priority[3] == 1);
  CHECK(g.label[5] == dia_label("g"));
  CHECK(g.succ[5] == std::vector<int>{3});
  CHECK(validate_graph(g).ok());

  CHECK(validate_graph(read_graph(kExamples + "/choice_dual_test.json")).ok());
  CHECK(validate_graph(read_graph(kExamples + "/nested_fixpoints.json")).ok());
}

TEST_CASE("graph json roundtrips", "[graph]") {
  Rng rng(330101);
  for (int i = 0; i < 150; ++i) {
    int n = 1 + static_cast<int>(rng.below(8));
    SyntaxGraph g = glwtest::random_syntax_graph(rng, n);
    SyntaxGraph back = graph_from_json(graph_to_json(g));
    CHECK(back.label == g.label);
    CHECK(back.succ == g.succ);
    CHECK(back.priority == g.priority);
    CHECK(back.initial == g.initial);
    CHECK(back.exit == g.exit);
  }
}

TEST_CASE("graph schema violations", "[graph]") {
  auto reject = [](const char* text, const char* needle) {
    try {
      graph_from_json(Json::parse(text));
      FAIL_CHECK("expected a schema error for: " << text);
    } catch (const SchemaError& e) {
      INFO(e.what());
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };
  reject(R"({"initial": 0})", "vertices");
  reject(R"({"initial": 0, "vertices": [{"id": 2, "label": {"kind": "lit", "atom": "p"}, "succ": []}]})",
         "out of range");
  reject(R"({"initial": 0, "vertices": [
      {"id": 0, "label": {"kind": "lit", "atom": "p"}, "succ": []},
      {"id": 0, "label": {"kind": "lit", "atom": "q"}, "succ": []}]})",
         "duplicate");
  reject(R"({"initial": 0, "vertices": [{"id": 0, "label": {"kind": "weird"}, "succ": []}]})", "kind");
  reject(R"({"initial": 0, "vertices": [{"id": 0, "label": {"kind": "dia"}, "succ": [0]}]})", "game");
  reject(R"({"initial": 0, "vertices": [{"id": 0, "label": {"kind": "lit"}, "succ": []}]})", "atom");
  reject(R"({"initial": 0, "vertices": [{"id": 0, "label": {"kind": "lit", "atom": "p"}, "succ": [], "priority": -1}]})",
         "priority");
}

TEST_CASE("dot export marks exits, priorities, and the initial vertex", "[graph]") {
  SyntaxGraph g = read_graph(kExamples + "/cross_guarded_star.json");
  std::string dot = export_dot(g);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("doublecircle") != std::string::npos);  // the exit vertex
  CHECK(dot.find("_2") != std::string::npos);            // priority subscript
  CHECK(dot.find("init -> v0") != std::string::npos);
  CHECK(dot.find("v5 -> v3") != std::string::npos);
}
