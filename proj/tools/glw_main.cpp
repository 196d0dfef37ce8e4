// glw: command line workbench for game logic over monotone neighbourhood
// models. One subcommand per operation surface; exit code 0 on success, 1
// when a checked property fails (a counterexample is printed), 2 on usage,
// parse or schema errors.

#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "glw/glw.hpp"

namespace {

using glw::Json;

Json sat_json(const glw::GameModel& m, glw::StateSet u) {
  Json j;
  j["sat"] = glw::state_names(m, u);
  return j;
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

glw::GameModel load_model(const std::string& path, bool quiet = false) {
  glw::ModelReadResult r = glw::read_model(path);
  if (!quiet)
    for (const std::string& w : r.warnings) std::cerr << "warning: " << path << ": " << w << "\n";
  return std::move(r.model);
}

Json verdict_json(const glw::GlgVerdict& v) {
  Json j;
  j["ok"] = v.ok;
  if (!v.ok) {
    j["counterexample"] = v.counterexample;
    j["detail"] = v.detail;
  }
  return j;
}

Json glg_json(const glw::GlgReport& r) {
  Json j;
  j["pass"] = r.pass();
  j["injective"] = r.injective;
  j["checked_exit"] = r.checked_exit;
  Json heads = Json::array();
  for (const glw::GlgHead& h : r.heads) {
    Json hj;
    hj["priority"] = h.priority;
    hj["vertex"] = h.vertex;
    hj["witness_found"] = h.witness_found;
    if (h.witness_found) {
      hj["leave"] = h.leave;
      hj["remain"] = h.remain;
    }
    heads.push_back(hj);
  }
  j["heads"] = heads;
  j["parity"] = verdict_json(r.parity);
  j["brexit"] = verdict_json(r.brexit);
  j["leaving"] = verdict_json(r.leaving);
  j["no_remain"] = verdict_json(r.no_remain);
  j["exit"] = verdict_json(r.exit);
  return j;
}

Json equiv_json(const glw::EquivResult& r) {
  Json j;
  j["status"] = r.equivalent ? "equivalent" : "counterexample";
  j["models_checked"] = r.models_checked;
  if (r.witness) {
    Json w;
    w["model"] = glw::model_to_json(r.witness->model);
    w["state"] = r.witness->state;
    w["lhs"] = r.witness->lhs_true;
    w["rhs"] = r.witness->rhs_true;
    j["counterexample"] = w;
  }
  return j;
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

struct SideFlags {
  std::string formula;
  std::string graph;

  glw::TermOrGraph resolve(const std::string& which) const {
    if (formula.empty() == graph.empty())
      throw CLI::ValidationError("equiv", "give exactly one of --formula-" + which + " / --graph-" + which);
    if (!formula.empty()) return glw::parse_formula(formula);
    return glw::read_graph(graph);
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for game logic over monotone neighbourhood models"};
  app.require_subcommand(1);

  std::uint64_t env_seed = 0;
  if (const char* s = std::getenv("GLW_SEED")) env_seed = std::strtoull(s, nullptr, 10);

  int rc = 0;

  // parse: echo the canonical rendering of a formula or game term.
  std::string parse_formula_str, parse_game_str;
  CLI::App* cmd_parse = app.add_subcommand("parse", "parse a term and print its canonical form");
  cmd_parse->add_option("--formula", parse_formula_str, "formula text");
  cmd_parse->add_option("--game", parse_game_str, "game term text");
  cmd_parse->callback([&] {
    if (parse_formula_str.empty() == parse_game_str.empty())
      throw CLI::ValidationError("parse", "give exactly one of --formula / --game");
    if (!parse_formula_str.empty())
      std::cout << glw::render(glw::parse_formula(parse_formula_str)) << "\n";
    else
      std::cout << glw::render(glw::parse_game(parse_game_str)) << "\n";
  });

  // dnnf: rewrite to dual-and-negation normal form.
  std::string dnnf_formula_str, dnnf_game_str;
  CLI::App* cmd_dnnf = app.add_subcommand("dnnf", "rewrite a term to dual/negation normal form");
  cmd_dnnf->add_option("--formula", dnnf_formula_str, "formula text");
  cmd_dnnf->add_option("--game", dnnf_game_str, "game term text");
  cmd_dnnf->callback([&] {
    if (dnnf_formula_str.empty() == dnnf_game_str.empty())
      throw CLI::ValidationError("dnnf", "give exactly one of --formula / --game");
    if (!dnnf_formula_str.empty())
      std::cout << glw::render(glw::to_dnnf(glw::parse_formula(dnnf_formula_str))) << "\n";
    else
      std::cout << glw::render(glw::to_dnnf(glw::parse_game(dnnf_game_str))) << "\n";
  });

  // eval: satisfaction set of a formula, by either or both semantics.
  std::string eval_model_path, eval_formula_str, eval_method = "both";
  CLI::App* cmd_eval = app.add_subcommand("eval", "evaluate a formula on a model");
  cmd_eval->add_option("--model", eval_model_path, "model JSON file")->required();
  cmd_eval->add_option("--formula", eval_formula_str, "formula text")->required();
  cmd_eval->add_option("--method", eval_method, "standard | game | both (cross-checked)")
      ->check(CLI::IsMember({"standard", "game", "both"}));
  cmd_eval->callback([&] {
    glw::GameModel m = load_model(eval_model_path);
    glw::Formula f = glw::parse_formula(eval_formula_str);
    if (eval_method == "standard") {
      print_json(sat_json(m, glw::eval_standard(m, f)));
      return;
    }
    if (eval_method == "game") {
      print_json(sat_json(m, glw::eval_by_game(m, f)));
      return;
    }
    glw::StateSet std_set = glw::eval_standard(m, f);
    glw::StateSet game_set = glw::eval_by_game(m, f);
    if (std_set != game_set) {
      Json j;
      j["mismatch"] = true;
      j["standard"] = glw::state_names(m, std_set);
      j["game"] = glw::state_names(m, game_set);
      print_json(j);
      std::cerr << "error: standard and game semantics disagree\n";
      rc = 1;
      return;
    }
    print_json(sat_json(m, std_set));
  });

  // compile: term to syntax graph.
  std::string comp_formula_str, comp_game_str, comp_exit, comp_out, comp_dot;
  CLI::App* cmd_compile = app.add_subcommand("compile", "compile a term to a syntax graph");
  cmd_compile->add_option("--formula", comp_formula_str, "formula text");
  cmd_compile->add_option("--game", comp_game_str, "game term text (requires --exit)");
  cmd_compile->add_option("--exit", comp_exit, "exit atom for a game compilation");
  cmd_compile->add_option("--out", comp_out, "output graph JSON path (stdout if absent)");
  cmd_compile->add_option("--dot", comp_dot, "also write a DOT rendering here");
  cmd_compile->callback([&] {
    if (comp_formula_str.empty() == comp_game_str.empty())
      throw CLI::ValidationError("compile", "give exactly one of --formula / --game");
    glw::SyntaxGraph g;
    if (!comp_formula_str.empty()) {
      g = glw::compile_formula(glw::to_dnnf(glw::parse_formula(comp_formula_str)));
    } else {
      if (comp_exit.empty()) throw CLI::ValidationError("compile", "--game requires --exit");
      g = glw::compile_game(glw::to_dnnf(glw::parse_game(comp_game_str)), comp_exit);
    }
    if (!comp_dot.empty()) {
      std::ofstream out(comp_dot);
      if (!out) throw glw::SchemaError("cannot open " + comp_dot);
      out << glw::export_dot(g);
    }
    if (comp_out.empty())
      print_json(glw::graph_to_json(g));
    else
      glw::write_graph(comp_out, g);
  });

  // extract: syntax graph back to a term.
  std::string ext_graph_path;
  CLI::App* cmd_extract = app.add_subcommand("extract", "extract a term from a syntax graph");
  cmd_extract->add_option("--graph", ext_graph_path, "graph JSON file")->required();
  cmd_extract->callback([&] {
    glw::SyntaxGraph g = glw::read_graph(ext_graph_path);
    if (g.exit)
      std::cout << glw::render(glw::extract_game(g)) << "\n";
    else
      std::cout << glw::render(glw::extract_formula(g)) << "\n";
  });

  // validate: structural well-formedness of a graph.
  std::string val_graph_path;
  CLI::App* cmd_validate = app.add_subcommand("validate", "check syntax graph well-formedness");
  cmd_validate->add_option("--graph", val_graph_path, "graph JSON file")->required();
  cmd_validate->callback([&] {
    glw::GraphReport r = glw::validate_graph(glw::read_graph(val_graph_path));
    Json j;
    j["ok"] = r.ok();
    j["arity"] = r.arity_ok;
    j["priority"] = r.priority_ok;
    j["exit"] = r.exit_ok;
    j["problems"] = r.problems;
    print_json(j);
    if (!r.ok()) rc = 1;
  });

  // glg-check: the game logic graph conditions.
  std::string glg_graph_path;
  bool glg_with_exit = false, glg_no_exit = false;
  CLI::App* cmd_glg = app.add_subcommand("glg-check", "check the game logic graph conditions");
  cmd_glg->add_option("--graph", glg_graph_path, "graph JSON file")->required();
  cmd_glg->add_flag("--with-exit", glg_with_exit, "force the exit condition on");
  cmd_glg->add_flag("--no-exit", glg_no_exit, "force the exit condition off");
  cmd_glg->callback([&] {
    if (glg_with_exit && glg_no_exit)
      throw CLI::ValidationError("glg-check", "--with-exit and --no-exit conflict");
    glw::SyntaxGraph g = glw::read_graph(glg_graph_path);
    bool with_exit = glg_with_exit || (g.exit.has_value() && !glg_no_exit);
    glw::GlgReport r = glw::check_glg(g, with_exit);
    print_json(glg_json(r));
    if (!r.pass()) rc = 1;
  });

  // accept: acceptance game of a graph over a model.
  std::string acc_graph_path, acc_model_path;
  CLI::App* cmd_accept = app.add_subcommand("accept", "states whose acceptance game is won");
  cmd_accept->add_option("--graph", acc_graph_path, "graph JSON file")->required();
  cmd_accept->add_option("--model", acc_model_path, "model JSON file")->required();
  cmd_accept->callback([&] {
    glw::SyntaxGraph g = glw::read_graph(acc_graph_path);
    glw::GameModel m = load_model(acc_model_path);
    print_json(sat_json(m, glw::accepts(g, m)));
  });

  // equiv: randomized equivalence of two sides.
  SideFlags eq_a, eq_b;
  glw::EquivOptions eq_opt;
  eq_opt.seed = env_seed;
  CLI::App* cmd_equiv = app.add_subcommand("equiv", "test two sides for semantic equivalence");
  cmd_equiv->add_option("--formula-a", eq_a.formula, "left side as formula text");
  cmd_equiv->add_option("--graph-a", eq_a.graph, "left side as graph JSON file");
  cmd_equiv->add_option("--formula-b", eq_b.formula, "right side as formula text");
  cmd_equiv->add_option("--graph-b", eq_b.graph, "right side as graph JSON file");
  cmd_equiv->add_option("--states", eq_opt.max_states, "max states per sampled model")
      ->check(CLI::Range(1, 8));
  cmd_equiv->add_option("--samples", eq_opt.samples, "number of sampled models");
  cmd_equiv->add_option("--density", eq_opt.density, "neighbourhood density in [0,1]");
  cmd_equiv->add_option("--seed", eq_opt.seed, "sampling seed");
  cmd_equiv->add_option("--jobs", eq_opt.jobs, "worker threads (result is independent of this)");
  cmd_equiv->callback([&] {
    glw::EquivResult r = glw::check_equiv(eq_a.resolve("a"), eq_b.resolve("b"), eq_opt);
    print_json(equiv_json(r));
    if (!r.equivalent) rc = 1;
  });

  // roundtrip: compile, extract, and compare against the original.
  std::string rt_formula_str;
  glw::EquivOptions rt_opt;
  rt_opt.seed = env_seed;
  CLI::App* cmd_round = app.add_subcommand("roundtrip", "compile a formula, extract it back, check equivalence");
  cmd_round->add_option("--formula", rt_formula_str, "formula text")->required();
  cmd_round->add_option("--states", rt_opt.max_states, "max states per sampled model")
      ->check(CLI::Range(1, 8));
  cmd_round->add_option("--samples", rt_opt.samples, "number of sampled models");
  cmd_round->add_option("--density", rt_opt.density, "neighbourhood density in [0,1]");
  cmd_round->add_option("--seed", rt_opt.seed, "sampling seed");
  cmd_round->add_option("--jobs", rt_opt.jobs, "worker threads (result is independent of this)");
  cmd_round->callback([&] {
    glw::Formula f = glw::parse_formula(rt_formula_str);
    glw::SyntaxGraph g = glw::compile_formula(glw::to_dnnf(f));
    glw::Formula back = glw::extract_formula(g);
    glw::EquivResult r = glw::check_equiv(f, back, rt_opt);
    Json j = equiv_json(r);
    j["vertices"] = g.size();
    j["extracted"] = glw::render(back);
    print_json(j);
    if (!r.equivalent) rc = 1;
  });

  // random-model: seeded model generation.
  int rm_states = 2;
  std::string rm_atoms = "p,q", rm_games = "g,h", rm_out;
  double rm_density = 0.5;
  std::uint64_t rm_seed = env_seed;
  CLI::App* cmd_rm = app.add_subcommand("random-model", "generate a seeded random model");
  cmd_rm->add_option("--states", rm_states, "number of states")->check(CLI::Range(1, 16));
  cmd_rm->add_option("--atoms", rm_atoms, "comma separated atom names");
  cmd_rm->add_option("--games", rm_games, "comma separated game names");
  cmd_rm->add_option("--density", rm_density, "neighbourhood density in [0,1]");
  cmd_rm->add_option("--seed", rm_seed, "generator seed");
  cmd_rm->add_option("--out", rm_out, "output model JSON path (stdout if absent)");
  cmd_rm->callback([&] {
    glw::GameModel m =
        glw::random_model(rm_states, split_csv(rm_atoms), split_csv(rm_games), rm_density, rm_seed);
    if (rm_out.empty())
      print_json(glw::model_to_json(m));
    else
      glw::write_model(rm_out, m);
  });

  // solve: raw parity arenas.
  std::string solve_arena_path, solve_out;
  CLI::App* cmd_solve = app.add_subcommand("solve", "solve a parity arena and verify the strategies");
  cmd_solve->add_option("--arena", solve_arena_path, "arena JSON file")->required();
  cmd_solve->add_option("--out", solve_out, "output JSON path (stdout if absent)");
  cmd_solve->callback([&] {
    glw::ParityArena a = glw::read_arena(solve_arena_path);
    glw::SolveResult r = glw::solve(a);
    bool ok = glw::verify_strategy(a, r);
    Json j;
    Json elo = Json::array(), abe = Json::array();
    for (int v = 0; v < static_cast<int>(a.owner.size()); ++v)
      (r.eloise_wins(v) ? elo : abe).push_back(v);
    j["eloise"] = elo;
    j["abelard"] = abe;
    Json se = Json::object(), sa = Json::object();
    for (size_t v = 0; v < a.owner.size(); ++v) {
      if (r.strategy_eloise[v] >= 0) se[std::to_string(v)] = r.strategy_eloise[v];
      if (r.strategy_abelard[v] >= 0) sa[std::to_string(v)] = r.strategy_abelard[v];
    }
    j["strategy"] = Json{{"eloise", se}, {"abelard", sa}};
    j["verified"] = ok;
    if (a.initial) j["initial_won_by"] = r.eloise_wins(*a.initial) ? "eloise" : "abelard";
    if (solve_out.empty())
      print_json(j);
    else
      glw::save_json_file(solve_out, j);
    if (!ok) {
      std::cerr << "error: strategy verification failed\n";
      rc = 1;
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const glw::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const glw::SchemaError& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
