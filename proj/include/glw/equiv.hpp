#pragma once

// Randomised semantic equivalence between formulas and formula graphs. Both
// sides are evaluated over a shared alphabet; small alphabets additionally
// get an exhaustive sweep of one-state models, which already separates most
// inequivalent pairs (for one state there are exactly three monotone
// neighbourhood families). Sampling is deterministic in the seed and in the
// number of worker threads: sample k always uses derive_seed(seed, k), and
// the reported counterexample is the one with the least sample index.

#include <atomic>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "glw/acceptance_game.hpp"
#include "glw/model.hpp"
#include "glw/random_model.hpp"
#include "glw/syntax_graph.hpp"
#include "glw/term.hpp"

namespace glw {

using TermOrGraph = std::variant<Formula, SyntaxGraph>;

struct EquivOptions {
  int samples = 100;
  int max_states = 4;
  double density = 0.6;
  std::uint64_t seed = 0;
  int jobs = 1;
};

struct EquivCounterexample {
  GameModel model;
  std::string state;
  bool lhs_true = false;
  bool rhs_true = false;
};

struct EquivResult {
  bool equivalent = true;
  long models_checked = 0;
  std::optional<EquivCounterexample> witness;
};

namespace detail {

inline StateSet side_denotation(const TermOrGraph& side, const GameModel& m) {
  if (const Formula* f = std::get_if<Formula>(&side)) return eval_standard(m, *f);
  return accepts(std::get<SyntaxGraph>(side), m);
}

inline void side_alphabet(const TermOrGraph& side, std::set<std::string>& atoms,
                          std::set<std::string>& games) {
  if (const Formula* f = std::get_if<Formula>(&side)) {
    for (const std::string& a : atom_names(*f)) atoms.insert(a);
    for (const std::string& g : game_names(*f)) games.insert(g);
    return;
  }
  const SyntaxGraph& g = std::get<SyntaxGraph>(side);
  for (const VertexLabel& l : g.label) {
    if (l.kind == LabelKind::Lit) atoms.insert(l.name);
    if (l.kind == LabelKind::Dia) games.insert(l.name);
  }
}

inline std::optional<EquivCounterexample> compare_on(const TermOrGraph& a, const TermOrGraph& b,
                                                     const GameModel& m) {
  StateSet va = side_denotation(a, m);
  StateSet vb = side_denotation(b, m);
  if (va == vb) return std::nullopt;
  StateSet diff = va ^ vb;
  for (int s = 0; s < m.n_states(); ++s)
    if (diff & (StateSet{1} << s)) {
      EquivCounterexample cex;
      cex.model = m;
      cex.state = m.states[s];
      cex.lhs_true = (va >> s) & 1;
      cex.rhs_true = (vb >> s) & 1;
      return cex;
    }
  return std::nullopt;
}

// All monotone neighbourhood families over one state, as minimal antichains:
// no neighbourhoods, the empty set (hence everything), just the full set.
inline const std::vector<NbhdFamily>& one_state_families() {
  static const std::vector<NbhdFamily> fams = {NbhdFamily{}, NbhdFamily{{StateSet{0}}},
                                               NbhdFamily{{StateSet{1}}}};
  return fams;
}

}  // namespace detail

inline EquivResult check_equiv(const TermOrGraph& a, const TermOrGraph& b,
                               const EquivOptions& opt = {}) {
  if (opt.samples < 0 || opt.max_states < 1 || opt.max_states > 8)
    throw std::invalid_argument("check_equiv: bad options");
  for (const TermOrGraph* side : {&a, &b})
    if (const SyntaxGraph* g = std::get_if<SyntaxGraph>(side)) {
      GraphReport r = validate_graph(*g);
      if (!r.ok()) throw std::invalid_argument("check_equiv: graph side fails validation: " + r.problems[0]);
    }

  std::set<std::string> atom_set, game_set;
  detail::side_alphabet(a, atom_set, game_set);
  detail::side_alphabet(b, atom_set, game_set);
  std::vector<std::string> atoms(atom_set.begin(), atom_set.end());
  std::vector<std::string> games(game_set.begin(), game_set.end());

  EquivResult res;

  // Exhaustive one-state block for small alphabets.
  if (atoms.size() <= 2 && games.size() <= 2) {
    long n_props = 1L << atoms.size();
    long n_fams = 1;
    for (size_t i = 0; i < games.size(); ++i) n_fams *= 3;
    for (long pv = 0; pv < n_props; ++pv) {
      for (long fv = 0; fv < n_fams; ++fv) {
        GameModel m;
        m.states = {"s0"};
        for (size_t i = 0; i < atoms.size(); ++i)
          m.props[atoms[i]] = (pv >> i) & 1 ? StateSet{1} : StateSet{0};
        long rest = fv;
        for (const std::string& g : games) {
          Frame fr;
          fr.at = {detail::one_state_families()[rest % 3]};
          rest /= 3;
          m.games[g] = fr;
        }
        ++res.models_checked;
        if (auto cex = detail::compare_on(a, b, m)) {
          res.equivalent = false;
          res.witness = std::move(cex);
          return res;
        }
      }
    }
  }

  if (opt.samples == 0) return res;

  int jobs = opt.jobs < 1 ? 1 : opt.jobs;
  if (jobs > opt.samples) jobs = opt.samples;

  std::atomic<long> best_fail{static_cast<long>(opt.samples)};
  std::vector<std::optional<EquivCounterexample>> found(jobs);
  std::vector<long> found_at(jobs, static_cast<long>(opt.samples));

  auto worker = [&](int id) {
    for (long k = id; k < opt.samples; k += jobs) {
      if (k >= best_fail.load(std::memory_order_relaxed)) break;
      Rng rng(derive_seed(opt.seed, static_cast<std::uint64_t>(k)));
      int n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(opt.max_states)));
      GameModel m = random_model(n, atoms, games, opt.density, rng.next());
      if (auto cex = detail::compare_on(a, b, m)) {
        found[id] = std::move(cex);
        found_at[id] = k;
        long cur = best_fail.load(std::memory_order_relaxed);
        while (k < cur && !best_fail.compare_exchange_weak(cur, k, std::memory_order_relaxed)) {
        }
        break;
      }
    }
  };

  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (int id = 0; id < jobs; ++id) pool.emplace_back(worker, id);
    for (std::thread& t : pool) t.join();
  }

  long min_at = static_cast<long>(opt.samples);
  int min_id = -1;
  for (int id = 0; id < jobs; ++id)
    if (found[id] && found_at[id] < min_at) {
      min_at = found_at[id];
      min_id = id;
    }
  if (min_id >= 0) {
    res.equivalent = false;
    res.witness = std::move(found[min_id]);
    res.models_checked += min_at + 1;
  } else {
    res.models_checked += opt.samples;
  }
  return res;
}

}  // namespace glw
