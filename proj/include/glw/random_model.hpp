#pragma once

// Seeded random model generation. All draws come from a mt19937_64 engine
// directly (no library distributions), so a seed names the same model on
// every platform. Sampling jobs that run per index derive their seed with
// derive_seed, making results independent of scheduling order.

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "glw/model.hpp"

namespace glw {

struct Rng {
  std::mt19937_64 engine;

  explicit Rng(std::uint64_t seed) : engine(seed) {}

  std::uint64_t next() { return engine(); }

  // Uniform-ish value in [0, n); the modulo bias is irrelevant at test sizes.
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

  int up_to(int n) { return static_cast<int>(below(static_cast<std::uint64_t>(n) + 1)); }

  bool coin() { return (next() & 1) != 0; }
};

// splitmix64 of the pair, so nearby (seed, index) pairs give unrelated streams.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// States are named s0..s{n-1}; each atom holds at each state with probability
// 1/2; each game gets ceil(density * n) sampled neighbourhood sets per state,
// then minimised.
inline GameModel random_model(int n_states, const std::vector<std::string>& atoms,
                              const std::vector<std::string>& games, double density, std::uint64_t seed) {
  if (n_states < 1 || n_states > kMaxStates)
    throw std::invalid_argument("random_model: n_states must be between 1 and " + std::to_string(kMaxStates));
  if (!(density >= 0.0 && density <= 1.0)) throw std::invalid_argument("random_model: density must be in [0, 1]");

  Rng rng(seed);
  GameModel m;
  for (int s = 0; s < n_states; ++s) m.states.push_back("s" + std::to_string(s));
  StateSet full = m.full();

  for (const auto& atom : atoms) {
    StateSet v = 0;
    for (int s = 0; s < n_states; ++s)
      if (rng.coin()) v |= StateSet{1} << s;
    m.props[atom] = v;
  }

  int sets_per_state = static_cast<int>(std::ceil(density * n_states));
  for (const auto& game : games) {
    Frame fr = frame_empty(n_states);
    for (int s = 0; s < n_states; ++s) {
      std::vector<StateSet> sets;
      for (int k = 0; k < sets_per_state; ++k) sets.push_back(static_cast<StateSet>(rng.next()) & full);
      fr.at[s] = make_family(std::move(sets));
    }
    m.games[game] = std::move(fr);
  }
  return m;
}

}  // namespace glw
