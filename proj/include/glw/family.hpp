#pragma once

// Up-closed families of state sets, represented by their antichain of
// minimal elements. States are bit positions in a StateSet; a model has at
// most 16 states, so a set fits a uint32_t with room to spare.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace glw {

using StateSet = std::uint32_t;

inline constexpr int kMaxStates = 16;

inline StateSet full_set(int n_states) {
  return n_states >= 32 ? ~StateSet{0} : (StateSet{1} << n_states) - 1;
}

inline bool subset(StateSet a, StateSet b) { return (a & b) == a; }

inline int set_size(StateSet s) { return __builtin_popcount(s); }

// Up-closed family, stored as its minimal sets sorted ascending by value.
// The empty vector is the empty family; {∅} as sole minimal set is the full
// powerset.
struct NbhdFamily {
  std::vector<StateSet> min;

  bool operator==(const NbhdFamily&) const = default;
};

// Drops non-minimal and duplicate sets, sorts. Returns true if the input was
// already canonical.
inline bool normalize(std::vector<StateSet>& sets) {
  std::vector<StateSet> orig = sets;
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<StateSet> keep;
  for (StateSet u : sets) {
    bool minimal = true;
    for (StateSet v : sets)
      if (v != u && subset(v, u)) {
        minimal = false;
        break;
      }
    if (minimal) keep.push_back(u);
  }
  bool was_canonical = keep == orig;
  sets = std::move(keep);
  return was_canonical;
}

inline NbhdFamily make_family(std::vector<StateSet> sets) {
  normalize(sets);
  return NbhdFamily{std::move(sets)};
}

// U belongs to the up-closure iff some minimal set is contained in it.
inline bool family_member(const NbhdFamily& f, StateSet u) {
  for (StateSet m : f.min)
    if (subset(m, u)) return true;
  return false;
}

inline NbhdFamily family_empty() { return {}; }
inline NbhdFamily family_all() { return NbhdFamily{{0}}; }

inline NbhdFamily family_cup(const NbhdFamily& a, const NbhdFamily& b) {
  std::vector<StateSet> sets = a.min;
  sets.insert(sets.end(), b.min.begin(), b.min.end());
  return make_family(std::move(sets));
}

inline NbhdFamily family_cap(const NbhdFamily& a, const NbhdFamily& b) {
  std::vector<StateSet> sets;
  sets.reserve(a.min.size() * b.min.size());
  for (StateSet x : a.min)
    for (StateSet y : b.min) sets.push_back(x | y);
  return make_family(std::move(sets));
}

// Pointwise inclusion of up-closures: every minimal set of a already lies in
// the up-closure of b.
inline bool family_leq(const NbhdFamily& a, const NbhdFamily& b) {
  for (StateSet m : a.min)
    if (!family_member(b, m)) return false;
  return true;
}

}  // namespace glw
