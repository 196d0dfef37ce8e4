#pragma once

// Parity games: max-priority parity condition, stuck player loses. solve is
// the classical recursive (Zielonka) algorithm with positional strategy
// extraction for both players.
//
// The recursion assumes every position has a successor, so solve first adds
// two hidden sink positions: a stuck position owned by player i gets an edge
// to a self-loop whose priority has the opponent's parity, which reproduces
// the stuck rule. The sinks and any strategy edges into them are stripped
// from the result.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

namespace glw {

enum class Player { Eloise, Abelard };

inline Player opponent(Player p) { return p == Player::Eloise ? Player::Abelard : Player::Eloise; }

struct ParityArena {
  std::vector<Player> owner;
  std::vector<int> priority;
  std::vector<std::vector<int>> succ;
  std::optional<int> initial;

  int size() const { return static_cast<int>(owner.size()); }

  int add_position(Player p, int prio) {
    owner.push_back(p);
    priority.push_back(prio);
    succ.emplace_back();
    return size() - 1;
  }

  void add_edge(int from, int to) { succ[from].push_back(to); }

  void check() const {
    int n = size();
    if (static_cast<int>(priority.size()) != n || static_cast<int>(succ.size()) != n)
      throw std::invalid_argument("arena: ragged position data");
    for (int v = 0; v < n; ++v) {
      if (priority[v] < 0) throw std::invalid_argument("arena: negative priority");
      for (int w : succ[v])
        if (w < 0 || w >= n) throw std::invalid_argument("arena: successor out of range");
    }
    if (initial && (*initial < 0 || *initial >= n)) throw std::invalid_argument("arena: initial out of range");
  }
};

struct SolveResult {
  std::vector<bool> won_by_eloise;      // per position
  std::vector<int> strategy_eloise;     // successor index, -1 where undefined
  std::vector<int> strategy_abelard;

  bool eloise_wins(int v) const { return won_by_eloise[static_cast<size_t>(v)]; }
};

namespace detail {

class Zielonka {
 public:
  explicit Zielonka(const ParityArena& input) : n_input_(input.size()) {
    // Copy and make total: sink_for(E) is an odd self-loop, sink_for(A) even.
    owner_ = input.owner;
    priority_ = input.priority;
    succ_ = input.succ;
    int sink_odd = add(Player::Eloise, 1);
    int sink_even = add(Player::Abelard, 0);
    succ_[sink_odd] = {sink_odd};
    succ_[sink_even] = {sink_even};
    for (int v = 0; v < n_input_; ++v)
      if (succ_[v].empty()) succ_[v].push_back(owner_[v] == Player::Eloise ? sink_odd : sink_even);
    n_ = static_cast<int>(owner_.size());
    win_.assign(n_, Player::Eloise);
    strat_e_.assign(n_, -1);
    strat_a_.assign(n_, -1);
  }

  SolveResult run() {
    std::vector<bool> active(n_, true);
    solve(active);
    SolveResult res;
    res.won_by_eloise.assign(n_input_, false);
    res.strategy_eloise.assign(n_input_, -1);
    res.strategy_abelard.assign(n_input_, -1);
    for (int v = 0; v < n_input_; ++v) {
      bool e = win_[v] == Player::Eloise;
      res.won_by_eloise[v] = e;
      // Keep strategies exactly on winner-owned positions of the winner's
      // region; drop edges into the hidden sinks (their owners lost anyway).
      int& slot = e ? res.strategy_eloise[v] : res.strategy_abelard[v];
      Player w = e ? Player::Eloise : Player::Abelard;
      if (owner_[v] == w) {
        int t = w == Player::Eloise ? strat_e_[v] : strat_a_[v];
        if (t >= 0 && t < n_input_) slot = t;
      }
    }
    return res;
  }

 private:
  int n_input_;
  int n_ = 0;
  std::vector<Player> owner_;
  std::vector<int> priority_;
  std::vector<std::vector<int>> succ_;
  std::vector<Player> win_;
  std::vector<int> strat_e_;
  std::vector<int> strat_a_;

  int add(Player p, int prio) {
    owner_.push_back(p);
    priority_.push_back(prio);
    succ_.emplace_back();
    return static_cast<int>(owner_.size()) - 1;
  }

  std::vector<int>& strat(Player p) { return p == Player::Eloise ? strat_e_ : strat_a_; }

  // Least set containing targets and closed under: p-owned position with some
  // active successor inside, or opponent position with all active successors
  // inside. Sweeps in index order; records p's edge choice (lowest-index
  // successor already attracted) for positions pulled in by the first rule.
  std::vector<bool> attractor(Player p, const std::vector<bool>& targets, const std::vector<bool>& active) {
    std::vector<bool> attr = targets;
    bool changed = true;
    while (changed) {
      changed = false;
      for (int v = 0; v < n_; ++v) {
        if (!active[v] || attr[v]) continue;
        if (owner_[v] == p) {
          int pick = -1;
          for (int w : succ_[v])
            if (active[w] && attr[w] && (pick < 0 || w < pick)) pick = w;
          if (pick >= 0) {
            attr[v] = true;
            strat(p)[v] = pick;
            changed = true;
          }
        } else {
          bool all_in = true;
          for (int w : succ_[v])
            if (active[w] && !attr[w]) {
              all_in = false;
              break;
            }
          if (all_in) {
            attr[v] = true;
            changed = true;
          }
        }
      }
    }
    return attr;
  }

  void solve(const std::vector<bool>& active) {
    int d = -1;
    for (int v = 0; v < n_; ++v)
      if (active[v]) d = std::max(d, priority_[v]);
    if (d < 0) return;  // nothing active

    Player p = d % 2 == 0 ? Player::Eloise : Player::Abelard;
    Player q = opponent(p);

    std::vector<bool> head(n_, false);
    for (int v = 0; v < n_; ++v)
      if (active[v] && priority_[v] == d) head[v] = true;

    std::vector<bool> attr_head = attractor(p, head, active);
    std::vector<bool> rest = active;
    for (int v = 0; v < n_; ++v)
      if (attr_head[v]) rest[v] = false;
    solve(rest);

    std::vector<bool> q_wins_rest(n_, false);
    bool q_any = false;
    for (int v = 0; v < n_; ++v)
      if (rest[v] && win_[v] == q) {
        q_wins_rest[v] = true;
        q_any = true;
      }

    if (!q_any) {
      // p wins everywhere here. On the head positions p just stays inside.
      for (int v = 0; v < n_; ++v) {
        if (!active[v]) continue;
        win_[v] = p;
        if (head[v] && owner_[v] == p) {
          int pick = -1;
          for (int w : succ_[v])
            if (active[w] && (pick < 0 || w < pick)) pick = w;
          strat(p)[v] = pick;
        }
      }
      return;
    }

    std::vector<bool> attr_q = attractor(q, q_wins_rest, active);
    std::vector<bool> remaining = active;
    for (int v = 0; v < n_; ++v)
      if (attr_q[v]) remaining[v] = false;
    solve(remaining);
    for (int v = 0; v < n_; ++v)
      if (active[v] && attr_q[v]) win_[v] = q;
  }
};

}  // namespace detail

inline SolveResult solve(const ParityArena& arena) {
  arena.check();
  if (arena.size() == 0) return {};
  detail::Zielonka z(arena);
  return z.run();
}

// Checks a claimed solution: within each winning region, winner-owned
// positions follow exactly their strategy edge and opponent positions keep
// every edge. The region must then be closed (no opponent edge leaves it, no
// winner position stuck), opponent dead ends must be genuine, and every cycle
// must have its maximal priority of the winner's parity. Throws on a strategy
// edge that is not in the arena.
inline bool verify_strategy(const ParityArena& arena, const SolveResult& res) {
  arena.check();
  int n = arena.size();
  if (static_cast<int>(res.won_by_eloise.size()) != n || static_cast<int>(res.strategy_eloise.size()) != n ||
      static_cast<int>(res.strategy_abelard.size()) != n)
    throw std::invalid_argument("verify_strategy: result size mismatch");

  auto is_edge = [&](int v, int w) {
    for (int t : arena.succ[v])
      if (t == w) return true;
    return false;
  };
  for (int v = 0; v < n; ++v) {
    if (res.strategy_eloise[v] >= 0 && !is_edge(v, res.strategy_eloise[v]))
      throw std::invalid_argument("verify_strategy: strategy edge not in arena");
    if (res.strategy_abelard[v] >= 0 && !is_edge(v, res.strategy_abelard[v]))
      throw std::invalid_argument("verify_strategy: strategy edge not in arena");
  }

  for (Player w : {Player::Eloise, Player::Abelard}) {
    std::vector<bool> region(n, false);
    for (int v = 0; v < n; ++v) region[v] = (res.won_by_eloise[v] == (w == Player::Eloise));
    const std::vector<int>& strat = w == Player::Eloise ? res.strategy_eloise : res.strategy_abelard;

    // Induced successor lists within the region.
    std::vector<std::vector<int>> sub(n);
    for (int v = 0; v < n; ++v) {
      if (!region[v]) continue;
      if (arena.owner[v] == w) {
        int t = strat[v];
        if (t >= 0) {
          if (!region[t]) return false;  // strategy escapes its own region
          sub[v].push_back(t);
        } else if (!arena.succ[v].empty()) {
          return false;  // winner has a move but no strategy
        } else {
          return false;  // winner-owned dead end cannot be winning
        }
      } else {
        for (int t : arena.succ[v]) {
          if (!region[t]) return false;  // opponent escapes the region
          sub[v].push_back(t);
        }
        // An opponent dead end here is genuinely stuck in the full arena
        // (all its edges stay in the region), so the stuck rule favours w.
      }
    }

    // No cycle may have a maximal priority of the opponent's parity. A cycle
    // with maximum exactly d exists iff, inside the subgraph of priorities
    // <= d, some priority-d position can reach itself.
    int maxp = 0;
    for (int v = 0; v < n; ++v)
      if (region[v]) maxp = std::max(maxp, arena.priority[v]);
    int bad_parity = w == Player::Eloise ? 1 : 0;
    for (int d = bad_parity; d <= maxp; d += 2) {
      std::vector<bool> in_sub(n, false);
      for (int v = 0; v < n; ++v) in_sub[v] = region[v] && arena.priority[v] <= d;
      for (int v = 0; v < n; ++v) {
        if (!in_sub[v] || arena.priority[v] != d) continue;
        std::vector<bool> seen(n, false);
        std::vector<int> stack;
        for (int t : sub[v])
          if (in_sub[t] && !seen[t]) {
            seen[t] = true;
            stack.push_back(t);
          }
        bool back = false;
        while (!stack.empty() && !back) {
          int u = stack.back();
          stack.pop_back();
          if (u == v) {
            back = true;
            break;
          }
          for (int t : sub[u])
            if (in_sub[t] && !seen[t]) {
              seen[t] = true;
              stack.push_back(t);
            }
        }
        if (back) return false;
      }
    }
  }
  return true;
}

}  // namespace glw
