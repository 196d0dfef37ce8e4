#pragma once

// The guarded-linear conditions on syntax graphs. A graph with injective
// priorities passes when every priority-n head h (necessarily binary) admits
// an ordering (l, r) of its two successors such that
//
//   parity:   h is a disjunction if n is odd, a conjunction if n is even;
//   leaving:  every simple path l .. h has maximal priority > n;
//   no-remain: no simple path h r .. h' reaches a higher head h';
//   exit:     no simple path h r .. v reaches an exit-labelled v
//             (only checked when an exit letter is in force).
//
// The path conditions are decided by reachability: a leaving violation is a
// path from l to h inside the vertices of priority <= n or none; the other
// two are reachability from r with h deleted. The equivalence holds because
// any witnessing walk contains a simple witnessing path and conversely.

#include <optional>
#include <string>
#include <vector>

#include "glw/syntax_graph.hpp"

namespace glw {

namespace detail {

// Breadth-first path from one of `from` to any target, restricted to
// `allowed`; returns the vertex path including both endpoints.
inline std::optional<std::vector<int>> bfs_path(const SyntaxGraph& g, int from, const std::vector<bool>& allowed,
                                                const std::vector<bool>& target) {
  if (!allowed[from]) return std::nullopt;
  std::vector<int> parent(g.size(), -2);
  std::vector<int> queue{from};
  parent[from] = -1;
  size_t qi = 0;
  int hit = target[from] ? from : -1;
  while (hit < 0 && qi < queue.size()) {
    int v = queue[qi++];
    for (int w : g.succ[v]) {
      if (!allowed[w] || parent[w] != -2) continue;
      parent[w] = v;
      if (target[w]) {
        hit = w;
        break;
      }
      queue.push_back(w);
    }
  }
  if (hit < 0) return std::nullopt;
  std::vector<int> path;
  for (int v = hit; v != -1; v = parent[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

// A simple path l .. h of maximal priority <= n, if one exists.
inline std::optional<std::vector<int>> leaving_violation(const SyntaxGraph& g, int n, int h, int l) {
  std::vector<bool> low(g.size(), false);
  for (int v = 0; v < g.size(); ++v) low[v] = !g.has_priority(v) || g.priority[v] <= n;
  std::vector<bool> target(g.size(), false);
  target[h] = true;
  return bfs_path(g, l, low, target);
}

// A simple path h r .. h' with priority(h') > n, if one exists.
inline std::optional<std::vector<int>> remain_violation(const SyntaxGraph& g, int n, int h, int r) {
  if (r == h) return std::nullopt;
  std::vector<bool> allowed(g.size(), true);
  allowed[h] = false;
  std::vector<bool> target(g.size(), false);
  for (int v = 0; v < g.size(); ++v) target[v] = g.has_priority(v) && g.priority[v] > n;
  auto path = bfs_path(g, r, allowed, target);
  if (!path) return std::nullopt;
  path->insert(path->begin(), h);
  return path;
}

// A simple path h r .. v with v labelled by the exit letter, if one exists.
inline std::optional<std::vector<int>> exit_violation(const SyntaxGraph& g, const std::string& exit, int h, int r) {
  if (r == h) return std::nullopt;
  std::vector<bool> allowed(g.size(), true);
  allowed[h] = false;
  std::vector<bool> target(g.size(), false);
  for (int v = 0; v < g.size(); ++v)
    target[v] = g.label[v].kind == LabelKind::Lit && !g.label[v].negated && g.label[v].name == exit;
  auto path = bfs_path(g, r, allowed, target);
  if (!path) return std::nullopt;
  path->insert(path->begin(), h);
  return path;
}

struct WitnessAttempt {
  int l = -1, r = -1;
  std::optional<std::vector<int>> leaving;
  std::optional<std::vector<int>> remain;
  std::optional<std::vector<int>> exit;

  bool ok() const { return !leaving && !remain && !exit; }
};

struct WitnessSearch {
  bool found = false;
  int l = -1, r = -1;
  std::vector<WitnessAttempt> attempts;  // both orderings when no witness
};

// Tries both orderings of the head's two successors.
inline WitnessSearch search_head_witness(const SyntaxGraph& g, int n, int h,
                                         const std::optional<std::string>& exit) {
  WitnessSearch out;
  if (g.succ[h].size() != 2) return out;
  int s0 = g.succ[h][0], s1 = g.succ[h][1];
  for (auto [l, r] : {std::pair{s0, s1}, std::pair{s1, s0}}) {
    WitnessAttempt a;
    a.l = l;
    a.r = r;
    a.leaving = leaving_violation(g, n, h, l);
    a.remain = remain_violation(g, n, h, r);
    if (exit) a.exit = exit_violation(g, *exit, h, r);
    if (a.ok()) {
      out.found = true;
      out.l = l;
      out.r = r;
      return out;
    }
    out.attempts.push_back(std::move(a));
  }
  return out;
}

}  // namespace detail

struct GlgHead {
  int priority = -1;
  int vertex = -1;
  bool witness_found = false;
  int leave = -1;   // l_n
  int remain = -1;  // r_n
};

struct GlgVerdict {
  bool ok = true;
  std::vector<int> counterexample;  // vertex path or single offending vertex
  std::string detail;
};

struct GlgReport {
  bool injective = true;
  bool checked_exit = false;
  std::vector<GlgHead> heads;  // ascending priority
  GlgVerdict parity, brexit, leaving, no_remain, exit;

  bool pass() const {
    return injective && parity.ok && brexit.ok && leaving.ok && no_remain.ok && exit.ok;
  }
};

// with_exit adds the exit condition using the graph's declared exit letter.
// The graph must pass validate_graph; priorities that are not injective fail
// the whole check since heads are then undefined.
inline GlgReport check_glg(const SyntaxGraph& g, bool with_exit) {
  GraphReport vr = validate_graph(g);
  if (!vr.ok()) throw std::invalid_argument("check_glg: graph fails validation: " + vr.problems[0]);
  if (with_exit && !g.exit) throw std::invalid_argument("check_glg: with_exit requires a declared exit letter");

  GlgReport r;
  r.checked_exit = with_exit;

  std::vector<std::pair<int, int>> heads;  // (priority, vertex)
  for (int v = 0; v < g.size(); ++v)
    if (g.has_priority(v)) heads.push_back({g.priority[v], v});
  std::sort(heads.begin(), heads.end());
  for (size_t i = 0; i + 1 < heads.size(); ++i)
    if (heads[i].first == heads[i + 1].first) {
      r.injective = false;
      r.parity.detail = "priority " + std::to_string(heads[i].first) + " is assigned to vertices " +
                        std::to_string(heads[i].second) + " and " + std::to_string(heads[i + 1].second);
      return r;  // heads undefined, no further conditions evaluated
    }

  std::optional<std::string> exit = with_exit ? g.exit : std::nullopt;

  for (auto [n, h] : heads) {
    GlgHead head;
    head.priority = n;
    head.vertex = h;

    LabelKind want = n % 2 == 1 ? LabelKind::Or : LabelKind::And;
    if (g.label[h].kind != want && r.parity.ok) {
      r.parity.ok = false;
      r.parity.counterexample = {h};
      r.parity.detail = "head " + std::to_string(h) + " with priority " + std::to_string(n) +
                        (n % 2 == 1 ? " must be a disjunction" : " must be a conjunction");
    }
    if (g.succ[h].size() != 2) {
      if (r.brexit.ok) {
        r.brexit.ok = false;
        r.brexit.counterexample = {h};
        r.brexit.detail = "head " + std::to_string(h) + " does not have exactly two successors";
      }
      r.heads.push_back(head);
      continue;
    }

    detail::WitnessSearch ws = detail::search_head_witness(g, n, h, exit);
    if (ws.found) {
      head.witness_found = true;
      head.leave = ws.l;
      head.remain = ws.r;
    } else {
      // Blame the conditions that fail under both orderings; if the failures
      // are mixed, report those of the first ordering.
      auto blame = [&](GlgVerdict& verdict,
                       std::optional<std::vector<int>> detail::WitnessAttempt::*field,
                       const std::string& what) {
        bool both = ws.attempts.size() == 2 && ws.attempts[0].*field && ws.attempts[1].*field;
        bool mixed_all = ws.attempts.size() == 2 && !(ws.attempts[0].ok()) && !(ws.attempts[1].ok()) &&
                         !(ws.attempts[0].*field && ws.attempts[1].*field) && (ws.attempts[0].*field).has_value();
        if ((both || mixed_all) && verdict.ok) {
          verdict.ok = false;
          verdict.counterexample = *(ws.attempts[0].*field ? ws.attempts[0].*field : ws.attempts[1].*field);
          verdict.detail = "head " + std::to_string(h) + " (priority " + std::to_string(n) + "): " + what;
        }
      };
      blame(r.leaving, &detail::WitnessAttempt::leaving, "a low-priority path returns to the head");
      blame(r.no_remain, &detail::WitnessAttempt::remain, "the remain branch reaches a higher head");
      blame(r.exit, &detail::WitnessAttempt::exit, "the remain branch reaches an exit vertex");
    }
    r.heads.push_back(head);
  }
  return r;
}

}  // namespace glw
