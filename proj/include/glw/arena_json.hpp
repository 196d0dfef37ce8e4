#pragma once

// Arena files:
//
//   { "positions": [ { "id": 0, "owner": "E", "priority": 1, "succ": [1] },
//                    ... ],
//     "initial": 0 }
//
// ids may appear in any order but must be exactly 0..n-1 after sorting.

#include <string>
#include <vector>

#include "glw/io_common.hpp"
#include "glw/parity.hpp"

namespace glw {

inline ParityArena arena_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("positions") || !j["positions"].is_array())
    throw SchemaError("arena: expected an object with a \"positions\" array");
  const Json& ps = j["positions"];
  int n = static_cast<int>(ps.size());

  ParityArena a;
  a.owner.assign(n, Player::Eloise);
  a.priority.assign(n, 0);
  a.succ.assign(n, {});
  std::vector<bool> seen(n, false);

  for (const auto& p : ps) {
    if (!p.is_object() || !p.contains("id") || !p["id"].is_number_integer())
      throw SchemaError("arena: each position needs an integer \"id\"");
    int id = p["id"].get<int>();
    if (id < 0 || id >= n) throw SchemaError("arena: id " + std::to_string(id) + " out of range");
    if (seen[id]) throw SchemaError("arena: duplicate id " + std::to_string(id));
    seen[id] = true;

    if (!p.contains("owner") || !p["owner"].is_string()) throw SchemaError("arena: position needs \"owner\"");
    std::string owner = p["owner"].get<std::string>();
    if (owner == "E")
      a.owner[id] = Player::Eloise;
    else if (owner == "A")
      a.owner[id] = Player::Abelard;
    else
      throw SchemaError("arena: owner must be \"E\" or \"A\", got \"" + owner + "\"");

    if (!p.contains("priority") || !p["priority"].is_number_integer())
      throw SchemaError("arena: position needs an integer \"priority\"");
    a.priority[id] = p["priority"].get<int>();
    if (a.priority[id] < 0) throw SchemaError("arena: priority must be non-negative");

    if (!p.contains("succ") || !p["succ"].is_array()) throw SchemaError("arena: position needs a \"succ\" array");
    for (const auto& s : p["succ"]) {
      if (!s.is_number_integer()) throw SchemaError("arena: successors must be integers");
      int t = s.get<int>();
      if (t < 0 || t >= n) throw SchemaError("arena: successor " + std::to_string(t) + " out of range");
      a.succ[id].push_back(t);
    }
  }

  if (j.contains("initial") && !j["initial"].is_null()) {
    if (!j["initial"].is_number_integer()) throw SchemaError("arena: \"initial\" must be an integer id");
    int init = j["initial"].get<int>();
    if (init < 0 || init >= n) throw SchemaError("arena: initial out of range");
    a.initial = init;
  }
  return a;
}

inline Json arena_to_json(const ParityArena& a) {
  Json j;
  Json ps = Json::array();
  for (int v = 0; v < a.size(); ++v) {
    Json p;
    p["id"] = v;
    p["owner"] = a.owner[v] == Player::Eloise ? "E" : "A";
    p["priority"] = a.priority[v];
    p["succ"] = a.succ[v];
    ps.push_back(std::move(p));
  }
  j["positions"] = std::move(ps);
  if (a.initial) j["initial"] = *a.initial;
  return j;
}

inline ParityArena read_arena(const std::string& path) { return arena_from_json(load_json_file(path)); }

inline void write_arena(const std::string& path, const ParityArena& a) { save_json_file(path, arena_to_json(a)); }

}  // namespace glw
