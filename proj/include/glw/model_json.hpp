#pragma once

// Model files:
//
//   { "states": ["s0", "s1"],
//     "props":  { "p": ["s1"] },
//     "games":  { "g": { "s0": [["s1"]], "s1": [["s1"]] } } }
//
// props and games may be omitted or partial; omitted atoms are false
// everywhere and omitted states carry the empty family. Neighbourhood lists
// need not be antichains; they are re-minimised on input with a warning.

#include <string>
#include <vector>

#include "glw/io_common.hpp"
#include "glw/model.hpp"

namespace glw {

struct ModelReadResult {
  GameModel model;
  std::vector<std::string> warnings;
};

namespace detail {

inline StateSet state_list_to_mask(const GameModel& m, const Json& arr, const std::string& where) {
  if (!arr.is_array()) throw SchemaError(where + ": expected an array of state names");
  StateSet out = 0;
  for (const auto& el : arr) {
    if (!el.is_string()) throw SchemaError(where + ": expected a state name");
    std::string name = el.get<std::string>();
    int idx;
    try {
      idx = m.state_index(name);
    } catch (const std::out_of_range&) {
      throw SchemaError(where + ": unknown state '" + name + "'");
    }
    out |= StateSet{1} << idx;
  }
  return out;
}

}  // namespace detail

inline ModelReadResult model_from_json(const Json& j) {
  if (!j.is_object()) throw SchemaError("model: expected a JSON object");
  if (!j.contains("states") || !j["states"].is_array()) throw SchemaError("model: missing \"states\" array");

  ModelReadResult res;
  GameModel& m = res.model;
  for (const auto& el : j["states"]) {
    if (!el.is_string()) throw SchemaError("model: state names must be strings");
    std::string name = el.get<std::string>();
    for (const auto& seen : m.states)
      if (seen == name) throw SchemaError("model: duplicate state '" + name + "'");
    m.states.push_back(std::move(name));
  }
  if (m.n_states() < 1) throw SchemaError("model: at least one state is required");
  if (m.n_states() > kMaxStates)
    throw SchemaError("model: at most " + std::to_string(kMaxStates) + " states are supported");

  if (j.contains("props")) {
    if (!j["props"].is_object()) throw SchemaError("model: \"props\" must be an object");
    for (const auto& [atom, val] : j["props"].items())
      m.props[atom] = detail::state_list_to_mask(m, val, "props." + atom);
  }

  if (j.contains("games")) {
    if (!j["games"].is_object()) throw SchemaError("model: \"games\" must be an object");
    for (const auto& [game, per_state] : j["games"].items()) {
      if (!per_state.is_object()) throw SchemaError("games." + game + ": expected an object keyed by state");
      Frame fr = frame_empty(m.n_states());
      for (const auto& [state, sets] : per_state.items()) {
        int idx;
        try {
          idx = m.state_index(state);
        } catch (const std::out_of_range&) {
          throw SchemaError("games." + game + ": unknown state '" + state + "'");
        }
        if (!sets.is_array()) throw SchemaError("games." + game + "." + state + ": expected an array of sets");
        std::vector<StateSet> members;
        for (const auto& one : sets)
          members.push_back(detail::state_list_to_mask(m, one, "games." + game + "." + state));
        if (!normalize(members))
          res.warnings.push_back("games." + game + "." + state +
                                 ": neighbourhood list was not a minimal antichain; re-minimised");
        fr.at[idx] = NbhdFamily{std::move(members)};
      }
      m.games[game] = std::move(fr);
    }
  }

  for (const auto& [key, _] : j.items())
    if (key != "states" && key != "props" && key != "games")
      throw SchemaError("model: unknown key \"" + key + "\"");

  return res;
}

inline Json model_to_json(const GameModel& m) {
  Json j;
  j["states"] = Json::array();
  for (const auto& s : m.states) j["states"].push_back(s);

  Json props = Json::object();
  for (const auto& [atom, mask] : m.props) {
    Json arr = Json::array();
    for (const auto& name : state_names(m, mask)) arr.push_back(name);
    props[atom] = std::move(arr);
  }
  j["props"] = std::move(props);

  Json games = Json::object();
  for (const auto& [game, fr] : m.games) {
    Json per_state = Json::object();
    for (int s = 0; s < m.n_states(); ++s) {
      if (fr.at[s].min.empty()) continue;  // empty family is the default
      Json sets = Json::array();
      for (StateSet u : fr.at[s].min) {
        Json one = Json::array();
        for (const auto& name : state_names(m, u)) one.push_back(name);
        sets.push_back(std::move(one));
      }
      per_state[m.states[s]] = std::move(sets);
    }
    games[game] = std::move(per_state);
  }
  j["games"] = std::move(games);
  return j;
}

inline ModelReadResult read_model(const std::string& path) { return model_from_json(load_json_file(path)); }

inline void write_model(const std::string& path, const GameModel& m) { save_json_file(path, model_to_json(m)); }

}  // namespace glw
