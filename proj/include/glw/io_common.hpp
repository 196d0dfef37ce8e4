#pragma once

#include <fstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

namespace glw {

// Raised when an input file does not match its schema (as opposed to a
// semantic failure, which is reported as data).
struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Json = nlohmann::ordered_json;

inline Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError("invalid JSON in '" + path + "': " + e.what());
  }
  return j;
}

inline void save_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << j.dump(2) << '\n';
}

}  // namespace glw
