#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "llx/error.hpp"
#include "llx/multiset.hpp"

namespace llx::detail {

using Json = nlohmann::ordered_json;

/// Parses JSON text, reporting syntax errors as ParseError with line/column.
inline Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, col = 1;
    std::size_t upto = e.byte == 0 ? 0 : std::min<std::size_t>(e.byte - 1, text.size());
    for (std::size_t i = 0; i < upto; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(line, col, "invalid JSON");
  }
}

inline const Json& field(const Json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) throw SchemaError(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(path.empty() ? key : path + "." + key, "missing field");
  return *it;
}

inline std::string child_path(const std::string& path, const char* key) {
  return path.empty() ? key : path + "." + key;
}

inline std::string index_path(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

inline std::string string_field(const Json& obj, const char* key, const std::string& path) {
  const Json& v = field(obj, key, path);
  if (!v.is_string()) throw SchemaError(child_path(path, key), "expected a string");
  return v.get<std::string>();
}

/// A JSON array of atom names, read as a multiset.
inline Multiset multiset_from(const Json& v, const std::string& path) {
  if (!v.is_array()) throw SchemaError(path, "expected an array of atom names");
  Multiset m;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_string()) throw SchemaError(index_path(path, i), "expected a string");
    m.add(v[i].get<std::string>());
  }
  return m;
}

inline Json multiset_to_json(const Multiset& m) {
  Json arr = Json::array();
  for (const auto& n : m.elements()) arr.push_back(n);
  return arr;
}

}  // namespace llx::detail
