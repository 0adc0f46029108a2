#pragma once

#include <string>
#include <vector>

#include "json.hpp"

// Enough of JSON Schema draft-07 for report.schema.json: type, required,
// properties, additionalProperties, items, enum, minLength and local $ref.
namespace schema {

using Json = nlohmann::json;

class Validator {
 public:
  explicit Validator(Json root) : root_(std::move(root)) {}

  std::vector<std::string> validate(const Json& doc) const {
    std::vector<std::string> errors;
    check(root_, doc, "$", errors);
    return errors;
  }

 private:
  const Json& resolve(const Json& s) const {
    if (!s.is_object() || !s.contains("$ref")) return s;
    std::string ref = s["$ref"];
    const Json* at = &root_;
    // Only "#/a/b" pointers are used.
    std::size_t pos = 2;
    while (pos <= ref.size()) {
      std::size_t next = ref.find('/', pos);
      if (next == std::string::npos) next = ref.size();
      at = &(*at)[ref.substr(pos, next - pos)];
      pos = next + 1;
    }
    return resolve(*at);
  }

  static bool has_type(const Json& v, const std::string& t) {
    if (t == "object") return v.is_object();
    if (t == "array") return v.is_array();
    if (t == "string") return v.is_string();
    if (t == "number") return v.is_number();
    if (t == "integer") return v.is_number_integer() || v.is_number_unsigned();
    if (t == "boolean") return v.is_boolean();
    if (t == "null") return v.is_null();
    return false;
  }

  void check(const Json& raw, const Json& v, const std::string& path, std::vector<std::string>& errors) const {
    const Json& s = resolve(raw);
    if (s.is_boolean()) {
      if (!s.get<bool>()) errors.push_back(path + ": not allowed");
      return;
    }
    if (s.contains("type")) {
      bool ok = false;
      if (s["type"].is_array()) {
        for (const auto& t : s["type"]) ok = ok || has_type(v, t);
      } else {
        ok = has_type(v, s["type"]);
      }
      if (!ok) {
        errors.push_back(path + ": wrong type");
        return;
      }
    }
    if (s.contains("enum") && std::find(s["enum"].begin(), s["enum"].end(), v) == s["enum"].end())
      errors.push_back(path + ": not in enum");
    if (s.contains("minLength") && v.is_string() && v.get<std::string>().size() < s["minLength"].get<std::size_t>())
      errors.push_back(path + ": too short");
    if (v.is_object()) {
      if (s.contains("required"))
        for (const auto& r : s["required"])
          if (!v.contains(r.get<std::string>())) errors.push_back(path + ": missing " + r.get<std::string>());
      for (const auto& [k, item] : v.items()) {
        if (s.contains("properties") && s["properties"].contains(k)) {
          check(s["properties"][k], item, path + "." + k, errors);
        } else if (s.contains("additionalProperties")) {
          check(s["additionalProperties"], item, path + "." + k, errors);
        }
      }
    }
    if (v.is_array() && s.contains("items"))
      for (std::size_t i = 0; i < v.size(); ++i) check(s["items"], v[i], path + "[" + std::to_string(i) + "]", errors);
  }

  Json root_;
};

}  // namespace schema
