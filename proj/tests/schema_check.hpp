#pragma once

// Minimal JSON-Schema checker covering the subset used by the shipped
// schemas: type, required, properties, items (single schema), enum,
// minimum, maximum. Returns an empty string on success, else the first
// violation found.

#include <json.hpp>
#include <fstream>
#include <string>

namespace credal::testing {

using nlohmann::json;

inline bool type_matches(const json& value, const std::string& type) {
  if (type == "object") return value.is_object();
  if (type == "array") return value.is_array();
  if (type == "string") return value.is_string();
  if (type == "boolean") return value.is_boolean();
  if (type == "integer") return value.is_number_integer() ||
                                 value.is_number_unsigned();
  if (type == "number") return value.is_number();
  return false;
}

inline std::string check_schema(const json& value, const json& schema,
                                const std::string& path = "$") {
  if (schema.contains("type")) {
    const auto type = schema.at("type").get<std::string>();
    if (!type_matches(value, type)) {
      return path + ": expected " + type;
    }
  }
  if (schema.contains("enum")) {
    bool found = false;
    for (const auto& option : schema.at("enum")) {
      if (option == value) {
        found = true;
        break;
      }
    }
    if (!found) return path + ": value not in enum";
  }
  if (value.is_number()) {
    if (schema.contains("minimum") &&
        value.get<double>() < schema.at("minimum").get<double>() - 1e-12) {
      return path + ": below minimum";
    }
    if (schema.contains("maximum") &&
        value.get<double>() > schema.at("maximum").get<double>() + 1e-12) {
      return path + ": above maximum";
    }
  }
  if (value.is_object()) {
    if (schema.contains("required")) {
      for (const auto& key : schema.at("required")) {
        if (!value.contains(key.get<std::string>())) {
          return path + ": missing required key " + key.get<std::string>();
        }
      }
    }
    if (schema.contains("properties")) {
      for (const auto& [key, sub] : schema.at("properties").items()) {
        if (value.contains(key)) {
          const auto err = check_schema(value.at(key), sub, path + "." + key);
          if (!err.empty()) return err;
        }
      }
    }
  }
  if (value.is_array() && schema.contains("items")) {
    std::size_t i = 0;
    for (const auto& item : value) {
      const auto err = check_schema(item, schema.at("items"),
                                    path + "[" + std::to_string(i) + "]");
      if (!err.empty()) return err;
      ++i;
    }
  }
  return "";
}

inline json load_schema(const std::string& name) {
  const std::string path = std::string(CREDAL_SCHEMA_DIR) + "/" + name;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("schema not found: " + path);
  return json::parse(in);
}

}  // namespace credal::testing
