#pragma once

#include <string>

#include "json.hpp"

namespace testsupport {

/// Minimal structural validator: checks "type", "required", "properties",
/// "items", "additionalProperties" and "enum". Enough to pin the shipped
/// output schemas without a full JSON-Schema engine.
inline bool schema_check(const nlohmann::json& schema, const nlohmann::json& value,
                         std::string& error) {
  using nlohmann::json;
  if (schema.contains("type")) {
    const std::string t = schema["type"];
    bool ok = (t == "object" && value.is_object()) || (t == "array" && value.is_array()) ||
              (t == "string" && value.is_string()) || (t == "boolean" && value.is_boolean()) ||
              (t == "integer" && value.is_number_integer()) || (t == "number" && value.is_number());
    if (!ok) {
      error = "expected type " + t + ", got " + std::string(value.type_name());
      return false;
    }
  }
  if (schema.contains("enum")) {
    bool found = false;
    for (const auto& e : schema["enum"])
      if (e == value) found = true;
    if (!found) {
      error = "value not in enum";
      return false;
    }
  }
  if (schema.contains("required"))
    for (const auto& key : schema["required"])
      if (!value.contains(key.get<std::string>())) {
        error = "missing required key " + key.get<std::string>();
        return false;
      }
  if (schema.contains("properties"))
    for (const auto& [key, sub] : schema["properties"].items())
      if (value.contains(key) && !schema_check(sub, value[key], error)) {
        error = key + ": " + error;
        return false;
      }
  if (schema.contains("additionalProperties") && schema["additionalProperties"].is_object() &&
      value.is_object()) {
    const auto& props = schema.contains("properties") ? schema["properties"]
                                                      : nlohmann::json::object();
    for (const auto& [key, sub] : value.items())
      if (!props.contains(key) && !schema_check(schema["additionalProperties"], sub, error)) {
        error = key + ": " + error;
        return false;
      }
  }
  if (schema.contains("items") && value.is_array())
    for (size_t i = 0; i < value.size(); ++i)
      if (!schema_check(schema["items"], value[i], error)) {
        error = "[" + std::to_string(i) + "]: " + error;
        return false;
      }
  return true;
}

}  // namespace testsupport
