// Copyright 2026 The lucastile Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LUCASTILE_TESTS_SCHEMA_CHECK_HPP
#define LUCASTILE_TESTS_SCHEMA_CHECK_HPP

// A small JSON Schema validator covering the keywords used by
// schema/report.schema.json: type, const, enum, pattern, required,
// properties, additionalProperties, items, minItems, oneOf and local $ref.

#include <regex>
#include <string>

#include <nlohmann/json.hpp>

namespace schema_check {

using nlohmann::json;

class Validator {
public:
    explicit Validator(json root) : root_(std::move(root)) {}

    /// Empty on success, otherwise the JSON pointer of the first violation.
    std::string validate(const json& instance) const { return check(root_, instance, ""); }

private:
    const json& resolve(const std::string& ref) const
    {
        // Only "#/..." pointers into the same document.
        return root_.at(json::json_pointer(ref.substr(1)));
    }

    static bool has_type(const json& value, const std::string& type)
    {
        if (type == "object") return value.is_object();
        if (type == "array") return value.is_array();
        if (type == "string") return value.is_string();
        if (type == "boolean") return value.is_boolean();
        if (type == "integer") return value.is_number_integer();
        if (type == "number") return value.is_number();
        if (type == "null") return value.is_null();
        return false;
    }

    std::string check(const json& schema, const json& value, const std::string& where) const
    {
        const std::string here = where.empty() ? "/" : where;
        if (schema.contains("$ref")) {
            return check(resolve(schema["$ref"].get<std::string>()), value, where);
        }
        if (schema.contains("type") && !has_type(value, schema["type"].get<std::string>())) {
            return here + ": expected " + schema["type"].get<std::string>();
        }
        if (schema.contains("const") && value != schema["const"]) {
            return here + ": expected constant " + schema["const"].dump();
        }
        if (schema.contains("enum")) {
            bool found = false;
            for (const auto& option : schema["enum"]) {
                found = found || option == value;
            }
            if (!found) {
                return here + ": value " + value.dump() + " not in enum";
            }
        }
        if (schema.contains("pattern") && value.is_string() &&
            !std::regex_search(value.get<std::string>(), std::regex(schema["pattern"].get<std::string>()))) {
            return here + ": does not match pattern";
        }
        if (schema.contains("oneOf")) {
            int matches = 0;
            for (const auto& option : schema["oneOf"]) {
                matches += check(option, value, where).empty() ? 1 : 0;
            }
            if (matches != 1) {
                return here + ": matches " + std::to_string(matches) + " oneOf branches";
            }
        }
        if (value.is_object()) {
            for (const auto& key : schema.value("required", json::array())) {
                if (!value.contains(key.get<std::string>())) {
                    return here + ": missing " + key.get<std::string>();
                }
            }
            const json props = schema.value("properties", json::object());
            for (const auto& [key, item] : value.items()) {
                const std::string path = where + "/" + key;
                if (props.contains(key)) {
                    if (auto e = check(props[key], item, path); !e.empty()) {
                        return e;
                    }
                } else if (schema.contains("additionalProperties")) {
                    const json& extra = schema["additionalProperties"];
                    if (extra.is_boolean()) {
                        if (!extra.get<bool>()) {
                            return path + ": unexpected property";
                        }
                    } else if (auto e = check(extra, item, path); !e.empty()) {
                        return e;
                    }
                }
            }
        }
        if (value.is_array()) {
            if (schema.contains("minItems") && value.size() < schema["minItems"].get<std::size_t>()) {
                return here + ": too few items";
            }
            if (schema.contains("items")) {
                for (std::size_t i = 0; i < value.size(); ++i) {
                    if (auto e = check(schema["items"], value[i], where + "/" + std::to_string(i)); !e.empty()) {
                        return e;
                    }
                }
            }
        }
        return {};
    }

    json root_;
};

} // namespace schema_check

#endif
