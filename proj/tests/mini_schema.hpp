#pragma once

// Just enough of JSON Schema draft-07 to validate the shipped schema file
// against the documents the library emits: type, properties, required,
// additionalProperties, items, enum, pattern, $ref into $defs, anyOf.

#include <json.hpp>

#include <regex>
#include <string>

namespace mini_schema {

using nlohmann::json;

class Validator {
public:
    explicit Validator(json schema_root) : root_(std::move(schema_root)) {}

    // throws std::runtime_error with a path on the first violation
    void validate(const json& doc, const std::string& def_name) const {
        check(doc, root_.at("$defs").at(def_name), "$." + def_name);
    }

private:
    void check(const json& doc, const json& schema, const std::string& path) const {
        if (schema.contains("$ref")) {
            const std::string ref = schema["$ref"];
            const std::string prefix = "#/$defs/";
            if (ref.rfind(prefix, 0) != 0) fail(path, "unsupported $ref " + ref);
            check(doc, root_.at("$defs").at(ref.substr(prefix.size())), path);
            return;
        }
        if (schema.contains("anyOf")) {
            for (const auto& alt : schema["anyOf"]) {
                try {
                    check(doc, alt, path);
                    return;
                } catch (const std::runtime_error&) {
                }
            }
            fail(path, "matches no anyOf alternative");
        }
        if (schema.contains("type")) check_type(doc, schema["type"], path);
        if (schema.contains("enum")) {
            bool ok = false;
            for (const auto& v : schema["enum"])
                if (v == doc) ok = true;
            if (!ok) fail(path, "value not in enum");
        }
        if (schema.contains("pattern") && doc.is_string()) {
            std::regex re(schema["pattern"].get<std::string>());
            if (!std::regex_search(doc.get<std::string>(), re))
                fail(path, "string does not match pattern " + schema["pattern"].get<std::string>());
        }
        if (doc.is_object()) {
            if (schema.contains("required"))
                for (const auto& key : schema["required"])
                    if (!doc.contains(key.get<std::string>()))
                        fail(path, "missing required key " + key.get<std::string>());
            const json* props = schema.contains("properties") ? &schema["properties"] : nullptr;
            for (const auto& [key, value] : doc.items()) {
                if (props && props->contains(key)) {
                    check(value, (*props)[key], path + "." + key);
                } else if (schema.contains("additionalProperties")) {
                    const json& ap = schema["additionalProperties"];
                    if (ap.is_boolean()) {
                        if (!ap.get<bool>()) fail(path, "unexpected key " + key);
                    } else {
                        check(value, ap, path + "." + key);
                    }
                }
            }
        }
        if (doc.is_array() && schema.contains("items")) {
            std::size_t i = 0;
            for (const auto& item : doc) check(item, schema["items"], path + "[" + std::to_string(i++) + "]");
        }
    }

    static void check_type(const json& doc, const json& type, const std::string& path) {
        const std::string t = type.get<std::string>();
        bool ok = (t == "object" && doc.is_object()) || (t == "array" && doc.is_array()) ||
                  (t == "string" && doc.is_string()) || (t == "boolean" && doc.is_boolean()) ||
                  (t == "integer" && doc.is_number_integer()) ||
                  (t == "number" && doc.is_number());
        if (!ok) fail(path, "expected type " + t);
    }

    [[noreturn]] static void fail(const std::string& path, const std::string& message) {
        throw std::runtime_error(path + ": " + message);
    }

    json root_;
};

} // namespace mini_schema
