#pragma once

#include <string>

#include <json.hpp>

#include "trapion/errors.hpp"

namespace trapion::detail {

// Typed field access that names the offending field in its InputError.
template <typename T>
T field(const nlohmann::json& obj, const std::string& name) {
    if (!obj.is_object()) throw InputError("expected a JSON object while reading '" + name + "'");
    auto it = obj.find(name);
    if (it == obj.end()) throw InputError("missing field '" + name + "'");
    try {
        if constexpr (std::is_unsigned_v<T>) {
            if (!it->is_number_unsigned()) {
                throw InputError("field '" + name + "' must be a non-negative integer");
            }
        } else if constexpr (std::is_floating_point_v<T>) {
            if (!it->is_number()) throw InputError("field '" + name + "' must be a number");
        } else if constexpr (std::is_same_v<T, std::string>) {
            if (!it->is_string()) throw InputError("field '" + name + "' must be a string");
        }
        return it->get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw InputError("field '" + name + "': " + e.what());
    }
}

template <typename T>
T field_or(const nlohmann::json& obj, const std::string& name, T fallback) {
    if (!obj.is_object() || !obj.contains(name) || obj.at(name).is_null()) return fallback;
    return field<T>(obj, name);
}

}  // namespace trapion::detail
