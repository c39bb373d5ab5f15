// Error type shared by all modules.
//
// Every failure mode carries a stable machine-readable code (for example
// "NonPrimitiveRay" or "UnboundedPolytope") plus an optional JSON detail
// payload; the CLI forwards both on stderr.

#pragma once

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <utility>

namespace toric {

using OJson = nlohmann::ordered_json;

class ToricError : public std::runtime_error {
public:
    ToricError(std::string code, const std::string& message, OJson detail = OJson::object())
        : std::runtime_error(message), code_(std::move(code)), detail_(std::move(detail)) {}

    const std::string& code() const noexcept { return code_; }
    const OJson& detail() const noexcept { return detail_; }

    /// {"code": ..., "message": ..., <detail fields>}
    OJson to_json() const {
        OJson j;
        j["code"] = code_;
        j["message"] = what();
        for (const auto& [k, v] : detail_.items()) j[k] = v;
        return j;
    }

private:
    std::string code_;
    OJson detail_;
};

[[noreturn]] inline void throw_toric(std::string code, const std::string& message,
                                     OJson detail = OJson::object()) {
    throw ToricError(std::move(code), message, std::move(detail));
}

}  // namespace toric
