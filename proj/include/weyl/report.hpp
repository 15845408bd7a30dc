#pragma once

#include "json.hpp"

#include <string>
#include <vector>

namespace weyl {

using Json = nlohmann::json;

/// Outcome of one identity or property check. `residual` is the serialized residual
/// ("0" on success); `details` holds check-specific data. Keys serialize sorted, so
/// the JSON rendering is deterministic.
struct VerificationReport {
    std::string name;
    bool passed = false;
    Json parameters = Json::object();
    std::string residual = "0";
    std::vector<std::string> witnesses;
    Json details = Json::object();

    Json to_json() const;
};

/// Folds many sample reports into one: passes iff all do, keeping the first failure.
VerificationReport aggregate(std::string name, const std::vector<VerificationReport>& samples);

} // namespace weyl
