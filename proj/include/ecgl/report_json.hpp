#pragma once

#include <string>

#include <json.hpp>

#include "ecgl/harness.hpp"
#include "ecgl/prover.hpp"

namespace ecgl {

inline constexpr const char* kToolName = "ecgl";

nlohmann::ordered_json to_json(const VerificationReport& report);
/// Inverse of to_json. Throws ParseError on schema violations.
VerificationReport verification_report_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json to_json(const HarnessReport& report);
HarnessReport harness_report_from_json(const nlohmann::ordered_json& j);

/// Two-space indented text with a trailing newline.
std::string dump(const nlohmann::ordered_json& j);

}  // namespace ecgl
