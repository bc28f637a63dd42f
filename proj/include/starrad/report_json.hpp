#pragma once

#include <cstdint>
#include <vector>

#include <json.hpp>

#include "starrad/verify.hpp"

namespace starrad {

nlohmann::json to_json(const VerificationReport& rep);
nlohmann::json to_json(const RadiusResult& row);

/// Full run document: metadata header (version, seed, tolerances) plus the
/// serialized report list.
nlohmann::json make_run_report(const std::vector<VerificationReport>& reports,
                               std::uint64_t seed, const VerifyTolerances& tol);

}  // namespace starrad
