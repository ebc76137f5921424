#pragma once

#include <vector>

#include <json.hpp>

#include "qline/security/blindness.hpp"
#include "qline/security/views.hpp"

namespace qline::security {

/// Security verdicts as a structured record: one entry per probe of the
/// sweep plus totals, the delta marginals and the blindness reports.
nlohmann::json security_report(const SecuritySweep& sweep,
                               const std::vector<std::pair<protocol::TwoClientInputs, std::array<std::array<double, 8>, 2>>>&
                                   delta_checks,
                               const std::vector<BlindnessReport>& blindness);

nlohmann::json to_json(const BlindnessReport& r);
nlohmann::json to_json(const DensityMatrix& rho);

}  // namespace qline::security
