#include "qline/security/report.hpp"

#include <algorithm>
#include <cmath>

namespace qline::security {

namespace {

const char* client_count_label(std::size_t n_malicious) { return n_malicious == 1 ? "n=2" : "n=3"; }

}  // namespace

nlohmann::json to_json(const DensityMatrix& rho) {
  nlohmann::json re = nlohmann::json::array(), im = nlohmann::json::array();
  const auto& m = rho.matrix();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    nlohmann::json rr = nlohmann::json::array(), ii = nlohmann::json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      rr.push_back(m(i, j).real());
      ii.push_back(m(i, j).imag());
    }
    re.push_back(rr);
    im.push_back(ii);
  }
  return {{"real", re}, {"imag", im}};
}

nlohmann::json to_json(const BlindnessReport& r) {
  const auto ref = experimental_reference(r.grid);
  nlohmann::json j{{"grid", to_string(r.grid)},
                   {"fidelity_with_mixed", r.fidelity_with_mixed},
                   {"entropy", r.entropy},
                   {"trace_distance_to_mixed", r.trace_distance_to_mixed},
                   {"max_conditional_distance", r.max_conditional_distance},
                   {"combinations", r.combinations},
                   {"average_state", to_json(r.average)},
                   {"experimental_fidelity", ref.fidelity}};
  if (ref.entropy) j["experimental_entropy"] = *ref.entropy;
  return j;
}

nlohmann::json security_report(const SecuritySweep& sweep,
                               const std::vector<std::pair<protocol::TwoClientInputs, std::array<std::array<double, 8>, 2>>>&
                                   delta_checks,
                               const std::vector<BlindnessReport>& blindness) {
  nlohmann::json probes = nlohmann::json::array();
  for (const auto& v : sweep.verdicts) {
    nlohmann::json malicious = nlohmann::json::array();
    for (auto t : v.probe.malicious) malicious.push_back(core::to_string(t));
    probes.push_back({{"clients", client_count_label(v.probe.malicious.size())},
                      {"theta", core::to_string(v.probe.theta)},
                      {"probe", v.probe.label},
                      {"malicious", malicious},
                      {"distance", v.distance},
                      {"equal", v.distance == 0.0}});
  }
  nlohmann::json deltas = nlohmann::json::array();
  double max_dev = 0.0;
  for (const auto& [in, marg] : delta_checks) {
    double dev = 0.0;
    for (const auto& row : marg) {
      for (double p : row) dev = std::max(dev, std::abs(p - 1.0 / 8));
    }
    max_dev = std::max(max_dev, dev);
    deltas.push_back({{"phi1", core::to_string(in.phi1)},
                      {"phi2", core::to_string(in.phi2)},
                      {"x1", in.x1},
                      {"x2", in.x2},
                      {"max_deviation", dev}});
  }
  nlohmann::json blind = nlohmann::json::array();
  for (const auto& r : blindness) blind.push_back(to_json(r));
  return {{"view_equality",
           {{"probes", sweep.verdicts.size()},
            {"unequal", sweep.unequal},
            {"max_distance", sweep.max_distance},
            {"verdicts", probes}}},
          {"delta_uniformity", {{"settings", delta_checks.size()}, {"max_deviation", max_dev}, {"checks", deltas}}},
          {"blindness", blind}};
}

}  // namespace qline::security
