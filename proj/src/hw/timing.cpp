#include "qline/hw/timing.hpp"

#include <stdexcept>

namespace qline::hw {

double TimingBudget::photon_delay_ns() const {
  if (photon_delay_override_ns) return *photon_delay_override_ns;
  return fiber_length_m * refractive_index / kSpeedOfLightMPerNs;
}

TimingVerdict timing_check(const TimingBudget& b) {
  for (double x : {b.fiber_length_m, b.refractive_index, b.detector_response_ns, b.logic_ns, b.signal_cable_ns,
                   b.pc_rise_ns, b.setup_lead_ns}) {
    if (x < 0.0) throw std::invalid_argument("TimingBudget: negative entry");
  }
  const double available = b.photon_delay_ns();
  const double required = b.required_ns();
  // Interaction starts at the first detection.
  const StageMarkers markers{0.0, b.setup_lead_ns, b.setup_lead_ns + b.detector_response_ns};
  return {available >= required, available, required, available - required, markers};
}

}  // namespace qline::hw
