#pragma once

#include <optional>

namespace qline::hw {

inline constexpr double kSpeedOfLightMPerNs = 0.299792458;

/// Static latency budget of the feed-forward path. The second photon waits
/// in fibre while the first is detected, the logic computes delta2 and the
/// Pockels cell charges.
struct TimingBudget {
  double fiber_length_m = 65.0;
  double refractive_index = 1.45;
  /// Overrides the delay derived from the fibre when set.
  std::optional<double> photon_delay_override_ns;
  double detector_response_ns = 50.0;
  double logic_ns = 100.0;
  double signal_cable_ns = 40.0;
  double pc_rise_ns = 90.0;
  /// Lead time between fixing the secrets and the pair emission.
  double setup_lead_ns = 100.0;

  /// L n / c unless overridden.
  double photon_delay_ns() const;
  double required_ns() const { return detector_response_ns + logic_ns + signal_cable_ns + pc_rise_ns; }
};

/// Stage markers on the photon clock: secrets fixed at t0, pair emitted at
/// t1, first detection (start of interaction) at t2.
struct StageMarkers {
  double t0_ns;
  double t1_ns;
  double t2_ns;
};

struct TimingVerdict {
  bool pass;
  double available_ns;
  double required_ns;
  double slack_ns;
  StageMarkers markers;
};

TimingVerdict timing_check(const TimingBudget& budget);

}  // namespace qline::hw
