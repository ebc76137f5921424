#pragma once

#include <filesystem>
#include <optional>

#include "qline/hw/timing.hpp"

namespace qline::analysis {

struct HwCheckReport {
  std::size_t ff_valid_inputs = 0;
  std::size_t ff_mismatches = 0;
  std::size_t ff_rejected_patterns = 0;
  /// Largest |P_hardware - P_ideal| over both stations, all angles and the probes.
  double station_max_error = 0.0;
  std::size_t station_probes = 0;
  /// Rows of the fixture files that disagree with the built-in tables; unset
  /// when no data directory is given.
  std::optional<std::size_t> fixture_mismatches;
  hw::TimingVerdict timing;
  std::array<double, 4> noise_spectrum{};
};

/// Exhaustive feed-forward check, station equivalence on `probes` random
/// states drawn from `seed`, fixture comparison, timing budget and the
/// Bell-basis spectrum of the experimental noise model.
HwCheckReport hw_check(std::size_t probes, std::uint64_t seed, const std::optional<std::filesystem::path>& data_dir,
                       const hw::TimingBudget& budget = {});

}  // namespace qline::analysis
