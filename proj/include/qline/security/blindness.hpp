#pragma once

#include <array>
#include <optional>
#include <string>

#include "qline/hw/noise.hpp"
#include "qline/protocol/two_client.hpp"
#include "qline/security/ideal.hpp"

namespace qline::security {

/// Which server-held state is averaged on the two-chain.
///  - FirstQubit: qubit 1 after qubit 2 is measured at 3pi/2; rotations on
///    qubit 2 vary, qubit 1 is not rotated.
///  - SecondQubit: qubit 2 after qubit 1 is measured at pi; rotations on
///    qubit 1 vary, qubit 2 is not rotated.
///  - FullState: the two-qubit state; client 1 varies its angle on qubit 1
///    and client 2 on qubit 2, the other two angles are 0.
enum class BlindnessGrid { FirstQubit, SecondQubit, FullState };

std::string to_string(BlindnessGrid g);
/// Throws std::invalid_argument on an unknown name.
BlindnessGrid parse_blindness_grid(const std::string& name);

struct BlindnessReport {
  BlindnessGrid grid;
  DensityMatrix average;
  double fidelity_with_mixed = 0.0;
  double entropy = 0.0;
  double trace_distance_to_mixed = 0.0;
  /// Largest trace distance from the maximally mixed state over every
  /// conditional state averaged (one per heralded outcome, or one per value
  /// of the server's classical view).
  double max_conditional_distance = 0.0;
  std::size_t combinations = 0;
};

/// Fixed-angle grid: 64 combinations of the two varied client angles, each
/// state conditioned on the heralded outcome and averaged with equal weight.
/// The report averages outcome 0; outcome 1 enters max_conditional_distance.
BlindnessReport server_view_blindness(BlindnessGrid grid, const std::optional<hw::NoiseParams>& noise = std::nullopt);

/// Protocol view for a fixed algorithm: all secrets uniform, states grouped
/// by everything classical the server has seen when it holds them (delta1;
/// for SecondQubit also m1 and delta2).
BlindnessReport server_view_blindness(BlindnessGrid grid, const protocol::TwoClientInputs& in,
                                      const std::optional<hw::NoiseParams>& noise = std::nullopt);

/// Laboratory values for the fixed-angle grids, kept for side-by-side output.
struct ExperimentalReference {
  double fidelity;
  std::optional<double> entropy;
};
ExperimentalReference experimental_reference(BlindnessGrid grid);

/// Marginal distributions of delta1 and delta2 over uniform secrets and the
/// server's outcomes, index = octant value.
std::array<std::array<double, 8>, 2> delta_marginals(const protocol::TwoClientInputs& in,
                                                     const core::MeasurementDevice& device);

}  // namespace qline::security
