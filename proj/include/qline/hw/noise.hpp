#pragma once

#include "qline/core/density_matrix.hpp"

namespace qline::hw {

/// Source and Pockels-cell imperfections. Default-constructed parameters are noiseless.
struct NoiseParams {
  double v = 1.0;       ///< visibility
  double lambda = 0.0;  ///< coloured-noise fraction of the non-ideal part
  double pc_phase_offset = 0.0;

  /// Throws std::invalid_argument unless v and lambda lie in [0, 1] and the offset is finite.
  void validate() const;

  /// v = 0.76, lambda = 0.63, PC offset -pi/20.
  static NoiseParams experimental();
};

/// (|00> + |01> + |10> - |11>)/2, the entangled source state.
core::StateVector psi_minus();
/// (Z x I) psi_minus.
core::StateVector psi_plus();

/// v P- + (1-v) [lambda/2 (P+ + P-) + (1-lambda)/4 I].
core::DensityMatrix noisy_source_state(const NoiseParams& p);

}  // namespace qline::hw
