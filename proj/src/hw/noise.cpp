#include "qline/hw/noise.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qline::hw {

void NoiseParams::validate() const {
  if (!(v >= 0.0 && v <= 1.0)) throw std::invalid_argument("NoiseParams: v must lie in [0, 1]");
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw std::invalid_argument("NoiseParams: lambda must lie in [0, 1]");
  if (!std::isfinite(pc_phase_offset)) throw std::invalid_argument("NoiseParams: offset must be finite");
}

NoiseParams NoiseParams::experimental() { return {0.76, 0.63, -std::numbers::pi / 20}; }

core::StateVector psi_minus() {
  Eigen::VectorXcd a(4);
  a << 0.5, 0.5, 0.5, -0.5;
  return core::StateVector(2, a);
}

core::StateVector psi_plus() {
  Eigen::VectorXcd a(4);
  a << 0.5, 0.5, -0.5, 0.5;
  return core::StateVector(2, a);
}

core::DensityMatrix noisy_source_state(const NoiseParams& p) {
  p.validate();
  const Eigen::Vector4cd m = psi_minus().amplitudes();
  const Eigen::Vector4cd q = psi_plus().amplitudes();
  const Eigen::Matrix4cd pm = m * m.adjoint();
  const Eigen::Matrix4cd pp = q * q.adjoint();
  const Eigen::Matrix4cd rho =
      p.v * pm + (1 - p.v) * (p.lambda / 2 * (pp + pm) + (1 - p.lambda) / 4 * Eigen::Matrix4cd::Identity());
  return core::DensityMatrix(2, rho);
}

}  // namespace qline::hw
