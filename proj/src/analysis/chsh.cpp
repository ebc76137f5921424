#include "qline/analysis/chsh.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "qline/core/gates.hpp"

namespace qline::analysis {

Eigen::Matrix3d correlation_matrix(const core::DensityMatrix& rho) {
  if (rho.qubits() != 2) throw std::invalid_argument("chsh: expects a two-qubit state");
  const std::array<core::Matrix2, 3> s{core::pauli_x().matrix(), core::pauli_y().matrix(), core::pauli_z().matrix()};
  Eigen::Matrix3d t;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const auto& a = s[static_cast<std::size_t>(i)];
      Eigen::Matrix4cd op;
      for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) op.block<2, 2>(2 * r, 2 * c) = a(r, c) * s[static_cast<std::size_t>(j)];
      }
      t(i, j) = (rho.matrix() * op).trace().real();
    }
  }
  return t;
}

double chsh_value(const core::DensityMatrix& rho) {
  const Eigen::Matrix3d t = correlation_matrix(rho);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(t.transpose() * t, Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();  // ascending
  return 2.0 * std::sqrt(std::max(0.0, ev(2) + ev(1)));
}

}  // namespace qline::analysis
