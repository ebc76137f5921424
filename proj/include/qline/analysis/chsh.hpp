#pragma once

#include "qline/core/density_matrix.hpp"

namespace qline::analysis {

/// Maximal CHSH value over all projective spin settings, 2 sqrt(u1 + u2)
/// with u1, u2 the two largest eigenvalues of T^T T, T_ij = Tr(rho s_i x s_j).
/// Throws std::invalid_argument unless rho is a two-qubit state.
double chsh_value(const core::DensityMatrix& rho);

/// The correlation matrix T.
Eigen::Matrix3d correlation_matrix(const core::DensityMatrix& rho);

}  // namespace qline::analysis
