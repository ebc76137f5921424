#pragma once

// Test-only helpers: seeded generators of random states for property tests.

#include <cstdint>
#include <random>

#include "qline/core/density_matrix.hpp"

namespace qline::testing {

inline core::StateVector random_state(std::size_t qubits, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  Eigen::VectorXcd v(Eigen::Index{1} << qubits);
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = core::Complex(g(rng), g(rng));
  v.normalize();
  return core::StateVector(qubits, v);
}

/// Random full-rank state: normalized G G^dagger with Gaussian G.
inline core::DensityMatrix random_density(std::size_t qubits, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  const Eigen::Index dim = Eigen::Index{1} << qubits;
  Eigen::MatrixXcd m(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = 0; j < dim; ++j) m(i, j) = core::Complex(g(rng), g(rng));
  Eigen::MatrixXcd rho = m * m.adjoint();
  rho /= rho.trace().real();
  return core::DensityMatrix(qubits, rho);
}

}  // namespace qline::testing
