#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "qline/core/state_vector.hpp"

namespace qline::core {

/// A mixed state on n qubits, same qubit ordering as StateVector.
///
/// The public constructor checks the density-matrix invariants (Hermitian
/// and unit trace within kExactTol, smallest eigenvalue above -1e-10).
/// Operations in this library preserve those invariants by construction and
/// go through `trusted`, which skips the eigen-decomposition.
class DensityMatrix {
public:
  DensityMatrix(std::size_t qubits, Eigen::MatrixXcd entries);

  static DensityMatrix trusted(std::size_t qubits, Eigen::MatrixXcd entries);
  static DensityMatrix from_pure(const StateVector& psi);
  static DensityMatrix maximally_mixed(std::size_t qubits);

  std::size_t qubits() const { return qubits_; }
  std::size_t dimension() const { return static_cast<std::size_t>(entries_.rows()); }
  const Eigen::MatrixXcd& matrix() const { return entries_; }
  Complex operator()(std::size_t row, std::size_t col) const {
    return entries_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
  }

  /// Re-checks the invariants; used by tests and at trust boundaries.
  bool is_valid(double tol = kExactTol) const;
  std::vector<double> eigenvalues() const;

private:
  struct Unchecked {};
  DensityMatrix(std::size_t qubits, Eigen::MatrixXcd entries, Unchecked);

  std::size_t qubits_;
  Eigen::MatrixXcd entries_;
};

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

/// Reduced state on the qubits in `keep` (1-based, any order; the result
/// keeps them in increasing order). Throws on an empty or out-of-range set.
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const Qubit> keep);

/// Convex combination; uniform weights when none are given.
DensityMatrix mixture_average(std::span<const DensityMatrix> states,
                              std::optional<std::span<const double>> weights = std::nullopt);

}  // namespace qline::core
