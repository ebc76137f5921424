#pragma once

#include <cstddef>

#include <Eigen/Dense>

#include "qline/core/gates.hpp"

namespace qline::core {

/// Qubits are numbered 1..n; qubit 1 is the leftmost ket symbol and the most
/// significant bit of a basis index, so |q1 q2 ... qn> has index q1*2^(n-1)+...
using Qubit = std::size_t;

/// A normalized pure state on n qubits. Construction checks the norm.
class StateVector {
public:
  StateVector(std::size_t qubits, Eigen::VectorXcd amplitudes);

  static StateVector basis_state(std::size_t qubits, std::size_t index);
  static StateVector from_ket(const Ket2& ket);
  /// |+>^(tensor n)
  static StateVector plus(std::size_t qubits);

  std::size_t qubits() const { return qubits_; }
  std::size_t dimension() const { return static_cast<std::size_t>(amplitudes_.size()); }
  const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }
  Complex operator[](std::size_t index) const { return amplitudes_(static_cast<Eigen::Index>(index)); }

private:
  std::size_t qubits_;
  Eigen::VectorXcd amplitudes_;
};

/// |a> tensor |b>, with a's qubits first.
StateVector tensor(const StateVector& a, const StateVector& b);

/// |<a|b>|^2
double overlap(const StateVector& a, const StateVector& b);

}  // namespace qline::core
