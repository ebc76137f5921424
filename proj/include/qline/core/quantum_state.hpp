#pragma once

#include <variant>

#include "qline/core/measurement.hpp"

namespace qline::core {

/// A register that is pure in noiseless runs and mixed once noise enters.
using QuantumState = std::variant<StateVector, DensityMatrix>;

inline std::size_t qubit_count(const QuantumState& s) {
  return std::visit([](const auto& x) { return x.qubits(); }, s);
}

inline DensityMatrix to_density(const QuantumState& s) {
  if (const auto* psi = std::get_if<StateVector>(&s)) return DensityMatrix::from_pure(*psi);
  return std::get<DensityMatrix>(s);
}

inline QuantumState apply_single(const QuantumState& s, Qubit q, const Unitary2& u) {
  return std::visit([&](const auto& x) -> QuantumState { return apply_single(x, q, u); }, s);
}

inline QuantumState apply_cz(const QuantumState& s, Qubit a, Qubit b) {
  return std::visit([&](const auto& x) -> QuantumState { return apply_cz(x, a, b); }, s);
}

inline OutcomeProbabilities outcome_distribution(const QuantumState& s, Qubit q,
                                                 const MeasurementBasis& basis) {
  return std::visit([&](const auto& x) { return outcome_distribution(x, q, basis); }, s);
}

inline Projection<QuantumState> project(const QuantumState& s, Qubit q, const MeasurementBasis& basis,
                                        int outcome, Retain retain) {
  return std::visit(
      [&](const auto& x) -> Projection<QuantumState> {
        auto p = project(x, q, basis, outcome, retain);
        return {p.probability, QuantumState(std::move(p.state))};
      },
      s);
}

/// Tensor product; mixes to a density matrix if either side is mixed.
inline QuantumState tensor(const QuantumState& a, const QuantumState& b) {
  if (std::holds_alternative<StateVector>(a) && std::holds_alternative<StateVector>(b)) {
    return tensor(std::get<StateVector>(a), std::get<StateVector>(b));
  }
  return tensor(to_density(a), to_density(b));
}

}  // namespace qline::core
