#pragma once

#include <random>
#include <utility>

#include "qline/core/density_matrix.hpp"
#include "qline/core/state_vector.hpp"

namespace qline::core {

// Single-qubit gates, CZ and single-qubit projective measurement for pure
// and mixed states. All functions are pure: they return a new state.

StateVector apply_single(const StateVector& state, Qubit qubit, const Unitary2& u);
DensityMatrix apply_single(const DensityMatrix& state, Qubit qubit, const Unitary2& u);

/// Negates the amplitude of every basis state with qubits a and b both set.
StateVector apply_cz(const StateVector& state, Qubit a, Qubit b);
DensityMatrix apply_cz(const DensityMatrix& state, Qubit a, Qubit b);

struct OutcomeProbabilities {
  double p0 = 0.0;
  double p1 = 0.0;
  double operator[](int outcome) const { return outcome == 0 ? p0 : p1; }
};

/// Exact Born probabilities of measuring `qubit` in `basis`.
OutcomeProbabilities outcome_distribution(const StateVector& state, Qubit qubit,
                                          const MeasurementBasis& basis);
OutcomeProbabilities outcome_distribution(const DensityMatrix& state, Qubit qubit,
                                          const MeasurementBasis& basis);
inline OutcomeProbabilities outcome_distribution(const StateVector& state, Qubit qubit, Octant delta) {
  return outcome_distribution(state, qubit, delta_basis(delta));
}
inline OutcomeProbabilities outcome_distribution(const DensityMatrix& state, Qubit qubit, Octant delta) {
  return outcome_distribution(state, qubit, delta_basis(delta));
}

/// Whether a measured qubit stays in the register (collapsed) or is removed.
enum class Retain { Keep, Remove };

template <class State>
struct Projection {
  double probability;
  State state;  ///< renormalized post-measurement state
};

/// Post-measurement state for a given outcome. Throws std::logic_error when
/// the outcome has (numerically) zero probability.
Projection<StateVector> project(const StateVector& state, Qubit qubit,
                                const MeasurementBasis& basis, int outcome, Retain retain);
Projection<DensityMatrix> project(const DensityMatrix& state, Qubit qubit,
                                  const MeasurementBasis& basis, int outcome, Retain retain);

/// Probabilities below this are treated as impossible branches.
inline constexpr double kZeroProbability = 1e-15;

template <class State>
struct Measurement {
  int outcome;
  State state;
};

/// Samples an outcome from a uniform variate u in [0,1): outcome 0 iff u < p0.
template <class State>
Measurement<State> measure_with_variate(const State& state, Qubit qubit,
                                        const MeasurementBasis& basis, double u,
                                        Retain retain) {
  const auto p = outcome_distribution(state, qubit, basis);
  const int outcome = u < p.p0 ? 0 : 1;
  auto proj = project(state, qubit, basis, outcome, retain);
  return {outcome, std::move(proj.state)};
}

template <class State, class Urbg>
Measurement<State> measure_in_basis(const State& state, Qubit qubit, const MeasurementBasis& basis,
                                    Urbg& rng, Retain retain = Retain::Remove) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  return measure_with_variate(state, qubit, basis, unit(rng), retain);
}

/// Measures in the {|+_delta>, |-_delta>} basis; outcome 0 is |+_delta>.
template <class State, class Urbg>
Measurement<State> measure_in_delta_basis(const State& state, Qubit qubit, Octant delta, Urbg& rng,
                                          Retain retain = Retain::Remove) {
  return measure_in_basis(state, qubit, delta_basis(delta), rng, retain);
}

}  // namespace qline::core
