#include "qline/core/measurement.hpp"

#include <stdexcept>

namespace qline::core {

namespace {

std::size_t shift_of(std::size_t n, Qubit q) {
  if (q < 1 || q > n) throw std::out_of_range("qubit index out of range");
  return n - q;
}

// Full index with bit `s` inserted at position `shift` of reduced index `a`.
std::size_t insert_bit(std::size_t a, std::size_t shift, std::size_t s) {
  const std::size_t low = a & ((std::size_t{1} << shift) - 1);
  return ((a >> shift) << (shift + 1)) | (s << shift) | low;
}

}  // namespace

StateVector apply_single(const StateVector& state, Qubit qubit, const Unitary2& u) {
  const std::size_t mask = std::size_t{1} << shift_of(state.qubits(), qubit);
  Eigen::VectorXcd a = state.amplitudes();
  const Complex u00 = u(0, 0), u01 = u(0, 1), u10 = u(1, 0), u11 = u(1, 1);
  for (std::size_t i = 0; i < state.dimension(); ++i) {
    if (i & mask) continue;
    const auto i0 = static_cast<Eigen::Index>(i), i1 = static_cast<Eigen::Index>(i | mask);
    const Complex x = a(i0), y = a(i1);
    a(i0) = u00 * x + u01 * y;
    a(i1) = u10 * x + u11 * y;
  }
  return StateVector(state.qubits(), std::move(a));
}

DensityMatrix apply_single(const DensityMatrix& state, Qubit qubit, const Unitary2& u) {
  const std::size_t mask = std::size_t{1} << shift_of(state.qubits(), qubit);
  const std::size_t dim = state.dimension();
  Eigen::MatrixXcd m = state.matrix();
  const Complex u00 = u(0, 0), u01 = u(0, 1), u10 = u(1, 0), u11 = u(1, 1);
  // rho -> U rho: mix row pairs.
  for (std::size_t i = 0; i < dim; ++i) {
    if (i & mask) continue;
    const auto i0 = static_cast<Eigen::Index>(i), i1 = static_cast<Eigen::Index>(i | mask);
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      const Complex x = m(i0, c), y = m(i1, c);
      m(i0, c) = u00 * x + u01 * y;
      m(i1, c) = u10 * x + u11 * y;
    }
  }
  // rho -> rho U^dagger: mix column pairs with conjugated coefficients.
  for (std::size_t j = 0; j < dim; ++j) {
    if (j & mask) continue;
    const auto j0 = static_cast<Eigen::Index>(j), j1 = static_cast<Eigen::Index>(j | mask);
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      const Complex x = m(r, j0), y = m(r, j1);
      m(r, j0) = x * std::conj(u00) + y * std::conj(u01);
      m(r, j1) = x * std::conj(u10) + y * std::conj(u11);
    }
  }
  return DensityMatrix::trusted(state.qubits(), std::move(m));
}

namespace {
std::size_t cz_mask(std::size_t n, Qubit a, Qubit b) {
  if (a == b) throw std::invalid_argument("apply_cz: control and target coincide");
  return (std::size_t{1} << shift_of(n, a)) | (std::size_t{1} << shift_of(n, b));
}
}  // namespace

StateVector apply_cz(const StateVector& state, Qubit a, Qubit b) {
  const std::size_t mask = cz_mask(state.qubits(), a, b);
  Eigen::VectorXcd amps = state.amplitudes();
  for (std::size_t i = 0; i < state.dimension(); ++i) {
    if ((i & mask) == mask) amps(static_cast<Eigen::Index>(i)) *= -1.0;
  }
  return StateVector(state.qubits(), std::move(amps));
}

DensityMatrix apply_cz(const DensityMatrix& state, Qubit a, Qubit b) {
  const std::size_t mask = cz_mask(state.qubits(), a, b);
  Eigen::MatrixXcd m = state.matrix();
  for (std::size_t i = 0; i < state.dimension(); ++i) {
    const double si = (i & mask) == mask ? -1.0 : 1.0;
    for (std::size_t j = 0; j < state.dimension(); ++j) {
      const double sj = (j & mask) == mask ? -1.0 : 1.0;
      if (si * sj < 0) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) *= -1.0;
    }
  }
  return DensityMatrix::trusted(state.qubits(), std::move(m));
}

namespace {

// Unnormalized reduced vector (<b| tensor I)|psi> on the remaining qubits.
Eigen::VectorXcd contract(const StateVector& state, std::size_t shift, const Ket2& b) {
  const std::size_t half = state.dimension() / 2;
  Eigen::VectorXcd out(static_cast<Eigen::Index>(half));
  const Complex c0 = std::conj(b(0)), c1 = std::conj(b(1));
  for (std::size_t a = 0; a < half; ++a) {
    out(static_cast<Eigen::Index>(a)) = c0 * state[insert_bit(a, shift, 0)] +
                                       c1 * state[insert_bit(a, shift, 1)];
  }
  return out;
}

// Unnormalized reduced matrix (<b| tensor I) rho (|b> tensor I).
Eigen::MatrixXcd contract(const DensityMatrix& state, std::size_t shift, const Ket2& b) {
  const std::size_t half = state.dimension() / 2;
  Eigen::MatrixXcd out(static_cast<Eigen::Index>(half), static_cast<Eigen::Index>(half));
  const Complex b0 = b(0), b1 = b(1);
  const Complex c0 = std::conj(b0), c1 = std::conj(b1);
  for (std::size_t i = 0; i < half; ++i) {
    const std::size_t i0 = insert_bit(i, shift, 0), i1 = insert_bit(i, shift, 1);
    for (std::size_t j = 0; j < half; ++j) {
      const std::size_t j0 = insert_bit(j, shift, 0), j1 = insert_bit(j, shift, 1);
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          c0 * (state(i0, j0) * b0 + state(i0, j1) * b1) +
          c1 * (state(i1, j0) * b0 + state(i1, j1) * b1);
    }
  }
  return out;
}

}  // namespace

OutcomeProbabilities outcome_distribution(const StateVector& state, Qubit qubit,
                                          const MeasurementBasis& basis) {
  const std::size_t shift = shift_of(state.qubits(), qubit);
  return {contract(state, shift, basis.ket0).squaredNorm(),
          contract(state, shift, basis.ket1).squaredNorm()};
}

OutcomeProbabilities outcome_distribution(const DensityMatrix& state, Qubit qubit,
                                          const MeasurementBasis& basis) {
  const std::size_t shift = shift_of(state.qubits(), qubit);
  return {contract(state, shift, basis.ket0).trace().real(),
          contract(state, shift, basis.ket1).trace().real()};
}

Projection<StateVector> project(const StateVector& state, Qubit qubit,
                                const MeasurementBasis& basis, int outcome, Retain retain) {
  const std::size_t n = state.qubits();
  const std::size_t shift = shift_of(n, qubit);
  const Ket2& b = basis.ket(outcome);
  Eigen::VectorXcd reduced = contract(state, shift, b);
  const double p = reduced.squaredNorm();
  if (p <= kZeroProbability) throw std::logic_error("project: zero-probability outcome");
  reduced /= std::sqrt(p);

  if (retain == Retain::Remove) {
    if (n == 1) throw std::invalid_argument("project: cannot remove the only qubit");
    return {p, StateVector(n - 1, std::move(reduced))};
  }
  Eigen::VectorXcd full(static_cast<Eigen::Index>(state.dimension()));
  for (std::size_t a = 0; a < state.dimension() / 2; ++a) {
    const Complex r = reduced(static_cast<Eigen::Index>(a));
    full(static_cast<Eigen::Index>(insert_bit(a, shift, 0))) = b(0) * r;
    full(static_cast<Eigen::Index>(insert_bit(a, shift, 1))) = b(1) * r;
  }
  return {p, StateVector(n, std::move(full))};
}

Projection<DensityMatrix> project(const DensityMatrix& state, Qubit qubit,
                                  const MeasurementBasis& basis, int outcome, Retain retain) {
  const std::size_t n = state.qubits();
  const std::size_t shift = shift_of(n, qubit);
  const Ket2& b = basis.ket(outcome);
  Eigen::MatrixXcd reduced = contract(state, shift, b);
  const double p = reduced.trace().real();
  if (p <= kZeroProbability) throw std::logic_error("project: zero-probability outcome");
  reduced /= p;
  // Clean up rounding so the result stays exactly Hermitian.
  reduced = 0.5 * (reduced + reduced.adjoint()).eval();

  if (retain == Retain::Remove) {
    if (n == 1) throw std::invalid_argument("project: cannot remove the only qubit");
    return {p, DensityMatrix::trusted(n - 1, std::move(reduced))};
  }
  const std::size_t half = state.dimension() / 2;
  Eigen::MatrixXcd full(static_cast<Eigen::Index>(state.dimension()),
                        static_cast<Eigen::Index>(state.dimension()));
  for (std::size_t i = 0; i < half; ++i) {
    for (std::size_t j = 0; j < half; ++j) {
      const Complex r = reduced(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      for (std::size_t s = 0; s < 2; ++s) {
        for (std::size_t t = 0; t < 2; ++t) {
          full(static_cast<Eigen::Index>(insert_bit(i, shift, s)),
               static_cast<Eigen::Index>(insert_bit(j, shift, t))) =
              b(static_cast<Eigen::Index>(s)) * std::conj(b(static_cast<Eigen::Index>(t))) * r;
        }
      }
    }
  }
  return {p, DensityMatrix::trusted(n, std::move(full))};
}

}  // namespace qline::core
