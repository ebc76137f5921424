#pragma once

#include <complex>

#include <Eigen/Dense>

#include "qline/core/octant.hpp"

namespace qline::core {

using Complex = std::complex<double>;
using Matrix2 = Eigen::Matrix2cd;
using Ket2 = Eigen::Vector2cd;

/// Tolerance for exact-algebra checks (norms, traces, unitarity).
inline constexpr double kExactTol = 1e-12;
/// Tolerance for composed operator equivalences.
inline constexpr double kComposedTol = 1e-9;

/// A 2x2 unitary. Construction checks U^dagger U = I within kExactTol.
class Unitary2 {
public:
  Unitary2() : m_(Matrix2::Identity()) {}
  explicit Unitary2(const Matrix2& m);

  const Matrix2& matrix() const { return m_; }
  Complex operator()(int row, int col) const { return m_(row, col); }
  Unitary2 adjoint() const;

  friend Unitary2 operator*(const Unitary2& a, const Unitary2& b);

private:
  struct Unchecked {};
  Unitary2(const Matrix2& m, Unchecked) : m_(m) {}
  Matrix2 m_;
};

/// R_z(theta) = diag(1, e^{i theta}).
Unitary2 rz_gate(Octant theta);
Unitary2 rz_gate(double theta_radians);

Unitary2 pauli_x();
Unitary2 pauli_y();
Unitary2 pauli_z();
Unitary2 hadamard();

/// |+_a> = (|0> + e^{ia}|1>)/sqrt2 and |-_a> = (|0> - e^{ia}|1>)/sqrt2.
Ket2 plus_ket(double angle_radians);
Ket2 minus_ket(double angle_radians);
inline Ket2 plus_ket(Octant a) { return plus_ket(a.radians()); }
inline Ket2 minus_ket(Octant a) { return minus_ket(a.radians()); }

/// An orthonormal single-qubit measurement basis; outcome k projects onto ket(k).
struct MeasurementBasis {
  Ket2 ket0;
  Ket2 ket1;

  const Ket2& ket(int outcome) const { return outcome == 0 ? ket0 : ket1; }
  MeasurementBasis swapped() const { return {ket1, ket0}; }
  /// Projector |ket(k)><ket(k)|.
  Matrix2 projector(int outcome) const;
};

/// The {|+_delta>, |-_delta>} basis: outcome 0 is |+_delta>.
MeasurementBasis delta_basis(Octant delta);
MeasurementBasis delta_basis(double delta_radians);

/// Trace distance between two 2x2 Hermitian operators, 1/2 ||A - B||_1.
double trace_distance2(const Matrix2& a, const Matrix2& b);

}  // namespace qline::core
