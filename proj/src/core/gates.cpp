#include "qline/core/gates.hpp"

#include <cmath>
#include <stdexcept>

namespace qline::core {

Unitary2::Unitary2(const Matrix2& m) : m_(m) {
  if ((m.adjoint() * m - Matrix2::Identity()).cwiseAbs().maxCoeff() > kExactTol) {
    throw std::invalid_argument("Unitary2: matrix is not unitary");
  }
}

Unitary2 Unitary2::adjoint() const { return Unitary2(m_.adjoint(), Unchecked{}); }

Unitary2 operator*(const Unitary2& a, const Unitary2& b) {
  return Unitary2(a.m_ * b.m_, Unitary2::Unchecked{});
}

Unitary2 rz_gate(Octant theta) {
  // Exact table avoids cos/sin rounding for the eight protocol angles.
  static const double h = std::sqrt(0.5);
  static const Complex phases[8] = {{1, 0}, {h, h},   {0, 1},  {-h, h},
                                    {-1, 0}, {-h, -h}, {0, -1}, {h, -h}};
  Matrix2 m;
  m << 1, 0, 0, phases[theta.value()];
  return Unitary2(m);
}

Unitary2 rz_gate(double theta_radians) {
  Matrix2 m;
  m << 1, 0, 0, std::polar(1.0, theta_radians);
  return Unitary2(m);
}

Unitary2 pauli_x() {
  Matrix2 m;
  m << 0, 1, 1, 0;
  return Unitary2(m);
}

Unitary2 pauli_y() {
  Matrix2 m;
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return Unitary2(m);
}

Unitary2 pauli_z() {
  Matrix2 m;
  m << 1, 0, 0, -1;
  return Unitary2(m);
}

Unitary2 hadamard() {
  const double h = std::sqrt(0.5);
  Matrix2 m;
  m << h, h, h, -h;
  return Unitary2(m);
}

Ket2 plus_ket(double a) {
  const double h = std::sqrt(0.5);
  return Ket2(h, h * std::polar(1.0, a));
}

Ket2 minus_ket(double a) {
  const double h = std::sqrt(0.5);
  return Ket2(h, -h * std::polar(1.0, a));
}

Matrix2 MeasurementBasis::projector(int outcome) const {
  const Ket2& k = ket(outcome);
  return k * k.adjoint();
}

MeasurementBasis delta_basis(Octant delta) {
  const Ket2 p = rz_gate(delta).matrix() * Ket2(std::sqrt(0.5), std::sqrt(0.5));
  const Ket2 m = rz_gate(delta).matrix() * Ket2(std::sqrt(0.5), -std::sqrt(0.5));
  return {p, m};
}

MeasurementBasis delta_basis(double delta_radians) {
  return {plus_ket(delta_radians), minus_ket(delta_radians)};
}

double trace_distance2(const Matrix2& a, const Matrix2& b) {
  const Matrix2 d = a - b;
  Eigen::SelfAdjointEigenSolver<Matrix2> es(0.5 * (d + d.adjoint()), Eigen::EigenvaluesOnly);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

}  // namespace qline::core
