#include "qline/hw/optics.hpp"

#include <cmath>
#include <numbers>

namespace qline::hw {

using core::Complex;
using core::Matrix2;
using core::Unitary2;

namespace {

constexpr double kPi = std::numbers::pi;

Matrix2 rotation(double a) {
  Matrix2 r;
  r << std::cos(a), -std::sin(a), std::sin(a), std::cos(a);
  return r;
}

}  // namespace

Unitary2 half_wave_plate(double angle) {
  Matrix2 m;
  m << std::cos(2 * angle), std::sin(2 * angle), std::sin(2 * angle), -std::cos(2 * angle);
  return Unitary2(m);
}

Unitary2 quarter_wave_plate(double angle) {
  Matrix2 d = Matrix2::Zero();
  d(0, 0) = 1.0;
  d(1, 1) = Complex(0.0, 1.0);
  return Unitary2(rotation(angle) * d * rotation(-angle));
}

Unitary2 pockels_cell(double phase) { return core::rz_gate(phase); }

Matrix2 StationOperator::observable() const {
  Matrix2 pbs = Matrix2::Zero();
  pbs(0, 0) = 1.0;
  pbs(1, 1) = -1.0;
  return chain.matrix().adjoint() * pbs * chain.matrix();
}

core::MeasurementBasis StationOperator::basis() const {
  const Matrix2 u_dag = chain.matrix().adjoint();
  return {u_dag.col(0), u_dag.col(1)};
}

Povm StationOperator::povm() const {
  const auto b = basis();
  Povm p{b.projector(0), b.projector(1)};
  if (flip) std::swap(p.e0, p.e1);
  return p;
}

StationOperator build_o_delta1(Octant delta1) {
  return {half_wave_plate(kPi / 8 + delta1.radians() / 4) * quarter_wave_plate(-kPi / 4), 0};
}

StationOperator PcChain::op() const { return {half_wave_plate(kPi / 8) * pockels_cell(phase()), flip}; }

PcChain pc_chain(Octant delta2) {
  const auto e = delta2_table(delta2);
  return {e.pc_shift, 0.0, e.f};
}

PcChain apply_pc_imperfection(PcChain chain, double offset) {
  if (chain.pc_shift != Octant::zero()) chain.phase_error += offset;
  return chain;
}

StationOperator build_o_delta2(Octant delta2) { return pc_chain(delta2).op(); }

core::DeviceSetting HardwareDevice::setting(std::size_t station, Octant delta) const {
  if (station == 1) return build_o_delta1(delta).setting();
  return apply_pc_imperfection(pc_chain(delta), pc_offset_).op().setting();
}

}  // namespace qline::hw
