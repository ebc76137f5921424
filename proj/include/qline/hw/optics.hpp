#pragma once

#include "qline/core/measurement_device.hpp"
#include "qline/hw/tables.hpp"

namespace qline::hw {

// Jones matrices with |H> = |0>, |V> = |1>. The PBS transmits H, which is
// reported as outcome 0.

/// [[cos 2a, sin 2a], [sin 2a, -cos 2a]].
core::Unitary2 half_wave_plate(double angle);
/// R(a) diag(1, i) R(-a).
core::Unitary2 quarter_wave_plate(double angle);
/// diag(1, e^{i phase}).
core::Unitary2 pockels_cell(double phase);

struct Povm {
  core::Matrix2 e0;
  core::Matrix2 e1;
};

/// A measurement station: optical elements U in front of the PBS, then an
/// optional relabelling of the two detector outcomes.
struct StationOperator {
  core::Unitary2 chain;
  Bit flip = 0;

  /// U^dagger diag(1,-1) U, before relabelling.
  core::Matrix2 observable() const;
  /// Physical basis U^dagger|k>, not relabelled.
  core::MeasurementBasis basis() const;
  /// Elements indexed by the reported outcome.
  Povm povm() const;
  core::DeviceSetting setting() const { return {basis(), flip}; }
};

/// Quarter-wave plate at -pi/4, then half-wave plate at pi/8 + delta1/4.
StationOperator build_o_delta1(Octant delta1);

/// Pockels cell followed by a half-wave plate at pi/8. The cell applies the
/// table shift plus any phase error.
struct PcChain {
  Octant pc_shift;
  double phase_error = 0.0;
  Bit flip = 0;

  double phase() const { return pc_shift.radians() + phase_error; }
  StationOperator op() const;
};

PcChain pc_chain(Octant delta2);
/// Adds `offset` to the cell phase when the cell is driven (nonzero shift).
PcChain apply_pc_imperfection(PcChain chain, double offset);
StationOperator build_o_delta2(Octant delta2);

/// Station 1 uses the waveplate chain; every later station uses the Pockels
/// cell with the configured phase error on driven settings.
class HardwareDevice final : public core::MeasurementDevice {
 public:
  explicit HardwareDevice(double pc_offset = 0.0) : pc_offset_(pc_offset) {}
  core::DeviceSetting setting(std::size_t station, Octant delta) const override;
  double pc_offset() const { return pc_offset_; }

 private:
  double pc_offset_;
};

}  // namespace qline::hw
