#pragma once

#include <cstdint>

#include "qline/core/gates.hpp"
#include "qline/core/state_vector.hpp"

namespace qline::core {

/// What a measurement station physically does for a requested angle: the
/// projective basis it realizes and whether the reported bit is relabelled.
struct DeviceSetting {
  MeasurementBasis basis;
  std::uint8_t flip = 0;
};

/// Maps a requested angle delta on a given station to a physical setting.
/// Stations are numbered like qubits, starting at 1.
class MeasurementDevice {
 public:
  virtual ~MeasurementDevice() = default;
  virtual DeviceSetting setting(std::size_t station, Octant delta) const = 0;
};

/// Exact basis {|+_d>, |-_d>}, no relabelling.
class IdealDevice final : public MeasurementDevice {
 public:
  DeviceSetting setting(std::size_t, Octant delta) const override { return {delta_basis(delta), 0}; }
};

}  // namespace qline::core
