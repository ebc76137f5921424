#pragma once

#include <array>
#include <optional>

#include "qline/hw/tables.hpp"

namespace qline::hw {

/// Output of the nine-bit feed-forward logic: the PC control word and the
/// corrected first-outcome lines.
struct FfOutput {
  std::array<Bit, 3> v{};  // v2, v1, v0
  Bit f = 0;
  Bit m1_plus_true = 0;
  Bit m1_minus_true = 0;
  /// Derived for convenience; not wires of the circuit.
  Octant delta2;
  Bit m1_true() const { return m1_minus_true; }
};

/// A encodes theta2 + x2 pi + r2 pi, B encodes phi2. The detector lines
/// (m1_plus, m1_minus) = (1,0) means m1 = 0 and (0,1) means m1 = 1. Both lines
/// are corrected by xor with r1; delta2 = A + B when the corrected outcome is
/// 0, A - B otherwise. Patterns 00 and 11 are rejected events (nullopt).
std::optional<FfOutput> ff_circuit(Octant a, Octant b, Bit r1, Bit m1_plus, Bit m1_minus);

/// Same circuit on raw wires: a2a1a0 b2b1b0 r1 m1+ m1-.
std::optional<FfOutput> ff_circuit_bits(const std::array<Bit, 9>& wires);

}  // namespace qline::hw
