#include "qline/hw/feed_forward.hpp"

namespace qline::hw {

std::optional<FfOutput> ff_circuit(Octant a, Octant b, Bit r1, Bit m1_plus, Bit m1_minus) {
  if (((m1_plus ^ m1_minus) & 1) == 0) return std::nullopt;
  FfOutput out;
  out.m1_plus_true = static_cast<Bit>((m1_plus ^ r1) & 1);
  out.m1_minus_true = static_cast<Bit>((m1_minus ^ r1) & 1);
  out.delta2 = out.m1_true() == 0 ? a + b : a - b;
  const auto code = fv_code(out.delta2);
  out.v = code.v;
  out.f = code.f;
  return out;
}

std::optional<FfOutput> ff_circuit_bits(const std::array<Bit, 9>& w) {
  return ff_circuit(octant_from_bits({w[0], w[1], w[2]}), octant_from_bits({w[3], w[4], w[5]}), w[6], w[7], w[8]);
}

}  // namespace qline::hw
