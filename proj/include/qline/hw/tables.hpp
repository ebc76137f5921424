#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "qline/core/octant.hpp"

namespace qline::hw {

using core::Octant;
using Bit = std::uint8_t;

/// How the second station realizes delta2: a Pockels-cell shift in
/// {0, pi/4, pi/2, 3pi/4} plus an outcome flip f when the ideal shift is >= pi.
struct PhaseShiftEntry {
  Octant delta2;
  Octant ideal_shift;
  Octant pc_shift;
  Bit f = 0;
  bool operator==(const PhaseShiftEntry&) const = default;
};

PhaseShiftEntry delta2_table(Octant delta2);
const std::array<PhaseShiftEntry, 8>& phase_shift_table();

/// Four-bit control word f v2 v1 v0. V is one-hot on the nonzero PC shift:
/// v2 -> 3pi/4, v1 -> pi/2, v0 -> pi/4, 000 -> no shift.
struct FvCode {
  Bit f = 0;
  std::array<Bit, 3> v{};  // v2, v1, v0
  /// "fv2v1v0" as a string of 0/1.
  std::string bits() const;
  bool operator==(const FvCode&) const = default;
};

FvCode fv_code(Octant delta2);
/// PC shift selected by the V lines; throws std::invalid_argument if V is not one-hot or zero.
Octant pc_shift_of(const std::array<Bit, 3>& v);

/// Three-bit code a2a1a0 of an octant, most significant first.
std::array<Bit, 3> octant_bits(Octant a);
Octant octant_from_bits(const std::array<Bit, 3>& bits);

/// Pockels-cell drive voltage per shift, strictly increasing in the shift.
class VoltageMap {
 public:
  VoltageMap();  // 0, 650, 850, 1100 V
  explicit VoltageMap(std::array<double, 4> volts);
  double volts(Octant pc_shift) const;
  /// "V0", "Vpi/4", "Vpi/2", "V3pi/4".
  static std::string label(Octant pc_shift);

 private:
  std::array<double, 4> volts_;
};

/// Fixture readers for the shipped CSV tables.
std::vector<PhaseShiftEntry> load_phase_shift_table(const std::filesystem::path& csv);

struct FfEncodingRow {
  std::array<Bit, 3> code;
  Octant angle;
  Octant delta2;
  std::string fv;
  std::string pc_voltage;
};
std::vector<FfEncodingRow> load_ff_encoding_table(const std::filesystem::path& csv);

}  // namespace qline::hw
