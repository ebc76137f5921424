#include "qline/analysis/hw_check.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>

#include "qline/core/measurement.hpp"
#include "qline/hw/feed_forward.hpp"
#include "qline/hw/noise.hpp"
#include "qline/hw/optics.hpp"
#include "qline/hw/tables.hpp"

namespace qline::analysis {

namespace {

using core::Octant;
using hw::Bit;

core::StateVector random_qubit(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Eigen::VectorXcd v(2);
  for (int i = 0; i < 2; ++i) v(i) = core::Complex(g(rng), g(rng));
  v.normalize();
  return core::StateVector(1, v);
}

std::size_t count_fixture_mismatches(const std::filesystem::path& dir) {
  std::size_t bad = 0;
  const auto shifts = hw::load_phase_shift_table(dir / "phase_shift_table.csv");
  if (shifts.size() != 8) ++bad;
  for (const auto& row : shifts) {
    if (!(row == hw::delta2_table(row.delta2))) ++bad;
  }
  const hw::VoltageMap volts;
  for (const auto& row : hw::load_ff_encoding_table(dir / "ff_encoding_table.csv")) {
    const auto fv = hw::fv_code(row.delta2);
    if (hw::octant_from_bits(row.code) != row.angle || fv.bits() != row.fv ||
        hw::VoltageMap::label(hw::pc_shift_of(fv.v)) != row.pc_voltage) {
      ++bad;
    }
  }
  return bad;
}

}  // namespace

HwCheckReport hw_check(std::size_t probes, std::uint64_t seed, const std::optional<std::filesystem::path>& data_dir,
                       const hw::TimingBudget& budget) {
  HwCheckReport r;
  for (std::size_t w = 0; w < 512; ++w) {
    std::array<Bit, 9> wires{};
    for (std::size_t i = 0; i < 9; ++i) wires[i] = static_cast<Bit>((w >> (8 - i)) & 1U);
    const auto out = hw::ff_circuit_bits(wires);
    if (wires[7] == wires[8]) {
      if (out) ++r.ff_mismatches;
      else ++r.ff_rejected_patterns;
      continue;
    }
    ++r.ff_valid_inputs;
    if (!out) {
      ++r.ff_mismatches;
      continue;
    }
    const Octant a = hw::octant_from_bits({wires[0], wires[1], wires[2]});
    const Octant b = hw::octant_from_bits({wires[3], wires[4], wires[5]});
    const Bit m1_true = wires[8] ^ wires[6];
    const Octant delta2 = m1_true == 0 ? a + b : a - b;
    const auto fv = hw::fv_code(delta2);
    const auto entry = hw::delta2_table(delta2);
    if (out->delta2 != delta2 || out->f != fv.f || out->v != fv.v || out->f != entry.f ||
        hw::pc_shift_of(out->v) != entry.pc_shift || out->m1_true() != m1_true) {
      ++r.ff_mismatches;
    }
  }

  std::mt19937_64 rng(seed);
  const hw::HardwareDevice device;
  for (std::size_t i = 0; i < probes; ++i) {
    const auto psi = random_qubit(rng);
    for (Octant d : core::all_octants()) {
      const auto ideal = core::outcome_distribution(psi, 1, d);
      for (std::size_t station : {1u, 2u}) {
        const auto s = device.setting(station, d);
        const auto p = core::outcome_distribution(psi, 1, s.basis);
        for (int k = 0; k < 2; ++k) {
          r.station_max_error = std::max(r.station_max_error, std::abs(p[k ^ s.flip] - ideal[k]));
        }
      }
    }
  }
  r.station_probes = probes;

  if (data_dir) r.fixture_mismatches = count_fixture_mismatches(*data_dir);
  r.timing = hw::timing_check(budget);

  // Spectrum in the Bell basis, largest first.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(hw::noisy_source_state(hw::NoiseParams::experimental()).matrix(),
                                                     Eigen::EigenvaluesOnly);
  for (int i = 0; i < 4; ++i) r.noise_spectrum[static_cast<std::size_t>(i)] = es.eigenvalues()(3 - i);
  return r;
}

}  // namespace qline::analysis
