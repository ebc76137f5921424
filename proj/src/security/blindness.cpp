#include "qline/security/blindness.hpp"

#include <map>
#include <stdexcept>
#include <tuple>

#include "qline/core/metrics.hpp"
#include "qline/mbqc/bqc.hpp"
#include "qline/protocol/parties.hpp"

namespace qline::security {

namespace {

using core::QuantumState;

constexpr double kImpossible = 1e-15;

QuantumState rotated_source(const std::optional<hw::NoiseParams>& noise, Octant theta1, Octant theta2) {
  const std::array<Octant, 2> angles{theta1, theta2};
  return protocol::client_rotate_layer(protocol::source_emit(noise), angles);
}

std::unique_ptr<core::MeasurementDevice> device_for(const std::optional<hw::NoiseParams>& noise) {
  return protocol::make_device({noise});
}

/// Born weight and post-measurement state of `qubit` yielding reported bit
/// `reported`, with the measured qubit removed.
std::optional<std::pair<double, DensityMatrix>> herald(const QuantumState& s, std::size_t station, Octant delta,
                                                       const core::MeasurementDevice& device, Bit reported) {
  const auto setting = device.setting(station, delta);
  const int k = reported ^ setting.flip;
  const auto p = core::outcome_distribution(s, station, setting.basis);
  if (p[k] <= kImpossible) return std::nullopt;
  auto proj = core::project(s, station, setting.basis, k, core::Retain::Remove);
  return std::make_pair(proj.probability, core::to_density(proj.state));
}

DensityMatrix mixed(std::size_t n) { return DensityMatrix::maximally_mixed(n); }

void fill_metrics(BlindnessReport& r) {
  const auto target = mixed(r.average.qubits());
  r.fidelity_with_mixed = core::fidelity(r.average, target);
  r.entropy = core::von_neumann_entropy(r.average);
  r.trace_distance_to_mixed = core::trace_distance(r.average, target);
}

DensityMatrix scaled(const Eigen::MatrixXcd& m, double total, std::size_t qubits) {
  return DensityMatrix::trusted(qubits, m / total);
}

}  // namespace

std::string to_string(BlindnessGrid g) {
  switch (g) {
    case BlindnessGrid::FirstQubit: return "first-qubit";
    case BlindnessGrid::SecondQubit: return "second-qubit";
    case BlindnessGrid::FullState: return "full-state";
  }
  return "?";
}

BlindnessGrid parse_blindness_grid(const std::string& name) {
  for (auto g : {BlindnessGrid::FirstQubit, BlindnessGrid::SecondQubit, BlindnessGrid::FullState}) {
    if (to_string(g) == name) return g;
  }
  throw std::invalid_argument("unknown blindness grid: " + name);
}

BlindnessReport server_view_blindness(BlindnessGrid grid, const std::optional<hw::NoiseParams>& noise) {
  const auto device = device_for(noise);
  const std::size_t qubits = grid == BlindnessGrid::FullState ? 2 : 1;
  std::array<Eigen::MatrixXcd, 2> acc;
  acc.fill(Eigen::MatrixXcd::Zero(Eigen::Index{1} << qubits, Eigen::Index{1} << qubits));
  std::array<double, 2> counted{0, 0};
  for (Octant a : core::all_octants()) {
    for (Octant b : core::all_octants()) {
      switch (grid) {
        case BlindnessGrid::FullState:
          acc[0] += core::to_density(rotated_source(noise, a, b)).matrix();
          counted[0] += 1;
          break;
        case BlindnessGrid::FirstQubit:
        case BlindnessGrid::SecondQubit: {
          const bool first = grid == BlindnessGrid::FirstQubit;
          const auto s = first ? rotated_source(noise, Octant(0), a + b) : rotated_source(noise, a + b, Octant(0));
          const std::size_t station = first ? 2 : 1;
          const Octant delta = first ? Octant(6) : Octant(4);
          for (Bit m = 0; m < 2; ++m) {
            if (auto h = herald(s, station, delta, *device, m)) {
              acc[m] += h->second.matrix();
              counted[m] += 1;
            }
          }
          break;
        }
      }
    }
  }
  BlindnessReport r{grid, scaled(acc[0], counted[0], qubits)};
  r.combinations = 64;
  fill_metrics(r);
  r.max_conditional_distance = r.trace_distance_to_mixed;
  if (counted[1] > 0) {
    r.max_conditional_distance =
        std::max(r.max_conditional_distance, core::trace_distance(scaled(acc[1], counted[1], qubits), mixed(qubits)));
  }
  return r;
}

BlindnessReport server_view_blindness(BlindnessGrid grid, const protocol::TwoClientInputs& in,
                                      const std::optional<hw::NoiseParams>& noise) {
  const auto device = device_for(noise);
  const std::size_t qubits = grid == BlindnessGrid::FullState ? 2 : 1;
  const Eigen::Index dim = Eigen::Index{1} << qubits;
  // Server's classical view -> (weight, unnormalized state).
  std::map<std::tuple<int, int, int>, std::pair<double, Eigen::MatrixXcd>> buckets;
  const auto add = [&](std::tuple<int, int, int> key, double w, const Eigen::MatrixXcd& m) {
    auto [it, fresh] = buckets.try_emplace(key, 0.0, Eigen::MatrixXcd::Zero(dim, dim));
    it->second.first += w;
    it->second.second += w * m;
  };
  const double w0 = 1.0 / 256;
  for (Octant t1 : core::all_octants()) {
    for (Octant t2 : core::all_octants()) {
      for (Bit r1 = 0; r1 < 2; ++r1) {
        for (Bit r2 = 0; r2 < 2; ++r2) {
          const auto s = rotated_source(noise, t1, t2);
          const Octant delta1 = in.phi1 + t1 + Octant::pi_times(in.x1 ^ r1);
          const int d1 = delta1.value();
          if (grid == BlindnessGrid::FullState) {
            add({d1, 0, 0}, w0, core::to_density(s).matrix());
            continue;
          }
          if (grid == BlindnessGrid::FirstQubit) {
            const std::array<core::Qubit, 1> keep{1};
            add({d1, 0, 0}, w0, core::partial_trace(core::to_density(s), keep).matrix());
            continue;
          }
          const Octant a = t2 + Octant::pi_times(in.x2 ^ r2);
          for (Bit m1 = 0; m1 < 2; ++m1) {
            const auto h = herald(s, 1, delta1, *device, m1);
            if (!h) continue;
            const Bit m1_true = m1 ^ r1;
            const Octant delta2 = m1_true == 0 ? a + in.phi2 : a - in.phi2;
            add({d1, m1, delta2.value()}, w0 * h->first, h->second.matrix());
          }
        }
      }
    }
  }
  Eigen::MatrixXcd total = Eigen::MatrixXcd::Zero(dim, dim);
  double max_cond = 0.0;
  for (const auto& [key, entry] : buckets) {
    total += entry.second;
    if (entry.first <= kImpossible) continue;
    max_cond = std::max(max_cond, core::trace_distance(scaled(entry.second, entry.first, qubits), mixed(qubits)));
  }
  BlindnessReport r{grid, DensityMatrix::trusted(qubits, total)};
  r.combinations = buckets.size();
  fill_metrics(r);
  r.max_conditional_distance = max_cond;
  return r;
}

ExperimentalReference experimental_reference(BlindnessGrid grid) {
  switch (grid) {
    case BlindnessGrid::FirstQubit: return {0.99949, 0.99852};
    case BlindnessGrid::SecondQubit: return {0.99870, 0.9963};
    case BlindnessGrid::FullState: return {0.99433, 1.9836};
  }
  return {0.0, std::nullopt};
}

std::array<std::array<double, 8>, 2> delta_marginals(const protocol::TwoClientInputs& in,
                                                     const core::MeasurementDevice& device) {
  std::array<std::array<double, 8>, 2> out{};
  const double w = 1.0 / 256;
  for (Octant t1 : core::all_octants()) {
    for (Octant t2 : core::all_octants()) {
      for (Bit r1 = 0; r1 < 2; ++r1) {
        for (Bit r2 = 0; r2 < 2; ++r2) {
          const auto secrets = protocol::two_client_secrets(in, t1, t2, r1, r2);
          const auto branches = mbqc::enumerate_branches(2, [&](mbqc::OutcomeSelector& sel) {
            mbqc::HonestServer server(device, sel);
            const auto r = protocol::run_two_client_session(in, secrets, server);
            return std::make_pair(r.delta1, r.delta2);
          });
          for (const auto& b : branches) {
            out[0][static_cast<std::size_t>(b.result.first.value())] += w * b.weight;
            out[1][static_cast<std::size_t>(b.result.second.value())] += w * b.weight;
          }
        }
      }
    }
  }
  return out;
}

}  // namespace qline::security
