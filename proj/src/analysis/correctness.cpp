#include "qline/analysis/correctness.hpp"

#include <stdexcept>

#include "qline/core/measurement_device.hpp"

namespace qline::analysis {

using core::Octant;

std::string to_string(Mode m) {
  switch (m) {
    case Mode::Ideal: return "ideal";
    case Mode::Noisy: return "noisy";
    case Mode::Sampled: return "sampled";
  }
  return "?";
}

Mode parse_mode(const std::string& name) {
  for (auto m : {Mode::Ideal, Mode::Noisy, Mode::Sampled}) {
    if (to_string(m) == name) return m;
  }
  throw std::invalid_argument("unknown mode: " + name);
}

void ExperimentConfig::validate() const {
  if (algorithms.empty()) throw std::invalid_argument("config: no algorithms");
  if (mode == Mode::Sampled && shots == 0) throw std::invalid_argument("config: sampled mode needs shots > 0");
  for (const auto& a : algorithms) {
    if (a.x1 > 1 || a.x2 > 1) throw std::invalid_argument("config: input bits must be 0 or 1");
  }
  if (client_counts.empty()) throw std::invalid_argument("config: no client counts");
  for (auto n : client_counts) {
    if (n < 1 || n > 4) throw std::invalid_argument("config: client counts must lie in 1..4");
  }
  noise.validate();
}

std::vector<TwoClientInputs> default_algorithm_grid() {
  std::vector<TwoClientInputs> out;
  for (int p1 = 0; p1 < 4; ++p1) {
    for (int p2 = 0; p2 < 4; ++p2) {
      for (int x = 0; x < 4; ++x) {
        out.push_back({Octant(p1), Octant(p2), static_cast<protocol::Bit>(x >> 1), static_cast<protocol::Bit>(x & 1)});
      }
    }
  }
  return out;
}

std::vector<TwoClientInputs> reference_algorithms() {
  return {{Octant(1), Octant(1), 0, 0}, {Octant(1), Octant(1), 0, 1}, {Octant(1), Octant(1), 1, 0},
          {Octant(1), Octant(1), 1, 1}, {Octant(0), Octant(0), 0, 0}, {Octant(0), Octant(2), 0, 0},
          {Octant(2), Octant(0), 0, 1}, {Octant(2), Octant(2), 1, 0}, {Octant(3), Octant(1), 1, 1},
          {Octant(1), Octant(3), 0, 0}};
}

std::string label(const TwoClientInputs& in) {
  return core::to_string(in.phi1) + "|" + core::to_string(in.phi2) + "|" + std::to_string(in.x1) +
         std::to_string(in.x2);
}

std::optional<hw::NoiseParams> effective_noise(const hw::NoiseParams& p) {
  p.validate();
  if (p.v == 1.0 && p.pc_phase_offset == 0.0) return std::nullopt;
  return p;
}

Distribution exact_distribution(const TwoClientInputs& in, const std::optional<hw::NoiseParams>& noise) {
  const protocol::SessionOptions options{noise};
  const auto device = protocol::make_device(options);
  std::vector<double> p(4, 0.0);
  for (Octant t1 : core::all_octants()) {
    for (Octant t2 : core::all_octants()) {
      for (int r = 0; r < 4; ++r) {
        const auto secrets = protocol::two_client_secrets(in, t1, t2, static_cast<protocol::Bit>(r >> 1),
                                                          static_cast<protocol::Bit>(r & 1));
        const auto d = protocol::exact_two_client_distribution(in, secrets, *device, options);
        for (std::size_t k = 0; k < 4; ++k) p[k] += d[k] / 256;
      }
    }
  }
  return Distribution::exact(two_bit_labels(), std::move(p));
}

Distribution sampled_distribution(const TwoClientInputs& in, const std::optional<hw::NoiseParams>& noise,
                                  std::uint64_t shots, std::uint64_t seed) {
  const protocol::SessionOptions options{noise};
  const auto device = protocol::make_device(options);
  protocol::PartyRngs rngs(seed, 2);
  std::vector<std::uint64_t> counts(4, 0);
  for (std::uint64_t s = 0; s < shots; ++s) {
    const auto r = protocol::sample_two_client_session(in, rngs, *device, options);
    ++counts[static_cast<std::size_t>(2 * r.m1_true + r.m2_true)];
  }
  return Distribution::from_counts(two_bit_labels(), std::move(counts));
}

std::uint64_t cell_seed(std::uint64_t seed, std::size_t index) {
  // splitmix64 step, so neighbouring cells get unrelated streams.
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::vector<CorrectnessRow> run_correctness(const ExperimentConfig& config) {
  config.validate();
  const auto noise = effective_noise(config.noise);
  std::vector<CorrectnessRow> rows;
  for (std::size_t i = 0; i < config.algorithms.size(); ++i) {
    const auto& in = config.algorithms[i];
    CorrectnessRow row;
    row.algorithm = in;
    row.ideal = exact_distribution(in, std::nullopt);
    row.ideal_from_uniform = distance_from_uniform(row.ideal);
    if (config.mode != Mode::Ideal) {
      row.noisy = exact_distribution(in, noise);
      row.noisy_vs_ideal = avg_distance(*row.noisy, row.ideal);
    }
    if (config.mode == Mode::Sampled) {
      row.sampled = sampled_distribution(in, noise, config.shots, cell_seed(config.seed, i));
      row.sampled_vs_ideal = avg_distance(*row.sampled, row.ideal);
      row.sampled_vs_noisy = avg_distance(*row.sampled, *row.noisy);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<std::vector<double>> confusion_matrix(const std::vector<Distribution>& rows,
                                                  const std::vector<Distribution>& columns) {
  if (rows.size() < 2 || columns.size() != rows.size()) {
    throw std::invalid_argument("confusion_matrix: needs at least two algorithms on each side");
  }
  std::vector<std::vector<double>> m(rows.size(), std::vector<double>(columns.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < columns.size(); ++j) m[i][j] = avg_distance(rows[i], columns[j]);
  }
  return m;
}

}  // namespace qline::analysis
