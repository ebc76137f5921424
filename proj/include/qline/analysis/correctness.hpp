#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qline/analysis/distribution.hpp"
#include "qline/hw/noise.hpp"
#include "qline/protocol/two_client.hpp"
#include "qline/security/blindness.hpp"

namespace qline::analysis {

using protocol::TwoClientInputs;

enum class Mode { Ideal, Noisy, Sampled };

std::string to_string(Mode m);
/// Throws std::invalid_argument on an unknown name.
Mode parse_mode(const std::string& name);

struct ExperimentConfig {
  Mode mode = Mode::Ideal;
  std::vector<TwoClientInputs> algorithms;
  std::uint64_t shots = 100000;
  std::uint64_t seed = 1;
  /// Model used by the noisy mode and by sampling. Noiseless parameters
  /// make the sampled mode draw from the ideal experiment.
  hw::NoiseParams noise = hw::NoiseParams::experimental();
  std::vector<security::BlindnessGrid> grids{security::BlindnessGrid::FirstQubit,
                                             security::BlindnessGrid::SecondQubit,
                                             security::BlindnessGrid::FullState};
  std::vector<std::size_t> client_counts{2, 3};

  /// Throws std::invalid_argument on an empty algorithm list, zero shots in
  /// sampled mode or invalid noise parameters.
  void validate() const;
};

/// (phi1, phi2) in {0, pi/4, pi/2, 3pi/4}^2, each with the four input pairs x.
std::vector<TwoClientInputs> default_algorithm_grid();
/// Ten tuples: one fixed algorithm with all four inputs plus six others.
std::vector<TwoClientInputs> reference_algorithms();
std::string label(const TwoClientInputs& in);

/// nullopt for noiseless parameters, so that the exact bases are used.
std::optional<hw::NoiseParams> effective_noise(const hw::NoiseParams& p);

/// Exact distribution of (m1, m2) averaged over all 256 aggregated secrets.
Distribution exact_distribution(const TwoClientInputs& in, const std::optional<hw::NoiseParams>& noise);

/// Full sessions with per-party generators seeded from `seed`.
Distribution sampled_distribution(const TwoClientInputs& in, const std::optional<hw::NoiseParams>& noise,
                                  std::uint64_t shots, std::uint64_t seed);

struct CorrectnessRow {
  TwoClientInputs algorithm;
  Distribution ideal;
  std::optional<Distribution> noisy;
  std::optional<Distribution> sampled;
  double ideal_from_uniform = 0.0;
  std::optional<double> noisy_vs_ideal;
  std::optional<double> sampled_vs_ideal;
  std::optional<double> sampled_vs_noisy;
};

/// Ideal always; the noise model in noisy and sampled modes; sampling in
/// sampled mode. Sampling for algorithm i uses seed (config.seed, i).
std::vector<CorrectnessRow> run_correctness(const ExperimentConfig& config);

/// Seed of the i-th sampled cell.
std::uint64_t cell_seed(std::uint64_t seed, std::size_t index);

/// M[i][j] = avg_distance(rows[i], columns[j]).
std::vector<std::vector<double>> confusion_matrix(const std::vector<Distribution>& rows,
                                                  const std::vector<Distribution>& columns);

}  // namespace qline::analysis
