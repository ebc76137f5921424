#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "qline/analysis/correctness.hpp"

namespace qline::analysis {

/// Settings shared by all subcommands; experiment fields plus the
/// hardware-check knobs.
struct RunConfig {
  ExperimentConfig experiment;
  std::size_t hw_probes = 20;
  std::optional<std::filesystem::path> data_dir;
};

/// Parses a JSON object. Recognized keys: mode, shots, seed, algorithms
/// ("default", "reference" or a list of {phi1, phi2, x1, x2} with angles as
/// octant names like "3pi/4" or integers in units of pi/4), noise {v,
/// lambda, pc_phase_offset}, grids, client_counts, hw_probes, data_dir.
/// Unknown keys and malformed values throw std::invalid_argument.
RunConfig parse_config(const nlohmann::json& j);
RunConfig load_config(const std::filesystem::path& path);

nlohmann::json to_json(const ExperimentConfig& c);

}  // namespace qline::analysis
