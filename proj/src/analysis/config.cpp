#include "qline/analysis/config.hpp"

#include <fstream>
#include <set>
#include <stdexcept>

namespace qline::analysis {

namespace {

using nlohmann::json;

core::Octant angle_of(const json& v) {
  if (v.is_string()) return core::parse_octant(v.get<std::string>());
  if (v.is_number_integer()) return core::Octant(v.get<int>());
  throw std::invalid_argument("config: angles are octant names or integers");
}

protocol::Bit bit_of(const json& v) {
  if (!v.is_number_integer() || (v.get<int>() != 0 && v.get<int>() != 1)) {
    throw std::invalid_argument("config: input bits must be 0 or 1");
  }
  return static_cast<protocol::Bit>(v.get<int>());
}

std::uint64_t count_of(const json& v, const char* what) {
  if (!v.is_number_unsigned()) throw std::invalid_argument(std::string("config: ") + what + " must be a nonnegative integer");
  return v.get<std::uint64_t>();
}

double real_of(const json& v, const char* what) {
  if (!v.is_number()) throw std::invalid_argument(std::string("config: ") + what + " must be a number");
  return v.get<double>();
}

void only_keys(const json& j, const std::set<std::string>& allowed, const std::string& where) {
  if (!j.is_object()) throw std::invalid_argument("config: " + where + " must be an object");
  for (const auto& [k, v] : j.items()) {
    if (!allowed.contains(k)) throw std::invalid_argument("config: unknown key '" + k + "' in " + where);
  }
}

std::vector<TwoClientInputs> algorithms_of(const json& v) {
  if (v.is_string()) {
    if (v == "default") return default_algorithm_grid();
    if (v == "reference") return reference_algorithms();
    throw std::invalid_argument("config: algorithms must be 'default', 'reference' or a list");
  }
  if (!v.is_array()) throw std::invalid_argument("config: algorithms must be 'default', 'reference' or a list");
  std::vector<TwoClientInputs> out;
  for (const auto& a : v) {
    only_keys(a, {"phi1", "phi2", "x1", "x2"}, "algorithm");
    if (!a.contains("phi1") || !a.contains("phi2")) throw std::invalid_argument("config: algorithm needs phi1 and phi2");
    out.push_back({angle_of(a["phi1"]), angle_of(a["phi2"]), a.contains("x1") ? bit_of(a["x1"]) : protocol::Bit{0},
                   a.contains("x2") ? bit_of(a["x2"]) : protocol::Bit{0}});
  }
  return out;
}

}  // namespace

RunConfig parse_config(const json& j) {
  only_keys(j, {"mode", "shots", "seed", "algorithms", "noise", "grids", "client_counts", "hw_probes", "data_dir"},
            "config");
  RunConfig rc;
  auto& c = rc.experiment;
  c.algorithms = default_algorithm_grid();
  if (j.contains("mode")) {
    if (!j["mode"].is_string()) throw std::invalid_argument("config: mode must be a string");
    c.mode = parse_mode(j["mode"].get<std::string>());
  }
  if (j.contains("shots")) c.shots = count_of(j["shots"], "shots");
  if (j.contains("seed")) c.seed = count_of(j["seed"], "seed");
  if (j.contains("algorithms")) c.algorithms = algorithms_of(j["algorithms"]);
  if (j.contains("noise")) {
    const auto& n = j["noise"];
    only_keys(n, {"v", "lambda", "pc_phase_offset"}, "noise");
    if (n.contains("v")) c.noise.v = real_of(n["v"], "noise.v");
    if (n.contains("lambda")) c.noise.lambda = real_of(n["lambda"], "noise.lambda");
    if (n.contains("pc_phase_offset")) c.noise.pc_phase_offset = real_of(n["pc_phase_offset"], "noise.pc_phase_offset");
  }
  if (j.contains("grids")) {
    if (!j["grids"].is_array()) throw std::invalid_argument("config: grids must be a list");
    c.grids.clear();
    for (const auto& g : j["grids"]) {
      if (!g.is_string()) throw std::invalid_argument("config: grid names are strings");
      c.grids.push_back(security::parse_blindness_grid(g.get<std::string>()));
    }
  }
  if (j.contains("client_counts")) {
    if (!j["client_counts"].is_array()) throw std::invalid_argument("config: client_counts must be a list");
    c.client_counts.clear();
    for (const auto& n : j["client_counts"]) c.client_counts.push_back(count_of(n, "client count"));
  }
  if (j.contains("hw_probes")) rc.hw_probes = count_of(j["hw_probes"], "hw_probes");
  if (j.contains("data_dir")) {
    if (!j["data_dir"].is_string()) throw std::invalid_argument("config: data_dir must be a string");
    rc.data_dir = j["data_dir"].get<std::string>();
  }
  c.validate();
  return rc;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config: cannot open " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("config: ") + e.what());
  }
  return parse_config(j);
}

nlohmann::json to_json(const ExperimentConfig& c) {
  json algos = json::array();
  for (const auto& a : c.algorithms) {
    algos.push_back({{"phi1", core::to_string(a.phi1)}, {"phi2", core::to_string(a.phi2)}, {"x1", a.x1}, {"x2", a.x2}});
  }
  json grids = json::array();
  for (auto g : c.grids) grids.push_back(security::to_string(g));
  return {{"mode", to_string(c.mode)},
          {"shots", c.shots},
          {"seed", c.seed},
          {"algorithms", algos},
          {"noise", {{"v", c.noise.v}, {"lambda", c.noise.lambda}, {"pc_phase_offset", c.noise.pc_phase_offset}}},
          {"grids", grids},
          {"client_counts", c.client_counts}};
}

}  // namespace qline::analysis
