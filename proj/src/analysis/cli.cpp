#include "qline/analysis/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "qline/analysis/chsh.hpp"
#include "qline/analysis/config.hpp"
#include "qline/analysis/hw_check.hpp"
#include "qline/hw/noise.hpp"
#include "qline/security/report.hpp"

namespace qline::analysis {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;
using Files = std::map<std::string, std::string>;

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

void put_distribution(std::ostringstream& csv, const TwoClientInputs& in, const std::string& source,
                      const Distribution& d) {
  const auto sigma = d.sigma();
  for (std::size_t k = 0; k < d.size(); ++k) {
    csv << label(in) << ',' << core::to_string(in.phi1) << ',' << core::to_string(in.phi2) << ',' << int(in.x1) << ','
        << int(in.x2) << ',' << source << ',' << d.labels[k] << ',' << num(d.probabilities[k]) << ',' << num(sigma[k])
        << '\n';
  }
}

json matrix_json(const std::vector<std::vector<double>>& m) {
  json out = json::array();
  for (const auto& row : m) out.push_back(row);
  return out;
}

void put_confusion(std::ostringstream& csv, json& summary, const std::string& kind,
                   const std::vector<std::vector<double>>& m) {
  double diag = 0.0;
  std::size_t close = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    diag = std::max(diag, m[i][i]);
    for (std::size_t j = 0; j < m.size(); ++j) {
      csv << kind << ',' << i << ',' << j << ',' << num(m[i][j]) << '\n';
      if (m[i][j] <= 0.05) ++close;
    }
  }
  summary["confusion"][kind] = {{"matrix", matrix_json(m)}, {"max_diagonal", diag}, {"cells_within_0.05", close}};
}

Files correctness_files(const RunConfig& rc) {
  const auto& cfg = rc.experiment;
  const auto rows = run_correctness(cfg);
  std::ostringstream csv;
  csv << "algorithm,phi1,phi2,x1,x2,source,outcome,probability,sigma\n";
  json per = json::array();
  std::vector<Distribution> ideal, noisy, sampled;
  for (const auto& r : rows) {
    put_distribution(csv, r.algorithm, "ideal", r.ideal);
    ideal.push_back(r.ideal);
    json j{{"algorithm", label(r.algorithm)}, {"ideal_from_uniform", r.ideal_from_uniform}};
    if (r.noisy) {
      put_distribution(csv, r.algorithm, "noisy", *r.noisy);
      noisy.push_back(*r.noisy);
      j["noisy_vs_ideal"] = *r.noisy_vs_ideal;
      j["noisy_from_uniform"] = distance_from_uniform(*r.noisy);
    }
    if (r.sampled) {
      put_distribution(csv, r.algorithm, "sampled", *r.sampled);
      sampled.push_back(*r.sampled);
      j["sampled_vs_ideal"] = *r.sampled_vs_ideal;
      j["sampled_vs_noisy"] = *r.sampled_vs_noisy;
      j["sampled_from_uniform"] = distance_from_uniform(*r.sampled);
    }
    per.push_back(j);
  }
  json summary{{"config", to_json(cfg)}, {"algorithms", per}};
  Files files{{"correctness.csv", csv.str()}};
  if (rows.size() >= 2) {
    std::ostringstream conf;
    conf << "kind,row,column,distance\n";
    if (cfg.mode == Mode::Ideal) put_confusion(conf, summary, "ideal-ideal", confusion_matrix(ideal, ideal));
    if (!noisy.empty()) put_confusion(conf, summary, "noisy-noisy", confusion_matrix(noisy, noisy));
    if (!sampled.empty()) put_confusion(conf, summary, "sampled-noisy", confusion_matrix(sampled, noisy));
    files["confusion.csv"] = conf.str();
  }
  files["correctness_summary.json"] = summary.dump(2) + "\n";
  return files;
}

Files blindness_files(const RunConfig& rc) {
  const auto& cfg = rc.experiment;
  std::vector<std::pair<std::string, std::optional<hw::NoiseParams>>> models{{"none", std::nullopt}};
  if (cfg.mode != Mode::Ideal) {
    if (auto n = effective_noise(cfg.noise)) models.emplace_back("model", n);
  }
  std::ostringstream csv;
  csv << "grid,view,noise,fidelity_with_mixed,entropy,trace_distance_to_mixed,max_conditional_distance,"
         "experimental_fidelity,experimental_entropy\n";
  json out = json::array();
  for (auto grid : cfg.grids) {
    const auto ref = security::experimental_reference(grid);
    for (const auto& [name, noise] : models) {
      std::vector<std::pair<std::string, security::BlindnessReport>> reports{
          {"fixed-angles", security::server_view_blindness(grid, noise)}};
      double worst = 0.0;
      for (const auto& in : cfg.algorithms) {
        worst = std::max(worst, security::server_view_blindness(grid, in, noise).max_conditional_distance);
      }
      for (const auto& [view, r] : reports) {
        csv << security::to_string(grid) << ',' << view << ',' << name << ',' << num(r.fidelity_with_mixed) << ','
            << num(r.entropy) << ',' << num(r.trace_distance_to_mixed) << ',' << num(r.max_conditional_distance)
            << ',' << num(ref.fidelity) << ',' << (ref.entropy ? num(*ref.entropy) : "") << '\n';
        auto j = security::to_json(r);
        j["noise"] = name;
        j["protocol_view_max_conditional_distance"] = worst;
        out.push_back(j);
      }
    }
  }
  json summary{{"config", to_json(cfg)}, {"reports", out}};
  return {{"blindness.csv", csv.str()}, {"blindness_summary.json", summary.dump(2) + "\n"}};
}

Files security_files(const RunConfig& rc) {
  const auto& cfg = rc.experiment;
  const auto sweep = security::crsr_security_sweep(cfg.client_counts);
  const core::IdealDevice device;
  std::vector<std::pair<TwoClientInputs, std::array<std::array<double, 8>, 2>>> deltas;
  for (const auto& in : cfg.algorithms) deltas.emplace_back(in, security::delta_marginals(in, device));
  std::vector<security::BlindnessReport> blind;
  for (auto g : cfg.grids) blind.push_back(security::server_view_blindness(g));
  const auto report = security::security_report(sweep, deltas, blind);
  std::ostringstream csv;
  csv << "clients,theta,probe,malicious,distance,equal\n";
  for (const auto& v : sweep.verdicts) {
    std::string mal;
    for (auto t : v.probe.malicious) mal += (mal.empty() ? "" : " ") + core::to_string(t);
    csv << v.probe.malicious.size() + 1 << ',' << core::to_string(v.probe.theta) << ',' << v.probe.label << ','
        << mal << ',' << num(v.distance) << ',' << (v.distance == 0.0 ? "yes" : "no") << '\n';
  }
  return {{"security.csv", csv.str()}, {"security_report.json", report.dump(2) + "\n"}};
}

Files hw_files(const RunConfig& rc) {
  const auto r = hw_check(rc.hw_probes, rc.experiment.seed, rc.data_dir);
  std::ostringstream csv;
  csv << "check,value,pass\n";
  const auto row = [&](const std::string& name, const std::string& value, bool pass) {
    csv << name << ',' << value << ',' << (pass ? "yes" : "no") << '\n';
  };
  row("ff_valid_inputs", std::to_string(r.ff_valid_inputs), r.ff_valid_inputs == 256);
  row("ff_rejected_patterns", std::to_string(r.ff_rejected_patterns), r.ff_rejected_patterns == 256);
  row("ff_mismatches", std::to_string(r.ff_mismatches), r.ff_mismatches == 0);
  row("station_max_error", num(r.station_max_error), r.station_max_error < 1e-9);
  if (r.fixture_mismatches) row("fixture_mismatches", std::to_string(*r.fixture_mismatches), *r.fixture_mismatches == 0);
  row("timing_slack_ns", num(r.timing.slack_ns), r.timing.pass);
  json j{{"ff", {{"valid_inputs", r.ff_valid_inputs}, {"rejected_patterns", r.ff_rejected_patterns},
                 {"mismatches", r.ff_mismatches}}},
         {"stations", {{"probes", r.station_probes}, {"max_error", r.station_max_error}}},
         {"timing", {{"pass", r.timing.pass},
                     {"available_ns", r.timing.available_ns},
                     {"required_ns", r.timing.required_ns},
                     {"slack_ns", r.timing.slack_ns},
                     {"t0_ns", r.timing.markers.t0_ns},
                     {"t1_ns", r.timing.markers.t1_ns},
                     {"t2_ns", r.timing.markers.t2_ns}}},
         {"noise_spectrum", r.noise_spectrum}};
  if (r.fixture_mismatches) j["fixture_mismatches"] = *r.fixture_mismatches;
  return {{"hw_check.csv", csv.str()}, {"hw_check.json", j.dump(2) + "\n"}};
}

Files chsh_files(const RunConfig& rc) {
  const auto ideal = chsh_value(core::DensityMatrix::from_pure(hw::psi_minus()));
  const auto model = chsh_value(hw::noisy_source_state(rc.experiment.noise));
  const double measured = 2.752;
  std::ostringstream csv;
  csv << "state,chsh\nideal," << num(ideal) << "\nmodel," << num(model) << "\nexperimental," << num(measured) << '\n';
  json j{{"ideal", ideal},
         {"model", model},
         {"noise", {{"v", rc.experiment.noise.v}, {"lambda", rc.experiment.noise.lambda}}},
         {"experimental", measured},
         {"classical_bound", 2.0}};
  return {{"chsh.csv", csv.str()}, {"chsh.json", j.dump(2) + "\n"}};
}

/// Writes every file to a temporary name first, then renames them all.
void commit(const fs::path& dir, const Files& files) {
  fs::create_directories(dir);
  std::vector<std::pair<fs::path, fs::path>> staged;
  try {
    for (const auto& [name, body] : files) {
      const fs::path tmp = dir / ("." + name + ".tmp");
      std::ofstream f(tmp, std::ios::binary);
      f << body;
      f.close();
      if (!f) throw std::runtime_error("cannot write " + tmp.string());
      staged.emplace_back(tmp, dir / name);
    }
  } catch (...) {
    for (const auto& [tmp, final_path] : staged) fs::remove(tmp);
    throw;
  }
  for (const auto& [tmp, final_path] : staged) fs::rename(tmp, final_path);
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-client blind quantum computation: simulations and checks"};
  app.require_subcommand(1);
  std::string config_path, out_dir = "results", mode;
  std::optional<std::uint64_t> seed, shots;
  app.add_option("--config", config_path, "JSON config file")->check(CLI::ExistingFile);
  app.add_option("--seed", seed, "Root seed");
  app.add_option("--shots", shots, "Shots per algorithm in sampled mode");
  app.add_option("--out", out_dir, "Output directory");
  app.add_option("--mode", mode, "ideal, noisy or sampled")->check(CLI::IsMember({"ideal", "noisy", "sampled"}));
  std::map<std::string, Files (*)(const RunConfig&)> commands{{"correctness", correctness_files},
                                                              {"blindness", blindness_files},
                                                              {"security", security_files},
                                                              {"hw-check", hw_files},
                                                              {"chsh", chsh_files}};
  for (const auto& [name, fn] : commands) app.add_subcommand(name)->fallthrough();
  app.fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 1;
  }

  try {
    RunConfig rc = config_path.empty() ? parse_config(json::object()) : load_config(config_path);
    if (seed) rc.experiment.seed = *seed;
    if (shots) rc.experiment.shots = *shots;
    if (!mode.empty()) rc.experiment.mode = parse_mode(mode);
    rc.experiment.validate();
    const auto* sub = app.get_subcommands().front();
    const Files files = commands.at(sub->get_name())(rc);
    commit(out_dir, files);
    for (const auto& [name, body] : files) out << (fs::path(out_dir) / name).string() << '\n';
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace qline::analysis
