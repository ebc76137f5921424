#include "qline/security/views.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "qline/core/gates.hpp"
#include "qline/protocol/crsr.hpp"

namespace qline::security {

namespace {

constexpr double kKeyResolution = 1e10;

long long rounded(double x) {
  const long long k = std::llround(x * kKeyResolution);
  return k == 0 ? 0 : k;  // no negative zero
}

std::vector<double> weights_or_uniform(std::span<const double> w) {
  if (w.empty()) return std::vector<double>(8, 1.0 / 8);
  if (w.size() != 8) throw std::invalid_argument("enumerate_views: one weight per octant");
  return {w.begin(), w.end()};
}

}  // namespace

std::string ViewRecord::key() const {
  std::ostringstream os;
  const auto& m = client1_output.matrix();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      os << rounded(m(i, j).real()) << ',' << rounded(m(i, j).imag()) << ';';
    }
  }
  os << "c=" << correction.value();
  return os.str();
}

SimulatedView simulator_crsr(std::span<const Octant> malicious, const DensityMatrix& rho,
                             const std::function<DensityMatrix(const DensityMatrix&)>& ideal, Octant honest_theta) {
  const DensityMatrix rotated = ideal(rho);
  Octant correction = -honest_theta;
  for (Octant t : malicious) correction -= t;
  return {honest_theta, ideal_rsr(honest_theta, rotated), correction};
}

SimulatedView simulator_crsr(std::span<const Octant> malicious, const DensityMatrix& rho,
                             const std::function<DensityMatrix(const DensityMatrix&)>& ideal, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> oct(0, 7);
  return simulator_crsr(malicious, rho, ideal, Octant(oct(rng)));
}

ViewRecord view_for(World world, const ViewProbe& probe, Octant honest_theta) {
  if (world == World::Real) {
    std::vector<Octant> angles{honest_theta};
    angles.insert(angles.end(), probe.malicious.begin(), probe.malicious.end());
    auto res = protocol::run_crsr_with_angles(probe.theta, probe.rho, angles);
    return {probe.theta, probe.label, res.after_client.front(), res.theta_prime, world};
  }
  const auto ideal = [&](const DensityMatrix& r) { return ideal_rsr(probe.theta, r); };
  auto sim = simulator_crsr(probe.malicious, probe.rho, ideal, honest_theta);
  return {probe.theta, probe.label, sim.client1_output, sim.correction, world};
}

ViewDistribution enumerate_views(World world, const ViewProbe& probe, std::span<const double> honest_weights) {
  const auto w = weights_or_uniform(honest_weights);
  ViewDistribution out;
  for (Octant t1 : core::all_octants()) {
    const double p = w[static_cast<std::size_t>(t1.value())];
    if (p == 0.0) continue;
    out[view_for(world, probe, t1).key()] += p;
  }
  return out;
}

double statistical_distance(const ViewDistribution& p, const ViewDistribution& q) {
  double total = 0.0;
  for (const auto& [k, pk] : p) {
    const auto it = q.find(k);
    total += std::abs(pk - (it == q.end() ? 0.0 : it->second));
  }
  for (const auto& [k, qk] : q) {
    if (!p.contains(k)) total += std::abs(qk);
  }
  return total / 2;
}

std::vector<std::pair<std::string, DensityMatrix>> pauli_probe_states() {
  const double s = 1 / std::sqrt(2.0);
  const core::Complex i(0, 1);
  const std::vector<std::pair<std::string, core::Ket2>> kets{
      {"|0>", core::Ket2(1, 0)},      {"|1>", core::Ket2(0, 1)},      {"|+>", core::Ket2(s, s)},
      {"|->", core::Ket2(s, -s)},     {"|+i>", core::Ket2(s, s * i)}, {"|-i>", core::Ket2(s, -s * i)}};
  std::vector<std::pair<std::string, DensityMatrix>> out;
  for (const auto& [label, ket] : kets) {
    out.emplace_back(label, DensityMatrix::from_pure(core::StateVector::from_ket(ket)));
  }
  return out;
}

SecuritySweep crsr_security_sweep(std::span<const std::size_t> client_counts) {
  SecuritySweep sweep;
  const auto probes = pauli_probe_states();
  for (std::size_t n : client_counts) {
    if (n < 1) throw std::invalid_argument("crsr_security_sweep: needs an honest client");
    const std::size_t assignments = std::size_t{1} << (3 * (n - 1));
    for (Octant theta : core::all_octants()) {
      for (const auto& [label, rho] : probes) {
        for (std::size_t a = 0; a < assignments; ++a) {
          ViewProbe probe{theta, label, rho, {}};
          for (std::size_t j = 0; j + 1 < n; ++j) {
            probe.malicious.emplace_back(static_cast<int>((a >> (3 * j)) & 7U));
          }
          const double d = statistical_distance(enumerate_views(World::Real, probe),
                                                enumerate_views(World::Ideal, probe));
          if (d != 0.0) ++sweep.unequal;
          sweep.max_distance = std::max(sweep.max_distance, d);
          sweep.verdicts.push_back({std::move(probe), d});
        }
      }
    }
  }
  return sweep;
}

}  // namespace qline::security
