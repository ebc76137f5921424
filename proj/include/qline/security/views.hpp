#pragma once

#include <map>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "qline/security/ideal.hpp"

namespace qline::security {

enum class World { Real, Ideal };

/// What the distinguisher sees for one run of collaborative state rotation
/// with client 1 honest: the state client 1 passes on and the correction
/// angle announced to the server.
struct ViewRecord {
  Octant theta;
  std::string probe;
  DensityMatrix client1_output;
  Octant correction;
  World world;

  /// Canonical key: matrix entries rounded at 1e-10 plus the correction.
  /// Independent of theta, the probe label and the world tag.
  std::string key() const;
};

/// Canonical key -> probability.
using ViewDistribution = std::map<std::string, double>;

/// Fixed part of one comparison: the orchestrator's angle, the input state
/// and the malicious clients' angles theta_2..theta_n.
struct ViewProbe {
  Octant theta;
  std::string label;
  DensityMatrix rho;
  std::vector<Octant> malicious;
};

struct SimulatedView {
  Octant honest_theta;
  DensityMatrix client1_output;
  Octant correction;
};

/// Simulator for the honest client: query the ideal rotation with rho,
/// apply Rz(theta_1) with a self-chosen theta_1 and announce
/// -(theta_1 + sum of malicious angles).
SimulatedView simulator_crsr(std::span<const Octant> malicious, const DensityMatrix& rho,
                             const std::function<DensityMatrix(const DensityMatrix&)>& ideal, Octant honest_theta);
SimulatedView simulator_crsr(std::span<const Octant> malicious, const DensityMatrix& rho,
                             const std::function<DensityMatrix(const DensityMatrix&)>& ideal, std::mt19937_64& rng);

/// View of one run with the honest angle fixed.
ViewRecord view_for(World world, const ViewProbe& probe, Octant honest_theta);

/// Exact view distribution over the honest angle. `honest_weights` has one
/// weight per octant; empty means uniform.
ViewDistribution enumerate_views(World world, const ViewProbe& probe, std::span<const double> honest_weights = {});

/// 1/2 sum |p - q| over the union of keys.
double statistical_distance(const ViewDistribution& p, const ViewDistribution& q);

/// The six Pauli eigenstates |0>, |1>, |+>, |->, |+i>, |-i>.
std::vector<std::pair<std::string, DensityMatrix>> pauli_probe_states();

struct ProbeVerdict {
  ViewProbe probe;
  double distance;
};

struct SecuritySweep {
  std::vector<ProbeVerdict> verdicts;
  std::size_t unequal = 0;
  double max_distance = 0.0;
};

/// Real against ideal for every theta, every Pauli probe, each client count
/// and every assignment of the malicious angles.
SecuritySweep crsr_security_sweep(std::span<const std::size_t> client_counts);

}  // namespace qline::security
