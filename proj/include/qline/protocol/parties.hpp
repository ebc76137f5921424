#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "qline/core/quantum_state.hpp"
#include "qline/hw/noise.hpp"
#include "qline/mbqc/pattern.hpp"

namespace qline::protocol {

using core::Octant;
using mbqc::Bit;
using mbqc::Vertex;

/// One client's one-time pads: a rotation and an outcome pad per vertex.
struct ClientSecrets {
  std::map<Vertex, Octant> theta;
  std::map<Vertex, Bit> r;
};

/// Secrets of one multi-client session. theta(v) and r(v) aggregate over
/// clients; when the orchestrator holds its own theta(v), the clients'
/// rotations are undone by the theta' correction instead.
struct SessionSecrets {
  std::vector<ClientSecrets> clients;
  std::map<Vertex, Bit> x;
  std::map<Vertex, Octant> phi;
  std::optional<std::map<Vertex, Octant>> orchestrator_theta;

  Octant client_theta_sum(Vertex v) const;
  Bit r_total(Vertex v) const;
  /// Rotation the orchestrator targets: its own theta if set, else the client sum.
  Octant theta_target(Vertex v) const;
  /// Pattern secrets as seen by the orchestrator. With `fused`, theta is the
  /// client sum (no separate correction rotation); otherwise theta_target.
  mbqc::PatternSecrets pattern(const mbqc::MeasurementGraph& g, bool fused) const;
};

/// Independent generators per party, all derived from one root seed.
class PartyRngs {
 public:
  PartyRngs(std::uint64_t root_seed, std::size_t n_clients);

  std::size_t client_count() const { return clients_.size(); }
  /// Clients are numbered from 1.
  std::mt19937_64& client(std::size_t j);
  std::mt19937_64& server() { return server_; }
  std::mt19937_64& orchestrator() { return orchestrator_; }

 private:
  std::vector<std::mt19937_64> clients_;
  std::mt19937_64 server_;
  std::mt19937_64 orchestrator_;
};

/// Each client draws theta_j(v) uniformly from the octants and r_j(v)
/// uniformly from {0,1} for every vertex. With `orchestrator_theta` the
/// orchestrator also draws its own theta(v).
SessionSecrets sample_session_secrets(const mbqc::MeasurementGraph& g, std::size_t n_clients,
                                      std::map<Vertex, Bit> x, std::map<Vertex, Octant> phi, PartyRngs& rngs,
                                      bool orchestrator_theta = false);

/// The entangled pair CZ|++>, or its noisy version when noise is given.
core::QuantumState source_emit(const std::optional<hw::NoiseParams>& noise);

/// Rz(theta_i) on qubit i. Throws std::invalid_argument on arity mismatch.
core::QuantumState client_rotate_layer(const core::QuantumState& state, std::span<const Octant> thetas);

/// theta' = theta - sum_j theta_j.
Octant orchestrator_theta_prime(Octant theta, std::span<const Octant> client_thetas);

/// What a client does with the travelling qubits. Honest clients rotate by
/// their own angles; adversarial ones may substitute anything.
class ClientBehavior {
 public:
  virtual ~ClientBehavior() = default;
  virtual core::QuantumState forward(const core::QuantumState& in, std::span<const Octant> thetas) {
    return client_rotate_layer(in, thetas);
  }
};

/// Party names used in transcripts.
std::string client_name(std::size_t j);
inline constexpr const char* kServer = "server";
inline constexpr const char* kSource = "source";
inline constexpr const char* kOrchestrator = "orchestrator";

}  // namespace qline::protocol
