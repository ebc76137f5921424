#pragma once

#include <map>
#include <optional>
#include <vector>

#include "qline/hw/noise.hpp"
#include "qline/mbqc/bqc.hpp"
#include "qline/protocol/parties.hpp"

namespace qline::protocol {

struct MultiClientOptions {
  /// The source emits the entangled graph state; otherwise the server
  /// prepares |+> states and entangles after the line.
  bool entangle_before = false;
  /// Fold theta' into the measurement angles instead of a physical Rz(theta').
  bool fuse_theta_prime = false;
  /// All qubits traverse the line together; otherwise one qubit at a time.
  /// Only the transcript differs.
  bool batched = true;
  /// Noisy pair source; requires entangle_before on a two-vertex graph.
  std::optional<hw::NoiseParams> noise;
  bool record_states = false;
  /// Client that contributes phi (default: the last client).
  std::optional<std::size_t> phi_owner;
  /// Owner of each input vertex (default: client 1).
  std::map<Vertex, std::size_t> input_owner;
  /// Designated receiver of each quantum output (default: client 1).
  std::map<Vertex, std::size_t> output_owner;
  /// Optional per-client behaviours, index j-1; nullptr means honest.
  std::vector<ClientBehavior*> behaviors;
};

struct MultiClientResult {
  mbqc::BqcResult bqc;
  /// theta' sent per vertex; empty when fused.
  std::map<Vertex, Octant> theta_primes;
};

/// Full multi-client run: every resource qubit crosses the line once and
/// collects all client rotations, then the orchestrator drives the
/// measurement rounds with the server.
MultiClientResult run_multi_client(const mbqc::MeasurementGraph& g, const SessionSecrets& secrets, mbqc::Server& server,
                                   const MultiClientOptions& options = {});

/// Exact distribution of the decrypted classical output for fixed secrets.
std::map<std::vector<Bit>, double> exact_multi_client_distribution(const mbqc::MeasurementGraph& g,
                                                                   const SessionSecrets& secrets,
                                                                   const core::MeasurementDevice& device,
                                                                   const MultiClientOptions& options = {});

}  // namespace qline::protocol
