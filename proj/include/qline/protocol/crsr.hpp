#pragma once

#include <random>
#include <span>
#include <vector>

#include "qline/protocol/parties.hpp"
#include "qline/protocol/transcript.hpp"

namespace qline::protocol {

struct CrsrResult {
  core::DensityMatrix final_state;
  std::vector<Octant> client_thetas;
  Octant theta_prime;
  /// State leaving each client, index j-1 for client j.
  std::vector<core::DensityMatrix> after_client;
  Transcript transcript;
};

/// One qubit along the line: every client samples theta_j and rotates, the
/// orchestrator sends theta' = theta - sum theta_j, the server applies Rz(theta').
CrsrResult run_crsr(std::size_t n_clients, Octant theta, const core::DensityMatrix& rho, std::mt19937_64& rng);

/// Same with the clients' angles fixed, and optionally non-default client
/// behaviours (nullptr entries behave honestly).
CrsrResult run_crsr_with_angles(Octant theta, const core::DensityMatrix& rho, std::span<const Octant> client_thetas,
                                std::span<ClientBehavior* const> behaviors = {});

}  // namespace qline::protocol
