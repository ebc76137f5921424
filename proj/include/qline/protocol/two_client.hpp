#pragma once

#include <map>
#include <memory>
#include <optional>

#include "qline/hw/feed_forward.hpp"
#include "qline/hw/noise.hpp"
#include "qline/mbqc/server.hpp"
#include "qline/protocol/parties.hpp"
#include "qline/protocol/transcript.hpp"

namespace qline::protocol {

/// The two-qubit algorithm: Alice's input bits and Bob's angles.
struct TwoClientInputs {
  Octant phi1;
  Octant phi2;
  Bit x1 = 0;
  Bit x2 = 0;
};

struct SessionOptions {
  /// Noisy source and Pockels-cell offset; nullopt for the ideal experiment.
  std::optional<hw::NoiseParams> noise;
  bool record_states = false;
};

struct TwoClientResult {
  Bit m1_true = 0;
  Bit m2_true = 0;
  Octant delta1;
  Octant delta2;
  Octant delta2_plus;
  Octant delta2_minus;
  hw::FfOutput feed_forward;
  Transcript transcript;
};

/// Measurement stations matching the options: exact bases when noiseless,
/// the optical chain with the Pockels-cell offset otherwise.
std::unique_ptr<core::MeasurementDevice> make_device(const SessionOptions& options);

/// Two clients on the two-chain. Client 1 (Alice) owns x, client 2 (Bob)
/// owns phi; both rotate both qubits. The orchestrator picks delta2 through
/// the feed-forward circuit from the first reported outcome.
TwoClientResult run_two_client_session(const TwoClientInputs& in, const SessionSecrets& secrets, mbqc::Server& server,
                                       const SessionOptions& options = {});

/// Draws fresh secrets from the clients' generators and samples outcomes
/// with the server's generator.
TwoClientResult sample_two_client_session(const TwoClientInputs& in, PartyRngs& rngs, const core::MeasurementDevice& device,
                                          const SessionOptions& options = {});

/// Secrets for two clients where client 1 holds the aggregate values and
/// client 2 holds zeros; the session only depends on the aggregate.
SessionSecrets two_client_secrets(const TwoClientInputs& in, Octant theta1, Octant theta2, Bit r1, Bit r2);

/// Exact joint distribution of (m1_true, m2_true), index 2*m1 + m2, for fixed secrets.
std::array<double, 4> exact_two_client_distribution(const TwoClientInputs& in, const SessionSecrets& secrets,
                                                    const core::MeasurementDevice& device,
                                                    const SessionOptions& options = {});

}  // namespace qline::protocol
