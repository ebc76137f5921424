#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qline/core/quantum_state.hpp"
#include "qline/mbqc/graph.hpp"
#include "qline/mbqc/pattern.hpp"
#include "qline/mbqc/server.hpp"
#include "qline/protocol/transcript.hpp"

namespace qline::mbqc {

struct BqcOptions {
  std::string client = "client";
  std::string server = "server";
  bool record_states = false;
};

struct BqcResult {
  OutcomeRecord outcomes;
  /// Decrypted outcomes m' of the measured vertices, in measurement order.
  std::vector<Bit> classical_output;
  /// Decrypted output qubits, ordered by vertex label; empty when O is empty.
  std::optional<core::QuantumState> quantum_output;
  /// Angles sent to the server, in measurement order.
  std::vector<Octant> deltas;
  protocol::Transcript transcript;
};

/// Product of |+_theta(v)> over v = 1..n, qubit v carrying vertex v.
core::StateVector prepare_client_qubits(const MeasurementGraph& g, const PatternSecrets& secrets);

/// Full single-client run: prepare and send qubits, let the server entangle,
/// then measure adaptively and decrypt.
BqcResult run_bqc(const MeasurementGraph& g, const PatternSecrets& secrets, Server& server,
                  const BqcOptions& options = {});

/// Adaptive measurement rounds and output decryption only. The server must
/// already hold the entangled resource state. Appends to `transcript`.
BqcResult run_measurement_rounds(const MeasurementGraph& g, const PatternSecrets& secrets, Server& server,
                                 protocol::Transcript transcript, const BqcOptions& options = {});

/// Undoes the server-side encoding of the output qubits: Rz(-theta) first,
/// then the Pauli byproducts, then the input flip Z^x for inputs that are
/// also outputs.
core::QuantumState decrypt_outputs(const MeasurementGraph& g, const PatternSecrets& secrets,
                                   const OutcomeRecord& outcomes, core::QuantumState state);

template <class R>
struct Branch {
  double weight;
  R result;
};

/// Runs `run(selector)` once per outcome script in {0,1}^rounds and keeps
/// the branches with nonzero probability. Weights sum to 1 for a faithful run.
template <class F>
auto enumerate_branches(std::size_t rounds, F&& run) {
  using R = decltype(run(std::declval<OutcomeSelector&>()));
  std::vector<Branch<R>> out;
  for (std::size_t bits = 0; bits < (std::size_t{1} << rounds); ++bits) {
    std::vector<int> script(rounds);
    for (std::size_t i = 0; i < rounds; ++i) script[i] = static_cast<int>((bits >> (rounds - 1 - i)) & 1);
    ScriptedOutcomes selector(std::move(script));
    try {
      R result = run(selector);
      out.push_back({selector.weight(), std::move(result)});
    } catch (const ImpossibleBranch&) {
    }
  }
  return out;
}

/// Exact distribution of the decrypted classical output for fixed secrets
/// against an honest server using `device`.
std::map<std::vector<Bit>, double> exact_output_distribution(const MeasurementGraph& g,
                                                             const PatternSecrets& secrets,
                                                             const core::MeasurementDevice& device);

}  // namespace qline::mbqc
