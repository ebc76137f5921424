#include "qline/mbqc/bqc.hpp"

namespace qline::mbqc {

using protocol::MessageKind;
using protocol::Stage;

core::StateVector prepare_client_qubits(const MeasurementGraph& g, const PatternSecrets& secrets) {
  auto state = core::StateVector::from_ket(core::plus_ket(secrets.theta.at(1)));
  for (Vertex v = 2; v <= g.vertex_count(); ++v) {
    state = core::tensor(state, core::StateVector::from_ket(core::plus_ket(secrets.theta.at(v))));
  }
  return state;
}

BqcResult run_bqc(const MeasurementGraph& g, const PatternSecrets& secrets, Server& server,
                  const BqcOptions& options) {
  secrets.validate(g);
  protocol::Transcript transcript(options.record_states);
  std::vector<Vertex> labels(g.vertex_count());
  for (Vertex v = 1; v <= g.vertex_count(); ++v) labels[v - 1] = v;

  core::QuantumState prepared = prepare_client_qubits(g, secrets);
  protocol::Message batch{Stage::T1, options.client, options.server, MessageKind::QubitBatch,
                          {{"qubits", static_cast<int>(g.vertex_count())}}, std::nullopt};
  if (options.record_states) batch.snapshot = prepared;
  transcript.append(std::move(batch));
  server.receive({std::move(prepared), std::move(labels), false});
  server.entangle(g);
  return run_measurement_rounds(g, secrets, server, std::move(transcript), options);
}

BqcResult run_measurement_rounds(const MeasurementGraph& g, const PatternSecrets& secrets, Server& server,
                                 protocol::Transcript transcript, const BqcOptions& options) {
  BqcResult result{{}, {}, std::nullopt, {}, std::move(transcript)};
  for (Vertex v : g.measurement_order()) {
    const Octant phi_c = corrected_phi(g, v, secrets.phi.at(v), result.outcomes);
    const Octant delta = blind_delta(v, secrets, phi_c);
    result.transcript.append(Stage::T2, options.client, options.server, MessageKind::Delta,
                             {{"vertex", static_cast<int>(v)}, {"delta", delta.value()}});
    const Bit m = server.measure(v, delta);
    result.transcript.append(Stage::T2, options.server, options.client, MessageKind::Outcome,
                             {{"vertex", static_cast<int>(v)}, {"m", m}});
    result.outcomes.record(v, m, secrets.r.at(v));
    result.deltas.push_back(delta);
    result.classical_output.push_back(result.outcomes.corrected(v));
  }
  if (!g.outputs().empty()) {
    const std::vector<Vertex> outs(g.outputs().begin(), g.outputs().end());
    auto state = server.release(outs);
    protocol::Message back{Stage::T2, options.server, options.client, MessageKind::QubitBatch,
                           {{"qubits", static_cast<int>(outs.size())}}, std::nullopt};
    if (options.record_states) back.snapshot = state;
    result.transcript.append(std::move(back));
    result.quantum_output = decrypt_outputs(g, secrets, result.outcomes, std::move(state));
  }
  return result;
}

core::QuantumState decrypt_outputs(const MeasurementGraph& g, const PatternSecrets& secrets,
                                   const OutcomeRecord& outcomes, core::QuantumState state) {
  core::Qubit q = 1;
  for (Vertex v : g.outputs()) {
    state = core::apply_single(state, q, core::rz_gate(-secrets.theta.at(v)));
    const auto b = byproducts(g, v, outcomes);
    if (b.sx) state = core::apply_single(state, q, core::pauli_x());
    if (b.sz ^ secrets.x_of(v)) state = core::apply_single(state, q, core::pauli_z());
    ++q;
  }
  return state;
}

std::map<std::vector<Bit>, double> exact_output_distribution(const MeasurementGraph& g,
                                                             const PatternSecrets& secrets,
                                                             const core::MeasurementDevice& device) {
  const auto branches = enumerate_branches(g.measurement_order().size(), [&](OutcomeSelector& sel) {
    HonestServer server(device, sel);
    return run_bqc(g, secrets, server).classical_output;
  });
  std::map<std::vector<Bit>, double> dist;
  for (const auto& b : branches) dist[b.result] += b.weight;
  return dist;
}

}  // namespace qline::mbqc
