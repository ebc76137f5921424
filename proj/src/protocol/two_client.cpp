#include "qline/protocol/two_client.hpp"

#include <array>

#include "qline/hw/optics.hpp"
#include "qline/mbqc/bqc.hpp"

namespace qline::protocol {

namespace {

const mbqc::MeasurementGraph& chain() {
  static const auto g = mbqc::MeasurementGraph::two_chain();
  return g;
}

void check_two_clients(const SessionSecrets& s) {
  if (s.clients.size() != 2) throw std::invalid_argument("two-client session needs exactly two clients");
}

}  // namespace

std::unique_ptr<core::MeasurementDevice> make_device(const SessionOptions& options) {
  if (options.noise) return std::make_unique<hw::HardwareDevice>(options.noise->pc_phase_offset);
  return std::make_unique<core::IdealDevice>();
}

TwoClientResult run_two_client_session(const TwoClientInputs& in, const SessionSecrets& secrets, mbqc::Server& server,
                                       const SessionOptions& options) {
  check_two_clients(secrets);
  const auto& g = chain();
  const auto& alice = secrets.clients[0];
  const auto& bob = secrets.clients[1];
  TwoClientResult out;
  Transcript& t = out.transcript = Transcript(options.record_states);

  // t0: secrets to the orchestrator, first angle to the server.
  t.append(Stage::T0, client_name(1), kOrchestrator, MessageKind::SecretParams,
           {{"theta1", alice.theta.at(1).value()},
            {"theta2", alice.theta.at(2).value()},
            {"r1", alice.r.at(1)},
            {"r2", alice.r.at(2)},
            {"x1", in.x1},
            {"x2", in.x2}});
  t.append(Stage::T0, client_name(2), kOrchestrator, MessageKind::SecretParams,
           {{"theta1", bob.theta.at(1).value()},
            {"theta2", bob.theta.at(2).value()},
            {"r1", bob.r.at(1)},
            {"r2", bob.r.at(2)},
            {"phi1", in.phi1.value()},
            {"phi2", in.phi2.value()}});

  mbqc::PatternSecrets p;
  p.phi = {{1, in.phi1}, {2, in.phi2}};
  p.x = {{1, in.x1}, {2, in.x2}};
  p.theta = {{1, secrets.client_theta_sum(1)}, {2, secrets.client_theta_sum(2)}};
  p.r = {{1, secrets.r_total(1)}, {2, secrets.r_total(2)}};

  mbqc::OutcomeRecord record;
  out.delta1 = mbqc::blind_delta(1, p, mbqc::corrected_phi(g, 1, in.phi1, record));
  // Both candidates for the second angle are fixed before any photon flies.
  const Octant a = p.theta[2] + Octant::pi_times(in.x2 ^ p.r[2]);
  out.delta2_plus = a + in.phi2;
  out.delta2_minus = a - in.phi2;
  t.append(Stage::T0, kOrchestrator, kServer, MessageKind::Delta, {{"vertex", 1}, {"delta", out.delta1.value()}});

  // t1: the pair travels source -> client 1 -> client 2 -> server.
  core::QuantumState state = source_emit(options.noise);
  ClientBehavior honest;
  std::string from = kSource;
  for (std::size_t j = 1; j <= 2; ++j) {
    Message m{Stage::T1, from, client_name(j), MessageKind::QubitBatch, {{"qubits", 2}}, std::nullopt};
    if (options.record_states) m.snapshot = state;
    t.append(std::move(m));
    const auto& c = secrets.clients[j - 1];
    const std::array<Octant, 2> thetas{c.theta.at(1), c.theta.at(2)};
    state = honest.forward(state, thetas);
    from = client_name(j);
  }
  Message arrive{Stage::T1, from, kServer, MessageKind::QubitBatch, {{"qubits", 2}}, std::nullopt};
  if (options.record_states) arrive.snapshot = state;
  t.append(std::move(arrive));
  server.receive({std::move(state), {1, 2}, true});
  server.entangle(g);

  // t2: first measurement, feed-forward, second measurement.
  const Bit m1 = server.measure(1, out.delta1);
  t.append(Stage::T2, kServer, kOrchestrator, MessageKind::Outcome, {{"vertex", 1}, {"m", m1}});
  record.record(1, m1, p.r[1]);
  const Bit line_plus = m1 == 0 ? 1 : 0;
  const auto ff = hw::ff_circuit(a, in.phi2, p.r[1], line_plus, static_cast<Bit>(line_plus ^ 1));
  out.feed_forward = *ff;
  out.delta2 = ff->delta2;
  t.append(Stage::T2, kOrchestrator, kServer, MessageKind::Delta,
           {{"vertex", 2}, {"delta", out.delta2.value()}, {"f", ff->f}, {"v2", ff->v[0]}, {"v1", ff->v[1]},
            {"v0", ff->v[2]}});
  const Bit m2 = server.measure(2, out.delta2);
  t.append(Stage::T2, kServer, kOrchestrator, MessageKind::Outcome, {{"vertex", 2}, {"m", m2}});
  record.record(2, m2, p.r[2]);

  out.m1_true = record.corrected(1);
  out.m2_true = record.corrected(2);
  for (std::size_t j = 1; j <= 2; ++j) {
    t.append(Stage::T2, kOrchestrator, client_name(j), MessageKind::Result,
             {{"m1", out.m1_true}, {"m2", out.m2_true}});
  }
  return out;
}

TwoClientResult sample_two_client_session(const TwoClientInputs& in, PartyRngs& rngs, const core::MeasurementDevice& device,
                                          const SessionOptions& options) {
  const auto secrets = sample_session_secrets(chain(), 2, {{1, in.x1}, {2, in.x2}}, {{1, in.phi1}, {2, in.phi2}}, rngs);
  mbqc::SampledOutcomes selector(rngs.server());
  mbqc::HonestServer server(device, selector);
  return run_two_client_session(in, secrets, server, options);
}

SessionSecrets two_client_secrets(const TwoClientInputs& in, Octant theta1, Octant theta2, Bit r1, Bit r2) {
  SessionSecrets s;
  s.clients.push_back({{{1, theta1}, {2, theta2}}, {{1, r1}, {2, r2}}});
  s.clients.push_back({{{1, Octant(0)}, {2, Octant(0)}}, {{1, 0}, {2, 0}}});
  s.x = {{1, in.x1}, {2, in.x2}};
  s.phi = {{1, in.phi1}, {2, in.phi2}};
  return s;
}

std::array<double, 4> exact_two_client_distribution(const TwoClientInputs& in, const SessionSecrets& secrets,
                                                    const core::MeasurementDevice& device,
                                                    const SessionOptions& options) {
  std::array<double, 4> d{};
  const auto branches = mbqc::enumerate_branches(2, [&](mbqc::OutcomeSelector& sel) {
    mbqc::HonestServer server(device, sel);
    const auto r = run_two_client_session(in, secrets, server, options);
    return 2 * r.m1_true + r.m2_true;
  });
  for (const auto& b : branches) d[static_cast<std::size_t>(b.result)] += b.weight;
  return d;
}

}  // namespace qline::protocol
