#include "qline/protocol/multi_client.hpp"

#include <stdexcept>

namespace qline::protocol {

namespace {

std::string indexed(const char* key, Vertex v) { return std::string(key) + "[" + std::to_string(v) + "]"; }

core::QuantumState resource_state(const mbqc::MeasurementGraph& g, const MultiClientOptions& o) {
  if (o.noise) {
    if (!o.entangle_before || g.vertex_count() != 2) {
      throw std::invalid_argument("noisy source requires a two-vertex graph entangled at the source");
    }
    return source_emit(o.noise);
  }
  auto state = core::StateVector::plus(g.vertex_count());
  if (o.entangle_before) {
    for (auto [a, b] : g.edges()) state = core::apply_cz(state, a, b);
  }
  return state;
}

}  // namespace

MultiClientResult run_multi_client(const mbqc::MeasurementGraph& g, const SessionSecrets& secrets, mbqc::Server& server,
                                   const MultiClientOptions& options) {
  const std::size_t n_clients = secrets.clients.size();
  const std::size_t n = g.vertex_count();
  if (n_clients == 0) throw std::invalid_argument("run_multi_client: at least one client required");
  if (!options.behaviors.empty() && options.behaviors.size() != n_clients) {
    throw std::invalid_argument("run_multi_client: one behaviour per client");
  }
  const std::size_t phi_owner = options.phi_owner.value_or(n_clients);
  auto owner_of = [](const std::map<Vertex, std::size_t>& m, Vertex v) {
    const auto it = m.find(v);
    return it == m.end() ? std::size_t{1} : it->second;
  };

  Transcript t(options.record_states);

  // Step 1: all inputs to the orchestrator.
  for (std::size_t j = 1; j <= n_clients; ++j) {
    std::vector<Field> fields;
    const auto& c = secrets.clients[j - 1];
    for (Vertex v = 1; v <= n; ++v) {
      fields.push_back({indexed("theta", v), c.theta.at(v).value()});
      fields.push_back({indexed("r", v), c.r.at(v)});
    }
    for (Vertex v : g.inputs()) {
      if (owner_of(options.input_owner, v) == j) {
        const auto it = secrets.x.find(v);
        fields.push_back({indexed("x", v), it == secrets.x.end() ? 0 : it->second});
      }
    }
    if (j == phi_owner) {
      for (Vertex v = 1; v <= n; ++v) fields.push_back({indexed("phi", v), secrets.phi.at(v).value()});
    }
    t.append(Stage::T0, client_name(j), kOrchestrator, MessageKind::SecretParams, std::move(fields));
  }

  // Step 2: each qubit crosses the line once.
  core::QuantumState state = resource_state(g, options);
  ClientBehavior honest;
  const std::string origin = options.entangle_before ? kSource : kServer;
  auto hop = [&](const std::string& from, const std::string& to, int count) {
    Message m{Stage::T1, from, to, MessageKind::QubitBatch, {{"qubits", count}}, std::nullopt};
    if (options.record_states) m.snapshot = state;
    t.append(std::move(m));
  };
  std::vector<std::vector<Vertex>> traversals;
  if (options.batched) {
    traversals.emplace_back();
    for (Vertex v = 1; v <= n; ++v) traversals.back().push_back(v);
  } else {
    for (Vertex v = 1; v <= n; ++v) traversals.push_back({v});
  }
  for (const auto& group : traversals) {
    std::string from = origin;
    for (std::size_t j = 1; j <= n_clients; ++j) {
      hop(from, client_name(j), static_cast<int>(group.size()));
      std::vector<Octant> thetas(n, Octant::zero());
      for (Vertex v : group) thetas[v - 1] = secrets.clients[j - 1].theta.at(v);
      ClientBehavior* b = options.behaviors.empty() || !options.behaviors[j - 1] ? &honest : options.behaviors[j - 1];
      state = b->forward(state, thetas);
      from = client_name(j);
    }
    hop(from, kServer, static_cast<int>(group.size()));
  }
  std::vector<Vertex> labels(n);
  for (Vertex v = 1; v <= n; ++v) labels[v - 1] = v;
  server.receive({std::move(state), std::move(labels), options.entangle_before});

  MultiClientResult result;
  if (!options.fuse_theta_prime) {
    for (Vertex v = 1; v <= n; ++v) {
      std::vector<Octant> thetas;
      for (const auto& c : secrets.clients) thetas.push_back(c.theta.at(v));
      const Octant tp = orchestrator_theta_prime(secrets.theta_target(v), thetas);
      t.append(Stage::T1, kOrchestrator, kServer, MessageKind::ThetaPrime,
               {{"vertex", static_cast<int>(v)}, {"theta_prime", tp.value()}});
      server.rotate(v, tp);
      result.theta_primes[v] = tp;
    }
  }
  server.entangle(g);

  // BQC rounds between orchestrator and server.
  const auto pattern = secrets.pattern(g, options.fuse_theta_prime);
  result.bqc = mbqc::run_measurement_rounds(g, pattern, server, std::move(t),
                                            {kOrchestrator, kServer, options.record_states});

  // Step 3: distribute outputs.
  auto& tr = result.bqc.transcript;
  std::vector<Field> outcome_fields;
  for (const auto& [v, m] : result.bqc.outcomes.corrected_outcomes()) outcome_fields.push_back({indexed("m", v), m});
  for (std::size_t j = 1; j <= n_clients; ++j) {
    tr.append(Stage::T2, kOrchestrator, client_name(j), MessageKind::Result, outcome_fields);
  }
  for (Vertex v : g.outputs()) {
    const auto b = mbqc::byproducts(g, v, result.bqc.outcomes);
    tr.append(Stage::T2, kOrchestrator, client_name(owner_of(options.output_owner, v)), MessageKind::Result,
              {{"vertex", static_cast<int>(v)},
               {"theta", pattern.theta.at(v).value()},
               {"sx", b.sx},
               {"sz", b.sz ^ pattern.x_of(v)}});
  }
  return result;
}

std::map<std::vector<Bit>, double> exact_multi_client_distribution(const mbqc::MeasurementGraph& g,
                                                                   const SessionSecrets& secrets,
                                                                   const core::MeasurementDevice& device,
                                                                   const MultiClientOptions& options) {
  const auto branches = mbqc::enumerate_branches(g.measurement_order().size(), [&](mbqc::OutcomeSelector& sel) {
    mbqc::HonestServer server(device, sel);
    return run_multi_client(g, secrets, server, options).bqc.classical_output;
  });
  std::map<std::vector<Bit>, double> d;
  for (const auto& b : branches) d[b.result] += b.weight;
  return d;
}

}  // namespace qline::protocol
