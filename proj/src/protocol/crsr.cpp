#include "qline/protocol/crsr.hpp"

#include <stdexcept>

namespace qline::protocol {

CrsrResult run_crsr(std::size_t n_clients, Octant theta, const core::DensityMatrix& rho, std::mt19937_64& rng) {
  if (n_clients == 0) throw std::invalid_argument("run_crsr: at least one client required");
  std::uniform_int_distribution<int> octant(0, 7);
  std::vector<Octant> thetas;
  for (std::size_t j = 0; j < n_clients; ++j) thetas.emplace_back(octant(rng));
  return run_crsr_with_angles(theta, rho, thetas);
}

CrsrResult run_crsr_with_angles(Octant theta, const core::DensityMatrix& rho, std::span<const Octant> client_thetas,
                                std::span<ClientBehavior* const> behaviors) {
  const std::size_t n = client_thetas.size();
  if (n == 0) throw std::invalid_argument("run_crsr: at least one client required");
  if (!behaviors.empty() && behaviors.size() != n) throw std::invalid_argument("run_crsr: one behaviour per client");
  if (rho.qubits() != 1) throw std::invalid_argument("run_crsr: single-qubit input required");

  Transcript t(true);
  for (std::size_t j = 1; j <= n; ++j) {
    t.append(Stage::T0, client_name(j), kOrchestrator, MessageKind::SecretParams,
             {{"theta", client_thetas[j - 1].value()}});
  }
  ClientBehavior honest;
  core::QuantumState state = rho;
  std::string from = kServer;
  std::vector<core::DensityMatrix> after;
  for (std::size_t j = 1; j <= n; ++j) {
    t.append(Message{Stage::T1, from, client_name(j), MessageKind::QubitBatch, {{"qubits", 1}}, state});
    ClientBehavior* b = behaviors.empty() || !behaviors[j - 1] ? &honest : behaviors[j - 1];
    state = b->forward(state, client_thetas.subspan(j - 1, 1));
    after.push_back(core::to_density(state));
    from = client_name(j);
  }
  t.append(Message{Stage::T1, from, kServer, MessageKind::QubitBatch, {{"qubits", 1}}, state});
  const Octant theta_prime = orchestrator_theta_prime(theta, client_thetas);
  t.append(Stage::T1, kOrchestrator, kServer, MessageKind::ThetaPrime, {{"theta_prime", theta_prime.value()}});
  state = core::apply_single(state, 1, core::rz_gate(theta_prime));
  return {core::to_density(state), {client_thetas.begin(), client_thetas.end()}, theta_prime, std::move(after),
          std::move(t)};
}

}  // namespace qline::protocol
