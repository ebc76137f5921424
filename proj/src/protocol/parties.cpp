#include "qline/protocol/parties.hpp"

#include <stdexcept>
#include <string>

namespace qline::protocol {

Octant SessionSecrets::client_theta_sum(Vertex v) const {
  Octant sum;
  for (const auto& c : clients) sum += c.theta.at(v);
  return sum;
}

Bit SessionSecrets::r_total(Vertex v) const {
  Bit r = 0;
  for (const auto& c : clients) r ^= c.r.at(v);
  return r;
}

Octant SessionSecrets::theta_target(Vertex v) const {
  return orchestrator_theta ? orchestrator_theta->at(v) : client_theta_sum(v);
}

mbqc::PatternSecrets SessionSecrets::pattern(const mbqc::MeasurementGraph& g, bool fused) const {
  mbqc::PatternSecrets s;
  for (Vertex v = 1; v <= g.vertex_count(); ++v) {
    s.theta[v] = fused ? client_theta_sum(v) : theta_target(v);
    s.r[v] = r_total(v);
    s.phi[v] = phi.at(v);
  }
  for (Vertex v : g.inputs()) {
    const auto it = x.find(v);
    s.x[v] = it == x.end() ? Bit{0} : it->second;
  }
  return s;
}

PartyRngs::PartyRngs(std::uint64_t root_seed, std::size_t n_clients) {
  auto derive = [root_seed](std::uint32_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(root_seed), static_cast<std::uint32_t>(root_seed >> 32), index};
    return std::mt19937_64(seq);
  };
  server_ = derive(0);
  orchestrator_ = derive(1);
  for (std::size_t j = 1; j <= n_clients; ++j) clients_.push_back(derive(static_cast<std::uint32_t>(j + 1)));
}

std::mt19937_64& PartyRngs::client(std::size_t j) {
  if (j < 1 || j > clients_.size()) throw std::out_of_range("no client " + std::to_string(j));
  return clients_[j - 1];
}

SessionSecrets sample_session_secrets(const mbqc::MeasurementGraph& g, std::size_t n_clients,
                                      std::map<Vertex, Bit> x, std::map<Vertex, Octant> phi, PartyRngs& rngs,
                                      bool orchestrator_theta) {
  std::uniform_int_distribution<int> octant(0, 7);
  std::uniform_int_distribution<int> bit(0, 1);
  SessionSecrets s;
  s.x = std::move(x);
  s.phi = std::move(phi);
  for (std::size_t j = 1; j <= n_clients; ++j) {
    ClientSecrets c;
    auto& rng = rngs.client(j);
    for (Vertex v = 1; v <= g.vertex_count(); ++v) {
      c.theta[v] = Octant(octant(rng));
      c.r[v] = static_cast<Bit>(bit(rng));
    }
    s.clients.push_back(std::move(c));
  }
  if (orchestrator_theta) {
    std::map<Vertex, Octant> t;
    for (Vertex v = 1; v <= g.vertex_count(); ++v) t[v] = Octant(octant(rngs.orchestrator()));
    s.orchestrator_theta = std::move(t);
  }
  return s;
}

core::QuantumState source_emit(const std::optional<hw::NoiseParams>& noise) {
  if (noise) return hw::noisy_source_state(*noise);
  return hw::psi_minus();
}

core::QuantumState client_rotate_layer(const core::QuantumState& state, std::span<const Octant> thetas) {
  if (thetas.size() != core::qubit_count(state)) {
    throw std::invalid_argument("client_rotate_layer: one angle per travelling qubit required");
  }
  core::QuantumState out = state;
  for (std::size_t i = 0; i < thetas.size(); ++i) {
    if (thetas[i] != Octant::zero()) out = core::apply_single(out, i + 1, core::rz_gate(thetas[i]));
  }
  return out;
}

Octant orchestrator_theta_prime(Octant theta, std::span<const Octant> client_thetas) {
  for (Octant t : client_thetas) theta -= t;
  return theta;
}

std::string client_name(std::size_t j) { return "client" + std::to_string(j); }

}  // namespace qline::protocol
