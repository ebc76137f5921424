#include "qline/mbqc/pattern.hpp"

#include <stdexcept>
#include <string>

#include "qline/protocol/transcript.hpp"

namespace qline::mbqc {

namespace {

template <class Map>
void check_domain(const Map& m, std::size_t n, const std::set<Vertex>* only, const char* name) {
  const std::size_t expected = only ? only->size() : n;
  if (m.size() != expected) {
    throw std::invalid_argument(std::string("PatternSecrets: ") + name + " has wrong domain size");
  }
  for (const auto& [v, _] : m) {
    if (v < 1 || v > n || (only && !only->contains(v))) {
      throw std::invalid_argument(std::string("PatternSecrets: ") + name + " defined on vertex " +
                                  std::to_string(v) + " outside its domain");
    }
  }
}

void check_bits(const std::map<Vertex, Bit>& m, const char* name) {
  for (const auto& [v, b] : m) {
    if (b > 1) throw std::invalid_argument(std::string("PatternSecrets: ") + name + " is not a bit");
  }
}

}  // namespace

void PatternSecrets::validate(const MeasurementGraph& g) const {
  const std::size_t n = g.vertex_count();
  check_domain(theta, n, nullptr, "theta");
  check_domain(r, n, nullptr, "r");
  check_domain(phi, n, nullptr, "phi");
  check_domain(x, n, &g.inputs(), "x");
  check_bits(r, "r");
  check_bits(x, "x");
}

Bit PatternSecrets::x_of(Vertex v) const {
  const auto it = x.find(v);
  return it == x.end() ? Bit{0} : it->second;
}

PatternSecrets PatternSecrets::zeros(const MeasurementGraph& g) {
  PatternSecrets s;
  for (Vertex v = 1; v <= g.vertex_count(); ++v) {
    s.theta[v] = Octant::zero();
    s.r[v] = 0;
    s.phi[v] = Octant::zero();
  }
  for (Vertex v : g.inputs()) s.x[v] = 0;
  return s;
}

void OutcomeRecord::record(Vertex v, Bit raw, Bit r) {
  if (has(v)) throw protocol::ProtocolError("vertex " + std::to_string(v) + " measured twice");
  raw_[v] = raw;
  true_[v] = decrypt_outcome(raw, r);
}

Bit OutcomeRecord::raw(Vertex v) const {
  const auto it = raw_.find(v);
  if (it == raw_.end()) throw protocol::ProtocolError("no outcome for vertex " + std::to_string(v));
  return it->second;
}

Bit OutcomeRecord::corrected(Vertex v) const {
  const auto it = true_.find(v);
  if (it == true_.end()) throw protocol::ProtocolError("no outcome for vertex " + std::to_string(v));
  return it->second;
}

Bit decrypt_outcome(Bit m, Bit r) { return static_cast<Bit>((m ^ r) & 1); }

Byproducts byproducts(const MeasurementGraph& g, Vertex v, const OutcomeRecord& outcomes) {
  Byproducts b;
  for (const auto& [u, fu] : g.flow()) {
    if (fu == v) b.sx ^= outcomes.corrected(u);
    if (u != v && g.neighbors(fu).contains(v)) b.sz ^= outcomes.corrected(u);
  }
  return b;
}

Octant corrected_phi(const MeasurementGraph& g, Vertex v, Octant phi, const OutcomeRecord& outcomes) {
  const auto b = byproducts(g, v, outcomes);
  return phi.signed_by(b.sx) + Octant::pi_times(b.sz);
}

Octant blind_delta(Vertex v, const PatternSecrets& secrets, Octant phi_corrected) {
  const Bit flips = static_cast<Bit>(secrets.r.at(v) ^ secrets.x_of(v));
  return phi_corrected + secrets.theta.at(v) + Octant::pi_times(flips);
}

}  // namespace qline::mbqc
