#include "qline/mbqc/server.hpp"

#include <algorithm>
#include <string>

#include "qline/protocol/transcript.hpp"

namespace qline::mbqc {

using protocol::ProtocolError;

int SampledOutcomes::choose(const core::OutcomeProbabilities& p) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  return unit(rng_) < p.p0 ? 0 : 1;
}

int ScriptedOutcomes::choose(const core::OutcomeProbabilities& p) {
  if (next_ >= script_.size()) throw std::logic_error("outcome script exhausted");
  const int k = script_[next_++];
  if (p[k] <= core::kZeroProbability) throw ImpossibleBranch();
  weight_ *= p[k];
  return k;
}

void HonestServer::receive(QubitBatch batch) {
  if (core::qubit_count(batch.state) != batch.vertices.size()) {
    throw ProtocolError("qubit batch: label count does not match qubit count");
  }
  for (Vertex v : batch.vertices) {
    if (std::find(held_.begin(), held_.end(), v) != held_.end()) {
      throw ProtocolError("vertex " + std::to_string(v) + " received twice");
    }
  }
  state_ = state_ ? core::tensor(*state_, batch.state) : std::move(batch.state);
  for (Vertex v : batch.vertices) {
    held_.push_back(v);
    entangled_.push_back(batch.entangled);
  }
}

core::Qubit HonestServer::position_of(Vertex v) const {
  const auto it = std::find(held_.begin(), held_.end(), v);
  if (it == held_.end()) throw ProtocolError("server does not hold vertex " + std::to_string(v));
  return static_cast<core::Qubit>(it - held_.begin()) + 1;
}

void HonestServer::rotate(Vertex v, Octant theta_prime) {
  // Rz commutes with CZ, so the correction is valid before or after entangling.
  const auto q = position_of(v);
  *state_ = core::apply_single(*state_, q, core::rz_gate(theta_prime));
}

void HonestServer::entangle(const MeasurementGraph& g) {
  for (auto [a, b] : g.edges()) {
    const auto qa = position_of(a);
    const auto qb = position_of(b);
    if (entangled_[qa - 1] && entangled_[qb - 1]) continue;
    *state_ = core::apply_cz(*state_, qa, qb);
  }
  for (Vertex v = 1; v <= g.vertex_count(); ++v) entangled_[position_of(v) - 1] = true;
}

Bit HonestServer::measure(Vertex v, Octant delta) {
  const auto q = position_of(v);
  if (!entangled_[q - 1]) throw ProtocolError("measurement of unentangled vertex " + std::to_string(v));
  const auto setting = device_.setting(v, delta);
  const auto p = core::outcome_distribution(*state_, q, setting.basis);
  const int k = selector_.choose(p);
  if (held_.size() == 1) {
    state_.reset();  // a zero-qubit register is not representable
  } else {
    state_ = core::project(*state_, q, setting.basis, k, core::Retain::Remove).state;
  }
  held_.erase(held_.begin() + static_cast<std::ptrdiff_t>(q - 1));
  entangled_.erase(entangled_.begin() + static_cast<std::ptrdiff_t>(q - 1));
  return static_cast<Bit>(k ^ setting.flip);
}

core::QuantumState HonestServer::release(const std::vector<Vertex>& outputs) {
  if (outputs != held_) throw ProtocolError("release: held qubits do not match the requested outputs");
  if (!state_) throw ProtocolError("release: nothing held");
  auto out = std::move(*state_);
  state_.reset();
  held_.clear();
  entangled_.clear();
  return out;
}

}  // namespace qline::mbqc
