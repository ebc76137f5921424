#pragma once

#include <memory>
#include <random>
#include <stdexcept>
#include <vector>

#include "qline/core/measurement_device.hpp"
#include "qline/core/quantum_state.hpp"
#include "qline/mbqc/graph.hpp"
#include "qline/mbqc/pattern.hpp"

namespace qline::mbqc {

/// Qubits handed to the server. Qubit i of `state` (1-based) carries
/// vertices[i-1]. `entangled` marks a batch whose graph edges were already
/// applied upstream, e.g. by an entangled source.
struct QubitBatch {
  core::QuantumState state;
  std::vector<Vertex> vertices;
  bool entangled = false;
};

/// Server side of the measurement protocol. Adversarial variants override
/// any step.
class Server {
 public:
  virtual ~Server() = default;
  virtual void receive(QubitBatch batch) = 0;
  /// Correction rotation Rz(theta') on a held qubit.
  virtual void rotate(Vertex v, Octant theta_prime) = 0;
  virtual void entangle(const MeasurementGraph& g) = 0;
  /// Measures v at angle delta and reports one bit.
  virtual Bit measure(Vertex v, Octant delta) = 0;
  /// Hands back the unmeasured qubits, in the order requested.
  virtual core::QuantumState release(const std::vector<Vertex>& outputs) = 0;
};

/// Picks the physical outcome of each measurement given its Born probabilities.
class OutcomeSelector {
 public:
  virtual ~OutcomeSelector() = default;
  virtual int choose(const core::OutcomeProbabilities& p) = 0;
};

class SampledOutcomes final : public OutcomeSelector {
 public:
  explicit SampledOutcomes(std::mt19937_64& rng) : rng_(rng) {}
  int choose(const core::OutcomeProbabilities& p) override;

 private:
  std::mt19937_64& rng_;
};

/// Thrown when a scripted outcome has zero probability.
class ImpossibleBranch : public std::runtime_error {
 public:
  ImpossibleBranch() : std::runtime_error("scripted outcome has zero probability") {}
};

/// Follows a fixed outcome script and accumulates the branch probability.
class ScriptedOutcomes final : public OutcomeSelector {
 public:
  explicit ScriptedOutcomes(std::vector<int> script) : script_(std::move(script)) {}
  int choose(const core::OutcomeProbabilities& p) override;
  double weight() const { return weight_; }
  bool exhausted() const { return next_ == script_.size(); }

 private:
  std::vector<int> script_;
  std::size_t next_ = 0;
  double weight_ = 1.0;
};

/// Follows the protocol faithfully. Order violations raise ProtocolError.
class HonestServer : public Server {
 public:
  HonestServer(const core::MeasurementDevice& device, OutcomeSelector& selector)
      : device_(device), selector_(selector) {}

  void receive(QubitBatch batch) override;
  void rotate(Vertex v, Octant theta_prime) override;
  void entangle(const MeasurementGraph& g) override;
  Bit measure(Vertex v, Octant delta) override;
  core::QuantumState release(const std::vector<Vertex>& outputs) override;

  /// Current register; empty before the first batch.
  const std::optional<core::QuantumState>& state() const { return state_; }
  const std::vector<Vertex>& held() const { return held_; }

 protected:
  core::Qubit position_of(Vertex v) const;

  const core::MeasurementDevice& device_;
  OutcomeSelector& selector_;
  std::optional<core::QuantumState> state_;
  std::vector<Vertex> held_;
  std::vector<bool> entangled_;  // parallel to held_
};

}  // namespace qline::mbqc
