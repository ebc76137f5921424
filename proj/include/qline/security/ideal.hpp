#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "qline/core/density_matrix.hpp"
#include "qline/mbqc/graph.hpp"
#include "qline/mbqc/pattern.hpp"

namespace qline::security {

using core::DensityMatrix;
using core::Octant;
using mbqc::Bit;
using mbqc::Vertex;

/// A quantum channel given as a function on density matrices.
using Channel = std::function<DensityMatrix(const DensityMatrix&)>;

/// Remote state rotation: the server receives Rz(theta) rho Rz(theta)^dagger.
DensityMatrix ideal_rsr(Octant theta, const DensityMatrix& rho);

enum class ResourceKind { Rsr, Bdqc, Mcbqc };

/// The colluding parties act as one adversary: they contribute a state psi
/// and a channel applied to (clients' inputs) tensor psi.
struct Adversary {
  DensityMatrix psi;
  Channel channel;
};

/// Corruption flags c_j (clients, index j-1) and c (server).
struct Corruption {
  std::vector<bool> clients;
  bool server = false;
  std::optional<Adversary> adversary;

  bool any() const;
};

/// Delegated computation of a fixed map U on the clients' classical inputs.
/// Interfaces with the honest filter have their corruption flag forced to 0.
class IdealComputation {
 public:
  /// `input_bits[j]` is the number of input bits of client j+1. Bdqc needs
  /// exactly one client.
  IdealComputation(ResourceKind kind, Channel target, std::vector<std::size_t> input_bits);

  ResourceKind kind() const { return kind_; }
  std::size_t client_count() const { return input_bits_.size(); }

  /// Places (true) or removes the honest filter on a client interface, or on
  /// the server interface when `client` is nullopt. All interfaces start filtered.
  void set_filter(std::optional<std::size_t> client, bool filtered);

  /// Flags after the filters.
  Corruption effective(const Corruption& requested) const;

  /// The basis state |x_1 ... x_n><x_1 ... x_n| of the concatenated inputs.
  DensityMatrix input_state(const std::vector<std::vector<Bit>>& inputs) const;

  /// U(inputs) when no effective flag is set, else E(inputs tensor psi).
  /// Throws std::invalid_argument on malformed inputs or when a flag survives
  /// the filters without an adversary.
  DensityMatrix run(const std::vector<std::vector<Bit>>& inputs, const Corruption& corruption) const;

 private:
  ResourceKind kind_;
  Channel target_;
  std::vector<std::size_t> input_bits_;
  std::vector<bool> client_filter_;
  bool server_filter_ = true;
};

DensityMatrix ideal_mcbqc(const IdealComputation& resource, const std::vector<std::vector<Bit>>& inputs,
                          const Corruption& corruption);

/// The map computed by a classical-output pattern with angles `phi`: input
/// bits x on g's inputs (in vertex order) to the diagonal state of the
/// decrypted outcomes in measurement order. Off-diagonal input coherences
/// are discarded, as the inputs are classical.
Channel pattern_target(const mbqc::MeasurementGraph& g, std::map<Vertex, Octant> phi);

/// Diagonal density matrix of a distribution over bit strings of length n.
DensityMatrix classical_state(const std::map<std::vector<Bit>, double>& dist, std::size_t n);

}  // namespace qline::security
