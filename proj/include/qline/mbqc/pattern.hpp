#pragma once

#include <cstdint>
#include <map>

#include "qline/core/octant.hpp"
#include "qline/mbqc/graph.hpp"

namespace qline::mbqc {

using Bit = std::uint8_t;
using core::Octant;

/// Client-side secrets of one pattern run. theta, r and phi live on all
/// vertices; x lives on inputs only and is treated as 0 elsewhere.
struct PatternSecrets {
  std::map<Vertex, Octant> theta;
  std::map<Vertex, Bit> r;
  std::map<Vertex, Bit> x;
  std::map<Vertex, Octant> phi;

  /// Throws std::invalid_argument unless every map covers exactly its domain
  /// and every bit is 0 or 1.
  void validate(const MeasurementGraph& g) const;

  Bit x_of(Vertex v) const;

  /// All-zero secrets on the graph's domains.
  static PatternSecrets zeros(const MeasurementGraph& g);
};

/// Raw reported outcomes m and their decryptions m_true = m xor r.
class OutcomeRecord {
 public:
  void record(Vertex v, Bit raw, Bit r);
  bool has(Vertex v) const { return raw_.contains(v); }
  Bit raw(Vertex v) const;
  /// Throws ProtocolError when v has not been measured.
  Bit corrected(Vertex v) const;
  const std::map<Vertex, Bit>& raw_outcomes() const { return raw_; }
  const std::map<Vertex, Bit>& corrected_outcomes() const { return true_; }

 private:
  std::map<Vertex, Bit> raw_;
  std::map<Vertex, Bit> true_;
};

Bit decrypt_outcome(Bit m, Bit r);

/// Pauli byproduct exponents on v accumulated from earlier outcomes:
/// sx from vertices whose flow is v, sz from vertices whose flow successor
/// neighbours v.
struct Byproducts {
  Bit sx = 0;
  Bit sz = 0;
};

/// Throws ProtocolError if a contributing outcome is missing.
Byproducts byproducts(const MeasurementGraph& g, Vertex v, const OutcomeRecord& outcomes);

/// phi'(v) = (-1)^sx phi + sz pi.
Octant corrected_phi(const MeasurementGraph& g, Vertex v, Octant phi, const OutcomeRecord& outcomes);

/// delta(v) = phi'(v) + theta(v) + (r(v) + x(v)) pi.
Octant blind_delta(Vertex v, const PatternSecrets& secrets, Octant phi_corrected);

}  // namespace qline::mbqc
