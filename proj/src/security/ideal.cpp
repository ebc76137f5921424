#include "qline/security/ideal.hpp"

#include <stdexcept>

#include "qline/core/gates.hpp"
#include "qline/core/measurement_device.hpp"
#include "qline/mbqc/bqc.hpp"

namespace qline::security {

DensityMatrix ideal_rsr(Octant theta, const DensityMatrix& rho) {
  if (rho.qubits() != 1) throw std::invalid_argument("ideal_rsr: expects one qubit");
  const auto& u = core::rz_gate(theta).matrix();
  return DensityMatrix::trusted(1, u * rho.matrix() * u.adjoint());
}

bool Corruption::any() const {
  if (server) return true;
  for (bool c : clients) {
    if (c) return true;
  }
  return false;
}

IdealComputation::IdealComputation(ResourceKind kind, Channel target, std::vector<std::size_t> input_bits)
    : kind_(kind), target_(std::move(target)), input_bits_(std::move(input_bits)),
      client_filter_(input_bits_.size(), true) {
  if (kind == ResourceKind::Rsr) throw std::invalid_argument("IdealComputation: use ideal_rsr for RSR");
  if (input_bits_.empty()) throw std::invalid_argument("IdealComputation: needs a client");
  if (kind == ResourceKind::Bdqc && input_bits_.size() != 1) {
    throw std::invalid_argument("IdealComputation: BDQC has exactly one client");
  }
  if (!target_) throw std::invalid_argument("IdealComputation: missing target map");
}

void IdealComputation::set_filter(std::optional<std::size_t> client, bool filtered) {
  if (!client) {
    server_filter_ = filtered;
    return;
  }
  if (*client < 1 || *client > client_filter_.size()) throw std::out_of_range("set_filter: no such client");
  client_filter_[*client - 1] = filtered;
}

Corruption IdealComputation::effective(const Corruption& requested) const {
  if (!requested.clients.empty() && requested.clients.size() != client_count()) {
    throw std::invalid_argument("IdealComputation: one flag per client");
  }
  Corruption out;
  out.clients.assign(client_count(), false);
  for (std::size_t j = 0; j < requested.clients.size(); ++j) {
    out.clients[j] = requested.clients[j] && !client_filter_[j];
  }
  out.server = requested.server && !server_filter_;
  if (out.any()) out.adversary = requested.adversary;
  return out;
}

DensityMatrix IdealComputation::input_state(const std::vector<std::vector<Bit>>& inputs) const {
  if (inputs.size() != client_count()) throw std::invalid_argument("IdealComputation: one input per client");
  std::size_t index = 0, bits = 0;
  for (std::size_t j = 0; j < inputs.size(); ++j) {
    if (inputs[j].size() != input_bits_[j]) throw std::invalid_argument("IdealComputation: input length mismatch");
    for (Bit b : inputs[j]) {
      if (b > 1) throw std::invalid_argument("IdealComputation: input bits must be 0 or 1");
      index = (index << 1) | b;
      ++bits;
    }
  }
  if (bits == 0) throw std::invalid_argument("IdealComputation: no input bits");
  return DensityMatrix::from_pure(core::StateVector::basis_state(bits, index));
}

DensityMatrix IdealComputation::run(const std::vector<std::vector<Bit>>& inputs, const Corruption& corruption) const {
  const DensityMatrix in = input_state(inputs);
  const Corruption c = effective(corruption);
  if (!c.any()) return target_(in);
  if (!c.adversary || !c.adversary->channel) {
    throw std::invalid_argument("IdealComputation: corruption flag set without an adversary");
  }
  return c.adversary->channel(core::tensor(in, c.adversary->psi));
}

DensityMatrix ideal_mcbqc(const IdealComputation& resource, const std::vector<std::vector<Bit>>& inputs,
                          const Corruption& corruption) {
  return resource.run(inputs, corruption);
}

DensityMatrix classical_state(const std::map<std::vector<Bit>, double>& dist, std::size_t n) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& [bits, p] : dist) {
    if (bits.size() != n) throw std::invalid_argument("classical_state: length mismatch");
    Eigen::Index i = 0;
    for (Bit b : bits) i = (i << 1) | b;
    m(i, i) += p;
  }
  return DensityMatrix(n, std::move(m));
}

Channel pattern_target(const mbqc::MeasurementGraph& g, std::map<Vertex, Octant> phi) {
  if (!g.outputs().empty()) throw std::invalid_argument("pattern_target: classical-output patterns only");
  const std::vector<Vertex> inputs(g.inputs().begin(), g.inputs().end());
  const std::size_t n_out = g.measurement_order().size();
  // One exact distribution per classical input, computed up front.
  std::vector<DensityMatrix> table;
  const core::IdealDevice device;
  for (std::size_t x = 0; x < (std::size_t{1} << inputs.size()); ++x) {
    auto secrets = mbqc::PatternSecrets::zeros(g);
    secrets.phi = phi;
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      secrets.x[inputs[i]] = static_cast<Bit>((x >> (inputs.size() - 1 - i)) & 1U);
    }
    table.push_back(classical_state(mbqc::exact_output_distribution(g, secrets, device), n_out));
  }
  return [table, n_in = inputs.size()](const DensityMatrix& rho) {
    if (rho.qubits() != n_in) throw std::invalid_argument("pattern_target: input register size mismatch");
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(table.front().matrix().rows(), table.front().matrix().cols());
    for (std::size_t x = 0; x < table.size(); ++x) {
      acc += rho(x, x).real() * table[x].matrix();
    }
    return DensityMatrix::trusted(table.front().qubits(), std::move(acc));
  };
}

}  // namespace qline::security
