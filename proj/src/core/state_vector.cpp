#include "qline/core/state_vector.hpp"

#include <cmath>
#include <stdexcept>

namespace qline::core {

StateVector::StateVector(std::size_t qubits, Eigen::VectorXcd amplitudes)
    : qubits_(qubits), amplitudes_(std::move(amplitudes)) {
  if (qubits == 0 || static_cast<std::size_t>(amplitudes_.size()) != (std::size_t{1} << qubits)) {
    throw std::invalid_argument("StateVector: amplitude count must be 2^qubits");
  }
  if (std::abs(amplitudes_.squaredNorm() - 1.0) > kExactTol) {
    throw std::invalid_argument("StateVector: state is not normalized");
  }
}

StateVector StateVector::basis_state(std::size_t qubits, std::size_t index) {
  if (qubits == 0 || index >= (std::size_t{1} << qubits)) {
    throw std::out_of_range("StateVector::basis_state: index out of range");
  }
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(Eigen::Index{1} << qubits);
  amps(static_cast<Eigen::Index>(index)) = 1.0;
  return StateVector(qubits, std::move(amps));
}

StateVector StateVector::from_ket(const Ket2& ket) { return StateVector(1, Eigen::VectorXcd(ket)); }

StateVector StateVector::plus(std::size_t qubits) {
  const Eigen::Index dim = Eigen::Index{1} << qubits;
  Eigen::VectorXcd amps = Eigen::VectorXcd::Constant(dim, 1.0 / std::sqrt(static_cast<double>(dim)));
  return StateVector(qubits, std::move(amps));
}

StateVector tensor(const StateVector& a, const StateVector& b) {
  const auto& x = a.amplitudes();
  const auto& y = b.amplitudes();
  Eigen::VectorXcd out(x.size() * y.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    out.segment(i * y.size(), y.size()) = x(i) * y;
  }
  return StateVector(a.qubits() + b.qubits(), std::move(out));
}

double overlap(const StateVector& a, const StateVector& b) {
  if (a.qubits() != b.qubits()) throw std::invalid_argument("overlap: qubit count mismatch");
  return std::norm(a.amplitudes().dot(b.amplitudes()));
}

}  // namespace qline::core
