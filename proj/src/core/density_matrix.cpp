#include "qline/core/density_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qline::core {

namespace {
constexpr double kMinEigenvalue = -1e-10;
}

DensityMatrix::DensityMatrix(std::size_t qubits, Eigen::MatrixXcd entries, Unchecked)
    : qubits_(qubits), entries_(std::move(entries)) {}

DensityMatrix::DensityMatrix(std::size_t qubits, Eigen::MatrixXcd entries)
    : DensityMatrix(qubits, std::move(entries), Unchecked{}) {
  const auto dim = std::size_t{1} << qubits;
  if (qubits == 0 || static_cast<std::size_t>(entries_.rows()) != dim ||
      static_cast<std::size_t>(entries_.cols()) != dim) {
    throw std::invalid_argument("DensityMatrix: matrix must be 2^qubits square");
  }
  if (!is_valid()) {
    throw std::invalid_argument("DensityMatrix: not Hermitian, unit-trace and positive semidefinite");
  }
}

DensityMatrix DensityMatrix::trusted(std::size_t qubits, Eigen::MatrixXcd entries) {
  return DensityMatrix(qubits, std::move(entries), Unchecked{});
}

DensityMatrix DensityMatrix::from_pure(const StateVector& psi) {
  const auto& a = psi.amplitudes();
  return DensityMatrix(psi.qubits(), a * a.adjoint(), Unchecked{});
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t qubits) {
  const Eigen::Index dim = Eigen::Index{1} << qubits;
  return DensityMatrix(qubits, Eigen::MatrixXcd::Identity(dim, dim) / static_cast<double>(dim),
                       Unchecked{});
}

bool DensityMatrix::is_valid(double tol) const {
  if ((entries_ - entries_.adjoint()).cwiseAbs().maxCoeff() > tol) return false;
  if (std::abs(entries_.trace() - Complex(1.0)) > tol) return false;
  const auto ev = eigenvalues();
  return *std::min_element(ev.begin(), ev.end()) > kMinEigenvalue;
}

std::vector<double> DensityMatrix::eigenvalues() const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(entries_, Eigen::EigenvaluesOnly);
  const auto& v = es.eigenvalues();
  return {v.data(), v.data() + v.size()};
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  const auto& x = a.matrix();
  const auto& y = b.matrix();
  Eigen::MatrixXcd out(x.rows() * y.rows(), x.cols() * y.cols());
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
      out.block(i * y.rows(), j * y.cols(), y.rows(), y.cols()) = x(i, j) * y;
    }
  }
  return DensityMatrix::trusted(a.qubits() + b.qubits(), std::move(out));
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const Qubit> keep) {
  const std::size_t n = rho.qubits();
  if (keep.empty()) throw std::invalid_argument("partial_trace: keep set is empty");
  std::vector<Qubit> kept(keep.begin(), keep.end());
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  for (Qubit q : kept) {
    if (q < 1 || q > n) throw std::out_of_range("partial_trace: qubit out of range");
  }
  const std::size_t k = kept.size();
  const std::size_t full = std::size_t{1} << n;

  // Reduced index of a full basis index, and the traced-out remainder.
  std::size_t kept_mask = 0;
  for (Qubit q : kept) kept_mask |= std::size_t{1} << (n - q);
  auto reduced_index = [&](std::size_t i) {
    std::size_t r = 0;
    for (Qubit q : kept) r = (r << 1) | ((i >> (n - q)) & 1U);
    return r;
  };

  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(Eigen::Index{1} << k, Eigen::Index{1} << k);
  for (std::size_t i = 0; i < full; ++i) {
    const std::size_t ri = reduced_index(i);
    for (std::size_t j = 0; j < full; ++j) {
      if ((i & ~kept_mask) != (j & ~kept_mask)) continue;
      out(static_cast<Eigen::Index>(ri), static_cast<Eigen::Index>(reduced_index(j))) +=
          rho(i, j);
    }
  }
  return DensityMatrix::trusted(k, std::move(out));
}

DensityMatrix mixture_average(std::span<const DensityMatrix> states,
                              std::optional<std::span<const double>> weights) {
  if (states.empty()) throw std::invalid_argument("mixture_average: no states");
  const std::size_t n = states.front().qubits();
  if (weights && weights->size() != states.size()) {
    throw std::invalid_argument("mixture_average: weight count mismatch");
  }
  if (weights) {
    double total = 0.0;
    for (double w : *weights) {
      if (w < 0.0) throw std::invalid_argument("mixture_average: negative weight");
      total += w;
    }
    if (std::abs(total - 1.0) > kExactTol) {
      throw std::invalid_argument("mixture_average: weights must sum to 1");
    }
  }
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(states.front().matrix().rows(),
                                                states.front().matrix().cols());
  const double uniform = 1.0 / static_cast<double>(states.size());
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (states[i].qubits() != n) throw std::invalid_argument("mixture_average: dimension mismatch");
    acc += (weights ? (*weights)[i] : uniform) * states[i].matrix();
  }
  return DensityMatrix::trusted(n, std::move(acc));
}

}  // namespace qline::core
