#include "qline/core/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/SVD>

namespace qline::core {

namespace {

Eigen::MatrixXcd psd_sqrt(const Eigen::MatrixXcd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
  // Eigenvalues at rounding level are treated as zero; their square roots would be ~1e-8.
  const double floor = 1e-14 * std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
  Eigen::VectorXd roots = es.eigenvalues().unaryExpr([floor](double v) { return v > floor ? std::sqrt(v) : 0.0; });
  return es.eigenvectors() * roots.asDiagonal() * es.eigenvectors().adjoint();
}

void require_same_shape(const DensityMatrix& a, const DensityMatrix& b, const char* what) {
  if (a.qubits() != b.qubits()) throw std::invalid_argument(std::string(what) + ": dimension mismatch");
}

}  // namespace

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_shape(rho, sigma, "fidelity");
  // Nuclear norm of sqrt(rho) sqrt(sigma); singular values stay accurate near rank deficiency
  // where the eigenvalues of sqrt(rho) sigma sqrt(rho) would lose half their digits.
  const Eigen::MatrixXcd product = psd_sqrt(rho.matrix()) * psd_sqrt(sigma.matrix());
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(product);
  const double nuclear = svd.singularValues().sum();
  return std::clamp(nuclear * nuclear, 0.0, 1.0);
}

double von_neumann_entropy(const DensityMatrix& rho) {
  double s = 0.0;
  for (double lambda : rho.eigenvalues()) {
    if (lambda > 0.0) s -= lambda * std::log2(lambda);
  }
  return s;
}

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_shape(rho, sigma, "trace_distance");
  const Eigen::MatrixXcd d = rho.matrix() - sigma.matrix();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(0.5 * (d + d.adjoint()), Eigen::EigenvaluesOnly);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

double purity(const DensityMatrix& rho) {
  return (rho.matrix() * rho.matrix()).trace().real();
}

}  // namespace qline::core
