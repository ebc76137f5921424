#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "qline/core/measurement.hpp"
#include "qline/core/metrics.hpp"
#include "qline/core/quantum_state.hpp"
#include "test_support.hpp"

using namespace qline::core;
using qline::testing::random_density;
using qline::testing::random_state;

namespace {

constexpr double kPi = std::numbers::pi;

StateVector from_list(std::size_t n, std::initializer_list<Complex> amps) {
  Eigen::VectorXcd v(static_cast<Eigen::Index>(amps.size()));
  Eigen::Index i = 0;
  for (auto a : amps) v(i++) = a;
  return StateVector(n, v);
}

StateVector cluster_pair() { return from_list(2, {0.5, 0.5, 0.5, -0.5}); }

void expect_state_near(const StateVector& a, const StateVector& b, double tol = 1e-12) {
  ASSERT_EQ(a.dimension(), b.dimension());
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    EXPECT_NEAR(std::abs(a[i] - b[i]), 0.0, tol) << "index " << i;
  }
}

}  // namespace

TEST(Octant, ArithmeticIsModEight) {
  EXPECT_EQ(Octant(9).value(), 1);
  EXPECT_EQ(Octant(-1).value(), 7);
  EXPECT_EQ((Octant(5) + Octant(6)).value(), 3);
  EXPECT_EQ((Octant(1) - Octant(3)).value(), 6);
  EXPECT_EQ((-Octant(2)).value(), 6);
  EXPECT_EQ(Octant(2).signed_by(1), Octant(6));
  EXPECT_EQ(Octant::pi_times(1), Octant(4));
  EXPECT_DOUBLE_EQ(Octant(3).radians(), 3 * (kPi / 4));
  EXPECT_EQ(to_string(Octant(6)), "3pi/2");
}

TEST(Octant, ParseRoundTrip) {
  for (auto a : all_octants()) EXPECT_EQ(parse_octant(to_string(a)), a);
  EXPECT_THROW(parse_octant("pi/3"), std::invalid_argument);
}

TEST(Octant, GroupLaws) {
  for (auto a : all_octants())
    for (auto b : all_octants()) {
      EXPECT_EQ(a + b, b + a);
      EXPECT_EQ((a + b) - b, a);
      EXPECT_EQ(a + (-a), Octant::zero());
    }
}

TEST(RzGate, IdentityPiAndQuarter) {
  EXPECT_TRUE(rz_gate(Octant(0)).matrix().isApprox(Matrix2::Identity(), 1e-15));
  EXPECT_TRUE(rz_gate(Octant::pi()).matrix().isApprox(pauli_z().matrix(), 1e-15));
  const Matrix2 q = rz_gate(Octant(1)).matrix();
  EXPECT_NEAR(std::abs(q(1, 1) - std::polar(1.0, kPi / 4)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(q(0, 0) - 1.0), 0.0, 1e-15);
  EXPECT_EQ(q(0, 1), Complex(0));
}

TEST(RzGate, OctantTableMatchesRadians) {
  for (auto a : all_octants()) {
    EXPECT_LT((rz_gate(a).matrix() - rz_gate(a.radians()).matrix()).cwiseAbs().maxCoeff(), 1e-15);
  }
}

TEST(RzGate, InverseAndComposition) {
  for (auto a : all_octants()) {
    EXPECT_LT(((rz_gate(a) * rz_gate(-a)).matrix() - Matrix2::Identity()).cwiseAbs().maxCoeff(), 1e-12);
    for (auto b : all_octants()) {
      EXPECT_LT(((rz_gate(a) * rz_gate(b)).matrix() - rz_gate(a + b).matrix()).cwiseAbs().maxCoeff(),
                1e-12);
    }
  }
}

TEST(Unitary2, RejectsNonUnitary) {
  Matrix2 m;
  m << 1, 1, 0, 1;
  EXPECT_THROW(Unitary2{m}, std::invalid_argument);
}

TEST(StateVector, RejectsUnnormalizedAndBadSize) {
  EXPECT_THROW(from_list(1, {1.0, 1.0}), std::invalid_argument);
  EXPECT_THROW(from_list(2, {1.0, 0.0}), std::invalid_argument);
}

TEST(ApplySingle, RzZeroLeavesStateUnchanged) {
  const auto psi = random_state(3, 7);
  for (Qubit q = 1; q <= 3; ++q) expect_state_near(apply_single(psi, q, rz_gate(Octant(0))), psi);
}

TEST(ApplySingle, RzPiOnSecondQubitOfClusterPair) {
  // Hand expansion: diag phases (1,-1) on qubit 2 flip the sign of |01> and |11>.
  const auto out = apply_single(cluster_pair(), 2, rz_gate(Octant::pi()));
  expect_state_near(out, from_list(2, {0.5, -0.5, 0.5, 0.5}));
}

TEST(ApplySingle, RzComposesAdditively) {
  const auto psi = random_state(2, 11);
  for (auto a : all_octants())
    for (auto b : all_octants()) {
      const auto two_step = apply_single(apply_single(psi, 1, rz_gate(a)), 1, rz_gate(b));
      expect_state_near(two_step, apply_single(psi, 1, rz_gate(a + b)));
    }
}

TEST(ApplySingle, IndexOutOfRange) {
  const auto psi = StateVector::plus(2);
  EXPECT_THROW(apply_single(psi, 0, pauli_x()), std::out_of_range);
  EXPECT_THROW(apply_single(psi, 3, pauli_x()), std::out_of_range);
}

TEST(ApplyCz, Basics) {
  const auto one_one = StateVector::basis_state(2, 3);
  expect_state_near(apply_cz(one_one, 1, 2), from_list(2, {0, 0, 0, -1.0}));
  expect_state_near(apply_cz(StateVector::plus(2), 1, 2), cluster_pair());
  const auto psi = random_state(3, 5);
  expect_state_near(apply_cz(apply_cz(psi, 1, 3), 1, 3), psi);
  EXPECT_THROW(apply_cz(psi, 2, 2), std::invalid_argument);
}

TEST(ApplyCz, DensityMatrixAgreesWithPureState) {
  const auto psi = random_state(3, 21);
  const auto via_pure = DensityMatrix::from_pure(apply_cz(psi, 1, 3));
  const auto via_mixed = apply_cz(DensityMatrix::from_pure(psi), 1, 3);
  EXPECT_LT((via_pure.matrix() - via_mixed.matrix()).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(OutcomeDistribution, AlignedAndClosedForm) {
  const auto plus = StateVector::plus(1);
  auto p = outcome_distribution(plus, 1, Octant(0));
  EXPECT_NEAR(p.p0, 1.0, 1e-15);
  EXPECT_NEAR(p.p1, 0.0, 1e-15);
  for (auto theta : all_octants()) {
    const auto s = StateVector::from_ket(plus_ket(theta));
    EXPECT_NEAR(outcome_distribution(s, 1, theta).p0, 1.0, 1e-12);
  }
  // |<+_d|+_t>|^2 = cos^2((d - t)/2) with d = pi/2, t = pi/4.
  const auto s = StateVector::from_ket(plus_ket(Octant(1)));
  p = outcome_distribution(s, 1, Octant(2));
  const double expected = std::pow(std::cos(kPi / 8), 2);
  EXPECT_NEAR(p.p0, expected, 1e-12);
  EXPECT_NEAR(p.p0 + p.p1, 1.0, 1e-12);
}

TEST(Measurement, SamplerAgreesWithAlignedBasis) {
  std::mt19937_64 rng(3);
  const auto s = StateVector::from_ket(plus_ket(Octant(5)));
  for (int i = 0; i < 100; ++i) {
    auto m = measure_in_delta_basis(s, 1, Octant(5), rng, Retain::Keep);
    EXPECT_EQ(m.outcome, 0);
  }
}

TEST(Measurement, PostStateIsBasisKet) {
  const auto psi = cluster_pair();
  for (auto d : all_octants()) {
    for (int k = 0; k < 2; ++k) {
      const auto kept = project(psi, 1, delta_basis(d), k, Retain::Keep);
      EXPECT_NEAR(outcome_distribution(kept.state, 1, delta_basis(d))[k], 1.0, 1e-12);
      const auto removed = project(psi, 1, delta_basis(d), k, Retain::Remove);
      EXPECT_EQ(removed.state.qubits(), 1u);
      EXPECT_NEAR(removed.probability, 0.5, 1e-12);
    }
  }
}

TEST(Measurement, ZeroProbabilityBranchIsAFault) {
  const auto plus = StateVector::plus(1);
  EXPECT_THROW(project(plus, 1, delta_basis(Octant(0)), 1, Retain::Keep), std::logic_error);
}

// Property: norm and trace preservation after gates and renormalized measurement.
TEST(Properties, NormAndTracePreserved) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    const auto psi = random_state(3, 1000 + trial);
    const auto rho = random_density(3, 2000 + trial);
    const Qubit q = 1 + static_cast<Qubit>(trial % 3);
    const Octant d(trial);
    auto psi2 = apply_cz(apply_single(psi, q, hadamard()), 1, 2);
    EXPECT_NEAR(psi2.amplitudes().squaredNorm(), 1.0, 1e-12);
    auto rho2 = apply_cz(apply_single(rho, q, hadamard()), 1, 3);
    EXPECT_TRUE(rho2.is_valid());
    auto mp = measure_in_delta_basis(psi2, q, d, rng);
    EXPECT_NEAR(mp.state.amplitudes().squaredNorm(), 1.0, 1e-12);
    auto mr = measure_in_delta_basis(rho2, q, d, rng, Retain::Keep);
    EXPECT_TRUE(mr.state.is_valid());
    const auto p = outcome_distribution(rho2, q, delta_basis(d));
    EXPECT_NEAR(p.p0 + p.p1, 1.0, 1e-12);
  }
}

// Property: |+-_{d+pi}> = |-+_d>, so the outcome pair swaps exactly.
TEST(Properties, PiShiftSwapsOutcomes) {
  for (int trial = 0; trial < 20; ++trial) {
    const auto psi = random_state(2, 300 + trial);
    const auto rho = random_density(2, 400 + trial);
    for (auto d : all_octants()) {
      for (Qubit q = 1; q <= 2; ++q) {
        const auto a = outcome_distribution(psi, q, d);
        const auto b = outcome_distribution(psi, q, d + Octant::pi());
        EXPECT_EQ(a.p0, b.p1);
        EXPECT_EQ(a.p1, b.p0);
        const auto c = outcome_distribution(rho, q, d);
        const auto e = outcome_distribution(rho, q, d + Octant::pi());
        EXPECT_NEAR(c.p0, e.p1, 1e-15);
        EXPECT_NEAR(c.p1, e.p0, 1e-15);
      }
    }
  }
}

TEST(Properties, SamplerWithinFiveSigmaOfExact) {
  const auto psi = random_state(2, 77);
  const Octant d(3);
  const double p0 = outcome_distribution(psi, 2, d).p0;
  std::mt19937_64 rng(2024);
  const int shots = 100000;
  int zeros = 0;
  for (int i = 0; i < shots; ++i) zeros += measure_in_delta_basis(psi, 2, d, rng).outcome == 0;
  const double sigma = std::sqrt(p0 * (1 - p0) / shots);
  EXPECT_LE(std::abs(zeros / double(shots) - p0), 5 * sigma);
}

TEST(PartialTrace, ProductAndCluster) {
  const auto zero_zero = DensityMatrix::from_pure(StateVector::basis_state(2, 0));
  const std::vector<Qubit> first{1};
  const auto r = partial_trace(zero_zero, first);
  EXPECT_NEAR(std::abs(r(0, 0) - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(r.matrix().cwiseAbs().sum(), 1.0, 1e-15);

  // Oracle: reduced state from amplitudes, rho_ab = sum_s psi[a s] conj(psi[b s]).
  const auto psi = cluster_pair();
  Eigen::Matrix2cd expected = Eigen::Matrix2cd::Zero();
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int s = 0; s < 2; ++s) expected(a, b) += psi[2 * a + s] * std::conj(psi[2 * b + s]);
  EXPECT_LT((expected - 0.5 * Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff(), 1e-15);
  const auto rho = DensityMatrix::from_pure(psi);
  const std::vector<Qubit> second{2};
  EXPECT_LT((partial_trace(rho, first).matrix() - expected).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_LT((partial_trace(rho, second).matrix() - expected).cwiseAbs().maxCoeff(), 1e-15);

  const auto a = random_density(1, 8);
  const auto b = random_density(2, 9);
  EXPECT_LT((partial_trace(tensor(a, b), first).matrix() - a.matrix()).cwiseAbs().maxCoeff(), 1e-14);
  const std::vector<Qubit> tail{2, 3};
  EXPECT_LT((partial_trace(tensor(a, b), tail).matrix() - b.matrix()).cwiseAbs().maxCoeff(), 1e-14);

  EXPECT_THROW(partial_trace(rho, std::span<const Qubit>{}), std::invalid_argument);
}

TEST(Metrics, FidelityBasics) {
  const auto rho = random_density(2, 31);
  EXPECT_NEAR(fidelity(rho, rho), 1.0, 1e-10);
  const auto zero = DensityMatrix::from_pure(StateVector::basis_state(1, 0));
  const auto one = DensityMatrix::from_pure(StateVector::basis_state(1, 1));
  EXPECT_NEAR(fidelity(zero, one), 0.0, 1e-12);
  const auto sigma = random_density(2, 32);
  EXPECT_NEAR(fidelity(rho, sigma), fidelity(sigma, rho), 1e-9);
  EXPECT_THROW(fidelity(zero, rho), std::invalid_argument);
  // Pure target: F = <psi|rho|psi>.
  const auto psi = random_state(2, 33);
  const double direct = (psi.amplitudes().adjoint() * rho.matrix() * psi.amplitudes())(0, 0).real();
  EXPECT_NEAR(fidelity(rho, DensityMatrix::from_pure(psi)), direct, 1e-10);
}

TEST(Metrics, Entropy) {
  EXPECT_NEAR(von_neumann_entropy(DensityMatrix::maximally_mixed(1)), 1.0, 1e-12);
  EXPECT_NEAR(von_neumann_entropy(DensityMatrix::maximally_mixed(2)), 2.0, 1e-12);
  EXPECT_NEAR(von_neumann_entropy(DensityMatrix::from_pure(random_state(2, 4))), 0.0, 1e-12);
}

TEST(MixtureAverage, PhaseAveragingAndErrors) {
  std::vector<DensityMatrix> states;
  for (auto t : all_octants()) states.push_back(DensityMatrix::from_pure(StateVector::from_ket(plus_ket(t))));
  const auto avg = mixture_average(states);
  EXPECT_LT(trace_distance(avg, DensityMatrix::maximally_mixed(1)), 1e-15);

  const std::vector<DensityMatrix> single{states[3]};
  EXPECT_LT(trace_distance(mixture_average(single), states[3]), 1e-15);

  EXPECT_THROW(mixture_average(std::span<const DensityMatrix>{}), std::invalid_argument);
  const std::vector<double> bad{0.5, 0.2};
  const std::vector<DensityMatrix> two{states[0], states[1]};
  EXPECT_THROW(mixture_average(two, std::span<const double>(bad)), std::invalid_argument);
  const std::vector<double> good{0.25, 0.75};
  EXPECT_TRUE(mixture_average(two, std::span<const double>(good)).is_valid());
}

TEST(DensityMatrix, ValidationRejectsBadMatrices) {
  Eigen::Matrix2cd m;
  m << 0.5, 0.6, 0.6, 0.5;  // eigenvalue -0.1
  EXPECT_THROW(DensityMatrix(1, m), std::invalid_argument);
  m << 0.5, 0, 0, 0.6;
  EXPECT_THROW(DensityMatrix(1, m), std::invalid_argument);
  m << 0.5, Complex(0, 0.1), Complex(0, 0.1), 0.5;  // not Hermitian
  EXPECT_THROW(DensityMatrix(1, m), std::invalid_argument);
}

TEST(QuantumState, VariantTensorPromotesToMixed) {
  QuantumState a = StateVector::plus(1);
  QuantumState b = DensityMatrix::maximally_mixed(1);
  EXPECT_TRUE(std::holds_alternative<StateVector>(tensor(a, a)));
  EXPECT_TRUE(std::holds_alternative<DensityMatrix>(tensor(a, b)));
  EXPECT_EQ(qubit_count(tensor(a, b)), 2u);
}
