#include <array>
#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "qline/core/metrics.hpp"
#include "qline/protocol/crsr.hpp"
#include "qline/protocol/multi_client.hpp"
#include "qline/protocol/two_client.hpp"

using namespace qline;
using namespace qline::protocol;
using core::DensityMatrix;
using core::Octant;
using core::StateVector;

namespace {

const core::IdealDevice kIdeal;

std::vector<DensityMatrix> pauli_probes() {
  std::vector<DensityMatrix> out;
  const double s = 1 / std::sqrt(2.0);
  const std::array<std::array<core::Complex, 2>, 6> kets{{{1, 0},
                                                          {0, 1},
                                                          {s, s},
                                                          {s, -s},
                                                          {s, core::Complex(0, s)},
                                                          {s, core::Complex(0, -s)}}};
  for (const auto& k : kets) {
    Eigen::VectorXcd v(2);
    v << k[0], k[1];
    out.push_back(DensityMatrix::from_pure(StateVector(1, v)));
  }
  return out;
}

DensityMatrix rotated(const DensityMatrix& rho, Octant theta) {
  const auto& u = core::rz_gate(theta).matrix();
  return DensityMatrix(1, u * rho.matrix() * u.adjoint());
}

double max_diff(const DensityMatrix& a, const DensityMatrix& b) {
  return (a.matrix() - b.matrix()).cwiseAbs().maxCoeff();
}

}  // namespace

TEST(Source, EmitsClusterPairOrNoisyState) {
  const auto ideal = core::to_density(source_emit(std::nullopt));
  const auto cz_pp = DensityMatrix::from_pure(core::apply_cz(StateVector::plus(2), 1, 2));
  EXPECT_LT(max_diff(ideal, cz_pp), 1e-15);
  for (double lambda : {0.0, 0.3, 1.0}) {
    EXPECT_LT(max_diff(core::to_density(source_emit(hw::NoiseParams{1.0, lambda, 0.0})), cz_pp), 1e-15);
  }
  const auto noisy = core::to_density(source_emit(hw::NoiseParams::experimental()));
  EXPECT_NEAR(core::fidelity(noisy, cz_pp), 0.8578, 1e-9);
}

TEST(Clients, RotateLayer) {
  const core::QuantumState pair = source_emit(std::nullopt);
  const std::array<Octant, 2> zeros{};
  EXPECT_LT(max_diff(core::to_density(client_rotate_layer(pair, zeros)), core::to_density(pair)), 1e-15);

  // Both clients together leave 1/2 (|00> + e^{it2}|01> + e^{it1}|10> - e^{i(t1+t2)}|11>).
  const std::array<Octant, 2> alice{Octant(1), Octant(6)};
  const std::array<Octant, 2> bob{Octant(7), Octant(3)};
  const auto after = std::get<StateVector>(client_rotate_layer(client_rotate_layer(pair, alice), bob));
  const double t1 = (alice[0] + bob[0]).radians(), t2 = (alice[1] + bob[1]).radians();
  using cd = std::complex<double>;
  const std::array<cd, 4> expected{0.5, 0.5 * std::exp(cd(0, t2)), 0.5 * std::exp(cd(0, t1)),
                                   -0.5 * std::exp(cd(0, t1 + t2))};
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(std::abs(after[i] - expected[i]), 0.0, 1e-15);

  const auto swapped = std::get<StateVector>(client_rotate_layer(client_rotate_layer(pair, bob), alice));
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(std::abs(after[i] - swapped[i]), 0.0, 1e-15);

  const std::array<Octant, 1> one{};
  EXPECT_THROW(client_rotate_layer(pair, one), std::invalid_argument);
}

TEST(Orchestrator, ThetaPrime) {
  const std::array<Octant, 2> two{Octant(2), Octant(7)};
  EXPECT_EQ(orchestrator_theta_prime(Octant(1), two), Octant(0));
  const std::array<Octant, 3> zeros{};
  EXPECT_EQ(orchestrator_theta_prime(Octant(5), zeros), Octant(5));
  const std::array<Octant, 1> one{Octant(1)};
  EXPECT_EQ(orchestrator_theta_prime(Octant(0), one), Octant(7));
}

TEST(Crsr, Examples) {
  std::mt19937_64 rng(3);
  const auto probes = pauli_probes();
  for (const auto& rho : probes) EXPECT_LT(max_diff(run_crsr(2, Octant(0), rho, rng).final_state, rho), 1e-12);
  const auto plus = probes[2];
  const auto target = DensityMatrix::from_pure(StateVector::from_ket(core::plus_ket(Octant(1))));
  EXPECT_LT(max_diff(run_crsr(3, Octant(1), plus, rng).final_state, target), 1e-12);
  for (auto th : core::all_octants()) EXPECT_LT(max_diff(run_crsr(2, th, probes[0], rng).final_state, probes[0]), 1e-12);
  EXPECT_THROW(run_crsr(0, Octant(0), plus, rng), std::invalid_argument);
}

// Property: correctness for every angle, every Pauli eigenstate, every
// client count up to three and every choice of client angles for n <= 2.
TEST(Crsr, CorrectForAllAnglesAndProbes) {
  const auto probes = pauli_probes();
  for (const auto& rho : probes)
    for (auto th : core::all_octants()) {
      const auto expected = rotated(rho, th);
      for (auto a : core::all_octants()) {
        const std::array<Octant, 1> one{a};
        EXPECT_LT(max_diff(run_crsr_with_angles(th, rho, one).final_state, expected), 1e-12);
        for (auto b : core::all_octants()) {
          const std::array<Octant, 2> two{a, b};
          const auto res = run_crsr_with_angles(th, rho, two);
          EXPECT_LT(max_diff(res.final_state, expected), 1e-12);
          EXPECT_EQ(res.theta_prime, th - a - b);
        }
      }
      std::mt19937_64 rng(th.value());
      for (int i = 0; i < 5; ++i) EXPECT_LT(max_diff(run_crsr(3, th, rho, rng).final_state, expected), 1e-12);
    }
}

TEST(Crsr, TranscriptRecordsAnglesStatesAndCorrection) {
  const std::array<Octant, 2> angles{Octant(3), Octant(6)};
  const auto res = run_crsr_with_angles(Octant(2), pauli_probes()[2], angles);
  const auto& t = res.transcript;
  EXPECT_EQ(t.of_kind(MessageKind::SecretParams).size(), 2u);
  const auto batches = t.of_kind(MessageKind::QubitBatch);
  ASSERT_EQ(batches.size(), 3u);
  for (const auto& m : batches) EXPECT_TRUE(m.snapshot.has_value());
  EXPECT_EQ(t.of_kind(MessageKind::ThetaPrime).at(0).get("theta_prime"), (Octant(2) - Octant(3) - Octant(6)).value());
  EXPECT_LT(*t.index_of(MessageKind::SecretParams), *t.index_of(MessageKind::QubitBatch));
  EXPECT_LT(max_diff(res.after_client[0], rotated(pauli_probes()[2], Octant(3))), 1e-12);
}

TEST(TwoClient, ZeroAlgorithmIsUniform) {
  const TwoClientInputs in{Octant(0), Octant(0), 0, 0};
  for (int t1 = 0; t1 < 8; ++t1)
    for (int r = 0; r < 4; ++r) {
      const auto s = two_client_secrets(in, Octant(t1), Octant(7 - t1), Bit(r >> 1), Bit(r & 1));
      const auto d = exact_two_client_distribution(in, s, kIdeal);
      for (double p : d) EXPECT_NEAR(p, 0.25, 1e-12);
    }
}

// Property: honest noiseless sessions reproduce the oracle for every input
// tuple and every aggregated secret.
TEST(TwoClient, MatchesOracleForAllSecrets) {
  for (int p1 = 0; p1 < 8; p1 += 3)
    for (int p2 = 0; p2 < 8; ++p2)
      for (int x = 0; x < 4; ++x) {
        const TwoClientInputs in{Octant(p1), Octant(p2), Bit(x >> 1), Bit(x & 1)};
        const auto oracle = qline::testing::two_chain_oracle(in.phi1, in.phi2, in.x1, in.x2);
        for (int t1 = 0; t1 < 8; ++t1)
          for (int t2 = 0; t2 < 8; t2 += 3)
            for (int r = 0; r < 4; ++r) {
              const auto s = two_client_secrets(in, Octant(t1), Octant(t2), Bit(r >> 1), Bit(r & 1));
              const auto d = exact_two_client_distribution(in, s, kIdeal);
              for (std::size_t k = 0; k < 4; ++k) EXPECT_NEAR(d[k], oracle[k], 1e-12);
            }
      }
}

TEST(TwoClient, SecondAngleFollowsFirstOutcome) {
  PartyRngs rngs(11, 2);
  for (int i = 0; i < 200; ++i) {
    const TwoClientInputs in{Octant(i % 8), Octant((3 * i) % 8), Bit(i & 1), Bit((i >> 1) & 1)};
    const auto r = sample_two_client_session(in, rngs, kIdeal);
    EXPECT_EQ(r.delta2, r.m1_true == 0 ? r.delta2_plus : r.delta2_minus);
    const auto alice = r.transcript.view_of(client_name(1)).front();
    const auto bob = r.transcript.view_of(client_name(2)).front();
    const Octant theta2(alice.get("theta2") + bob.get("theta2"));
    const Bit r2 = static_cast<Bit>(alice.get("r2") ^ bob.get("r2"));
    const Octant a = theta2 + Octant::pi_times(in.x2 ^ r2);
    EXPECT_EQ(r.delta2_plus, a + in.phi2);
    EXPECT_EQ(r.delta2_minus, a - in.phi2);
  }
}

TEST(TwoClient, InputFlipPermutesOutcomes) {
  for (int p1 = 0; p1 < 8; ++p1)
    for (int p2 = 0; p2 < 8; ++p2) {
      const TwoClientInputs base{Octant(p1), Octant(p2), 0, 0};
      TwoClientInputs flipped = base;
      flipped.x2 = 1;
      const auto d0 = exact_two_client_distribution(base, two_client_secrets(base, Octant(3), Octant(5), 1, 0), kIdeal);
      const auto d1 =
          exact_two_client_distribution(flipped, two_client_secrets(flipped, Octant(3), Octant(5), 1, 0), kIdeal);
      for (int m1 = 0; m1 < 2; ++m1)
        for (int m2 = 0; m2 < 2; ++m2) {
          EXPECT_NEAR(d1[static_cast<std::size_t>(2 * m1 + m2)], d0[static_cast<std::size_t>(2 * m1 + (m2 ^ 1))], 1e-12);
        }
    }
}

TEST(TwoClient, TranscriptStaging) {
  PartyRngs rngs(5, 2);
  const auto r = sample_two_client_session({Octant(1), Octant(2), 1, 0}, rngs, kIdeal, {std::nullopt, true});
  const auto& msgs = r.transcript.messages();
  std::size_t last_secret = 0, first_quantum = msgs.size(), m1_at = 0, d2_at = 0;
  for (std::size_t i = 0; i < msgs.size(); ++i) {
    if (msgs[i].kind == MessageKind::SecretParams) last_secret = i;
    if (msgs[i].kind == MessageKind::QubitBatch) first_quantum = std::min(first_quantum, i);
    if (msgs[i].kind == MessageKind::Outcome && msgs[i].get("vertex") == 1) m1_at = i;
    if (msgs[i].kind == MessageKind::Delta && msgs[i].get("vertex") == 2) d2_at = i;
  }
  EXPECT_LT(last_secret, first_quantum);
  EXPECT_LT(m1_at, d2_at);
  EXPECT_TRUE(msgs[first_quantum].snapshot.has_value());
  const auto parsed = Transcript::parse(r.transcript.serialize());
  EXPECT_EQ(parsed.serialize(), r.transcript.serialize());
}

TEST(TwoClient, SameSeedSameTranscript) {
  PartyRngs a(99, 2), b(99, 2);
  for (int i = 0; i < 20; ++i) {
    const TwoClientInputs in{Octant(1), Octant(3), 0, 1};
    EXPECT_EQ(sample_two_client_session(in, a, kIdeal).transcript.serialize(),
              sample_two_client_session(in, b, kIdeal).transcript.serialize());
  }
}

TEST(TwoClient, NoisyDiffersFromIdeal) {
  const SessionOptions noisy{hw::NoiseParams::experimental()};
  const auto device = make_device(noisy);
  const TwoClientInputs in{Octant(2), Octant(2), 0, 0};
  const auto s = two_client_secrets(in, Octant(0), Octant(0), 0, 0);
  const auto ideal = exact_two_client_distribution(in, s, kIdeal);
  const auto d = exact_two_client_distribution(in, s, *device, noisy);
  double dist = 0, total = 0;
  for (std::size_t k = 0; k < 4; ++k) {
    dist += std::abs(d[k] - ideal[k]);
    total += d[k];
  }
  EXPECT_GT(dist, 0.05);
  EXPECT_NEAR(total, 1.0, 1e-12);
}

namespace {

SessionSecrets split_secrets(const mbqc::MeasurementGraph& g, std::size_t n_clients, std::mt19937_64& rng,
                             std::map<Vertex, Bit> x, std::map<Vertex, Octant> phi) {
  std::uniform_int_distribution<int> oct(0, 7), bit(0, 1);
  SessionSecrets s;
  s.x = std::move(x);
  s.phi = std::move(phi);
  for (std::size_t j = 0; j < n_clients; ++j) {
    ClientSecrets c;
    for (Vertex v = 1; v <= g.vertex_count(); ++v) {
      c.theta[v] = Octant(oct(rng));
      c.r[v] = Bit(bit(rng));
    }
    s.clients.push_back(c);
  }
  return s;
}

MultiClientOptions opts(bool entangle_before, bool fuse, bool batched = true) {
  MultiClientOptions o;
  o.entangle_before = entangle_before;
  o.fuse_theta_prime = fuse;
  o.batched = batched;
  return o;
}

void expect_same(const std::map<std::vector<Bit>, double>& a, const std::map<std::vector<Bit>, double>& b) {
  for (const auto& [k, p] : a) EXPECT_NEAR(b.count(k) ? b.at(k) : 0.0, p, 1e-12);
  for (const auto& [k, p] : b) EXPECT_NEAR(a.count(k) ? a.at(k) : 0.0, p, 1e-12);
}

}  // namespace

TEST(MultiClient, SingleClientReducesToBqc) {
  std::mt19937_64 rng(17);
  for (std::size_t n : {2u, 3u}) {
    const auto g = mbqc::MeasurementGraph::linear_chain(n, {1});
    for (int trial = 0; trial < 10; ++trial) {
      std::map<Vertex, Octant> phi;
      for (Vertex v = 1; v <= n; ++v) phi[v] = Octant(static_cast<int>(rng() % 8));
      const auto s = split_secrets(g, 1, rng, {{1, Bit(trial & 1)}}, phi);
      const auto via_line = exact_multi_client_distribution(g, s, kIdeal, opts(false, true));
      const auto direct = mbqc::exact_output_distribution(g, s.pattern(g, true), kIdeal);
      expect_same(via_line, direct);
    }
  }
}

TEST(MultiClient, TwoClientsMatchTwoClientSession) {
  const auto g = mbqc::MeasurementGraph::two_chain();
  for (int p = 0; p < 64; p += 5)
    for (int x = 0; x < 4; ++x) {
      const TwoClientInputs in{Octant(p / 8), Octant(p % 8), Bit(x >> 1), Bit(x & 1)};
      for (int t1 = 0; t1 < 8; ++t1)
        for (int t2 = 0; t2 < 8; ++t2)
          for (int r = 0; r < 4; ++r) {
            const auto s = two_client_secrets(in, Octant(t1), Octant(t2), Bit(r >> 1), Bit(r & 1));
            const auto session = exact_two_client_distribution(in, s, kIdeal);
            const auto multi = exact_multi_client_distribution(
                g, s, kIdeal, opts(true, true));
            for (int k = 0; k < 4; ++k) {
              const std::vector<Bit> key{Bit(k >> 1), Bit(k & 1)};
              EXPECT_NEAR(multi.count(key) ? multi.at(key) : 0.0, session[static_cast<std::size_t>(k)], 1e-12);
            }
          }
    }
}

// Property: how theta is split among three clients does not matter.
TEST(MultiClient, ThreeClientSplitInvariance) {
  const auto g = mbqc::MeasurementGraph::two_chain();
  const std::map<Vertex, Octant> phi{{1, Octant(1)}, {2, Octant(3)}};
  const std::map<Vertex, Bit> x{{1, 1}, {2, 0}};
  // Reduced angle set {0, pi/4, pi/2} per client for the first vertex.
  std::optional<std::map<std::vector<Bit>, double>> reference;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      SessionSecrets s;
      s.x = x;
      s.phi = phi;
      const int c = (5 - a - b + 16) % 8;  // total theta1 fixed at 5
      for (int th : {a, b, c}) s.clients.push_back({{{1, Octant(th)}, {2, Octant(th + 1)}}, {{1, 0}, {2, 1}}});
      s.clients[2].theta[2] = Octant(2 - a - b + 8 - 2);  // total theta2 fixed
      const auto d = exact_multi_client_distribution(g, s, kIdeal, opts(false, true));
      if (!reference) reference = d;
      expect_same(*reference, d);
    }
}

TEST(MultiClient, EntanglingLocationAndFusionInvariance) {
  std::mt19937_64 rng(23);
  for (std::size_t n : {2u, 3u}) {
    const auto g = mbqc::MeasurementGraph::linear_chain(n, {1});
    for (int trial = 0; trial < 12; ++trial) {
      std::map<Vertex, Octant> phi;
      for (Vertex v = 1; v <= n; ++v) phi[v] = Octant(static_cast<int>(rng() % 8));
      auto s = split_secrets(g, 2, rng, {{1, Bit(trial & 1)}}, phi);
      std::map<Vertex, Octant> own;
      for (Vertex v = 1; v <= n; ++v) own[v] = Octant(static_cast<int>(rng() % 8));
      s.orchestrator_theta = own;
      const auto base = exact_multi_client_distribution(g, s, kIdeal, opts(false, false));
      expect_same(base, exact_multi_client_distribution(g, s, kIdeal, opts(true, false)));
      expect_same(base, exact_multi_client_distribution(g, s, kIdeal, opts(false, true)));
      expect_same(base, exact_multi_client_distribution(g, s, kIdeal, opts(true, true)));
      expect_same(base, exact_multi_client_distribution(g, s, kIdeal, opts(false, false, false)));
    }
  }
}

TEST(MultiClient, TranscriptAndOutputs) {
  const auto g = mbqc::MeasurementGraph::two_chain(true);
  std::mt19937_64 rng(2);
  auto s = split_secrets(g, 2, rng, {{1, 0}, {2, 0}}, {{1, Octant(1)}, {2, Octant(0)}});
  std::mt19937_64 srng(4);
  mbqc::SampledOutcomes sel(srng);
  mbqc::HonestServer server(kIdeal, sel);
  auto options = opts(false, false, false);
  options.record_states = true;
  const auto r = run_multi_client(g, s, server, options);
  const auto& t = r.bqc.transcript;
  EXPECT_EQ(t.of_kind(MessageKind::ThetaPrime).size(), 2u);
  // Sequential traversal: each of two qubits makes three hops.
  EXPECT_GE(t.of_kind(MessageKind::QubitBatch).size(), 6u);
  ASSERT_TRUE(r.bqc.quantum_output.has_value());
  const auto ideal = core::DensityMatrix::from_pure(
      core::apply_single(StateVector::from_ket(core::plus_ket(-Octant(1))), 1, core::hadamard()));
  EXPECT_NEAR(core::fidelity(core::to_density(*r.bqc.quantum_output), ideal), 1.0, 1e-12);
  EXPECT_EQ(t.view_of(client_name(1)).back().kind, MessageKind::Result);
  const auto chain3 = mbqc::MeasurementGraph::linear_chain(3, {1});
  const auto s3 = split_secrets(chain3, 1, rng, {}, {{1, Octant(0)}, {2, Octant(0)}, {3, Octant(0)}});
  auto noisy = opts(true, false);
  noisy.noise = hw::NoiseParams::experimental();
  EXPECT_THROW(run_multi_client(chain3, s3, server, noisy), std::invalid_argument);
}
