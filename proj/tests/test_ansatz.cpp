// Copyright 2026 The hqcnbv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hqcnbv/ansatz.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "dense_oracle.hpp"

namespace {

using namespace hqcnbv;
using std::numbers::pi;

using Pairs = std::vector<std::pair<int, int>>;

AnsatzConfig paper_config(AnsatzVariant v, int layers = 5) {
  AnsatzConfig cfg;
  cfg.layout = QubitLayout::from_qubits_per_param(4);
  cfg.layers = layers;
  cfg.variant = v;
  return cfg;
}

std::vector<double> random_theta(const AnsatzConfig& cfg, std::mt19937_64& rng) {
  std::vector<double> t(static_cast<std::size_t>(parameter_count(cfg)));
  for (double& v : t) v = (uniform_double(rng) * 2.0 - 1.0) * pi;
  return t;
}

// tr(rho_q^2) for the single-qubit reduced state of qubit q.
double qubit_purity(const StateVector& s, int q) {
  const std::size_t bit = std::size_t{1} << q;
  double p00 = 0.0, p11 = 0.0;
  complexd r01{0.0, 0.0};
  for (std::size_t k = 0; k < s.dim(); ++k) {
    if (k & bit) {
      p11 += std::norm(s.amps[k]);
    } else {
      p00 += std::norm(s.amps[k]);
      r01 += s.amps[k] * std::conj(s.amps[k | bit]);
    }
  }
  return p00 * p00 + p11 * p11 + 2.0 * std::norm(r01);
}

TEST(ParameterCount, MatchesLayerFormula) {
  EXPECT_EQ(parameter_count(paper_config(AnsatzVariant::FA, 5)), 100);
  EXPECT_EQ(parameter_count(paper_config(AnsatzVariant::NE, 1)), 20);

  AnsatzConfig small;
  small.layout = QubitLayout::from_qubits_per_param(3);
  small.layers = 2;
  EXPECT_EQ(parameter_count(small), 28);

  AnsatzConfig bad = paper_config(AnsatzVariant::FA);
  bad.layers = 0;
  EXPECT_THROW(parameter_count(bad), std::invalid_argument);
}

TEST(Schedules, PaperScaleFullAnsatz) {
  const AnsatzConfig cfg = paper_config(AnsatzVariant::FA);
  const Pairs even = entangler_schedule(cfg, 0);
  const Pairs expected_even = {{0, 1}, {2, 3}, {4, 5}, {6, 7}, {7, 8},
                               {8, 9}, {0, 4}, {2, 4}, {0, 6}};
  EXPECT_EQ(even, expected_even);

  const Pairs odd = entangler_schedule(cfg, 1);
  const Pairs expected_odd = {{0, 1}, {2, 3}, {4, 5}, {6, 7}, {7, 8},
                              {8, 9}, {6, 0}, {4, 2}, {4, 0}};
  EXPECT_EQ(odd, expected_odd);

  // Layer parity is what matters, not the specific layer.
  EXPECT_EQ(entangler_schedule(cfg, 2), even);
  EXPECT_EQ(entangler_schedule(cfg, 3), odd);
}

TEST(Schedules, VariantDecomposition) {
  const AnsatzConfig fa = paper_config(AnsatzVariant::FA);
  const AnsatzConfig ig = paper_config(AnsatzVariant::IG);
  const AnsatzConfig eg = paper_config(AnsatzVariant::EG);
  const AnsatzConfig ne = paper_config(AnsatzVariant::NE);

  const Pairs expected_ig = {{0, 1}, {2, 3}, {4, 5}, {6, 7}, {7, 8}, {8, 9}};
  for (int layer = 0; layer < 5; ++layer) {
    SCOPED_TRACE(layer);
    EXPECT_EQ(entangler_schedule(ig, layer), expected_ig);
    EXPECT_TRUE(entangler_schedule(ne, layer).empty());
    // FA is exactly IG followed by EG.
    Pairs combined = entangler_schedule(ig, layer);
    const Pairs inter = entangler_schedule(eg, layer);
    combined.insert(combined.end(), inter.begin(), inter.end());
    EXPECT_EQ(entangler_schedule(fa, layer), combined);
  }
  EXPECT_EQ(entangler_schedule(eg, 0), (Pairs{{0, 4}, {2, 4}, {0, 6}}));
  EXPECT_EQ(entangler_schedule(eg, 1), (Pairs{{6, 0}, {4, 2}, {4, 0}}));
}

TEST(Schedules, SkipsEmptyGroups) {
  AnsatzConfig cfg;
  cfg.layout = QubitLayout::from_qubits_per_param(2);  // sizes 2,0,0,2
  cfg.layers = 2;
  cfg.variant = AnsatzVariant::FA;
  EXPECT_EQ(entangler_schedule(cfg, 0), (Pairs{{0, 1}, {2, 3}, {0, 2}}));
  EXPECT_EQ(entangler_schedule(cfg, 1), (Pairs{{0, 1}, {2, 3}, {2, 0}}));
  EXPECT_THROW(entangler_schedule(cfg, 2), std::invalid_argument);
  EXPECT_THROW(entangler_schedule(cfg, -1), std::invalid_argument);
}

TEST(PrepareState, ZeroParametersGiveUniformPlus) {
  for (AnsatzVariant v : {AnsatzVariant::FA, AnsatzVariant::NE, AnsatzVariant::IG,
                          AnsatzVariant::EG}) {
    const AnsatzConfig cfg = paper_config(v);
    const std::vector<double> theta(static_cast<std::size_t>(parameter_count(cfg)), 0.0);
    const StateVector s = prepare_state(cfg, theta);
    ASSERT_EQ(s.dim(), 1024u);
    for (const complexd& a : s.amps) {
      EXPECT_NEAR(a.real(), 0.03125, 1e-12);
      EXPECT_NEAR(a.imag(), 0.0, 1e-12);
    }
  }
}

TEST(PrepareState, RejectsWrongParameterLength) {
  const AnsatzConfig cfg = paper_config(AnsatzVariant::FA);
  const std::vector<double> theta(99, 0.0);
  EXPECT_THROW(prepare_state(cfg, theta), std::invalid_argument);
}

TEST(PrepareState, DeterministicForFixedParameters) {
  const AnsatzConfig cfg = paper_config(AnsatzVariant::FA, 2);
  std::mt19937_64 rng(61ull);
  const std::vector<double> theta = random_theta(cfg, rng);
  const StateVector a = prepare_state(cfg, theta);
  const StateVector b = prepare_state(cfg, theta);
  EXPECT_EQ(a.amps, b.amps);
  EXPECT_NEAR(a.norm_sq(), 1.0, 1e-11);
}

TEST(PrepareState, NoEntanglementKeepsQubitsPure) {
  AnsatzConfig cfg = paper_config(AnsatzVariant::NE, 3);
  std::mt19937_64 rng(17ull);
  for (int rep = 0; rep < 5; ++rep) {
    const StateVector s = prepare_state(cfg, random_theta(cfg, rng));
    for (int q = 0; q < 10; ++q) EXPECT_NEAR(qubit_purity(s, q), 1.0, 1e-10);
  }
}

TEST(PrepareState, FullAnsatzEntangles) {
  const AnsatzConfig cfg = paper_config(AnsatzVariant::FA, 2);
  std::mt19937_64 rng(23ull);
  const StateVector s = prepare_state(cfg, random_theta(cfg, rng));
  double min_purity = 1.0;
  for (int q = 0; q < 10; ++q) min_purity = std::min(min_purity, qubit_purity(s, q));
  EXPECT_LT(min_purity, 0.999);
}

// Independent dense reconstruction of the documented circuit structure for
// a 4-qubit configuration (groups 2,0,0,2; two layers; full entanglement).
TEST(PrepareState, MatchesDenseOracleStructure) {
  AnsatzConfig cfg;
  cfg.layout = QubitLayout::from_qubits_per_param(2);
  cfg.layers = 2;
  cfg.variant = AnsatzVariant::FA;
  std::mt19937_64 rng(4242ull);
  const std::vector<double> theta = random_theta(cfg, rng);
  const StateVector got = prepare_state(cfg, theta);

  const int n = 4;
  std::vector<oracle::cd> psi(16, {0, 0});
  psi[0] = {1, 0};
  auto g1 = [&](int q, const oracle::Mat& m) {
    psi = oracle::matvec(oracle::embed_1q(n, q, m), psi);
  };
  auto cx = [&](int c, int t) {
    psi = oracle::matvec(oracle::embed_cnot(n, c, t), psi);
  };
  for (int q = 0; q < n; ++q) g1(q, oracle::hadamard());
  // Layer 0: Ry ramp, chains (0,1) and (2,3), forward link (0,2), Rx ramp.
  for (int q = 0; q < n; ++q) g1(q, oracle::ry(theta[static_cast<std::size_t>(q)]));
  cx(0, 1);
  cx(2, 3);
  cx(0, 2);
  for (int q = 0; q < n; ++q)
    g1(q, oracle::rx(theta[static_cast<std::size_t>(4 + q)]));
  // Layer 1: same shape, reversed link (2,0).
  for (int q = 0; q < n; ++q)
    g1(q, oracle::ry(theta[static_cast<std::size_t>(8 + q)]));
  cx(0, 1);
  cx(2, 3);
  cx(2, 0);
  for (int q = 0; q < n; ++q)
    g1(q, oracle::rx(theta[static_cast<std::size_t>(12 + q)]));

  ASSERT_EQ(got.dim(), psi.size());
  for (std::size_t k = 0; k < psi.size(); ++k)
    EXPECT_NEAR(std::abs(got.amps[k] - complexd(psi[k])), 0.0, 1e-10);
}

// Rotation generators are half-Paulis, so d<H>/dtheta_j equals
// (<H>(theta_j + pi/2) - <H>(theta_j - pi/2)) / 2 exactly; check that
// against central finite differences.
TEST(Gradients, ParameterShiftMatchesFiniteDifferences) {
  AnsatzConfig cfg;
  cfg.layout.n_dir = 2;
  cfg.layout.n_dist = 0;
  cfg.layout.n_adj = 0;
  cfg.layout.n_orient = 1;  // 3-qubit toy register
  cfg.layers = 2;
  cfg.variant = AnsatzVariant::FA;

  PauliSum h;
  h.add(0.7, PauliString::parse("ZII"));
  h.add(-0.4, PauliString::parse("IIX"));
  h.add(0.25, PauliString::parse("ZIZ"));
  h.add(0.3, PauliString::parse("IYI"));

  const auto value = [&](const std::vector<double>& t) {
    return expectation(prepare_state(cfg, t), h);
  };

  std::mt19937_64 rng(909ull);
  const std::vector<double> theta = random_theta(cfg, rng);
  const double fd_step = 1e-6;
  for (std::size_t j = 0; j < theta.size(); ++j) {
    std::vector<double> t = theta;
    t[j] = theta[j] + pi / 2.0;
    const double plus = value(t);
    t[j] = theta[j] - pi / 2.0;
    const double minus = value(t);
    const double shift_grad = (plus - minus) / 2.0;

    t[j] = theta[j] + fd_step;
    const double fp = value(t);
    t[j] = theta[j] - fd_step;
    const double fm = value(t);
    const double fd_grad = (fp - fm) / (2.0 * fd_step);

    SCOPED_TRACE(j);
    EXPECT_NEAR(shift_grad, fd_grad, 5e-7);
  }
}

}  // namespace
