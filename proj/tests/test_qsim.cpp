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

#include "hqcnbv/qsim.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "dense_oracle.hpp"

namespace {

using namespace hqcnbv;
using std::numbers::pi;

constexpr double kTight = 1e-12;
constexpr double kOracleTol = 1e-10;

std::vector<oracle::cd> to_dense(const StateVector& s) {
  return std::vector<oracle::cd>(s.amps.begin(), s.amps.end());
}

// Random circuit over the supported gate set; both the simulator state and
// the dense reference vector are advanced gate by gate.
struct RandomCircuitCase {
  StateVector sim;
  std::vector<oracle::cd> ref;
};

RandomCircuitCase run_random_circuit(int n_qubits, int n_gates,
                                     std::mt19937_64& rng) {
  RandomCircuitCase out{new_zero_state(n_qubits), {}};
  out.ref.assign(std::size_t{1} << n_qubits, {0, 0});
  out.ref[0] = {1, 0};
  for (int g = 0; g < n_gates; ++g) {
    const int kind = static_cast<int>(rng() % 4);
    const int q = static_cast<int>(rng() % static_cast<std::uint64_t>(n_qubits));
    const double angle = (uniform_double(rng) * 2.0 - 1.0) * 2.0 * pi;
    switch (kind) {
      case 0:
        apply_h(out.sim, q);
        out.ref = oracle::matvec(oracle::embed_1q(n_qubits, q, oracle::hadamard()),
                                out.ref);
        break;
      case 1:
        apply_ry(out.sim, q, angle);
        out.ref =
            oracle::matvec(oracle::embed_1q(n_qubits, q, oracle::ry(angle)), out.ref);
        break;
      case 2:
        apply_rx(out.sim, q, angle);
        out.ref =
            oracle::matvec(oracle::embed_1q(n_qubits, q, oracle::rx(angle)), out.ref);
        break;
      default: {
        if (n_qubits < 2) {
          apply_h(out.sim, q);
          out.ref = oracle::matvec(
              oracle::embed_1q(n_qubits, q, oracle::hadamard()), out.ref);
          break;
        }
        int t = static_cast<int>(rng() % static_cast<std::uint64_t>(n_qubits));
        while (t == q) t = static_cast<int>(rng() % static_cast<std::uint64_t>(n_qubits));
        apply_cnot(out.sim, q, t);
        out.ref = oracle::matvec(oracle::embed_cnot(n_qubits, q, t), out.ref);
        break;
      }
    }
  }
  return out;
}

TEST(ZeroState, ShapeAndNorm) {
  const StateVector s1 = new_zero_state(1);
  ASSERT_EQ(s1.dim(), 2u);
  EXPECT_EQ(s1.amps[0], complexd(1.0, 0.0));
  EXPECT_EQ(s1.amps[1], complexd(0.0, 0.0));

  const StateVector s3 = new_zero_state(3);
  ASSERT_EQ(s3.dim(), 8u);
  EXPECT_NEAR(s3.norm_sq(), 1.0, kTight);
}

TEST(ZeroState, RejectsBadQubitCount) {
  EXPECT_THROW(new_zero_state(0), std::invalid_argument);
  EXPECT_THROW(new_zero_state(-2), std::invalid_argument);
  EXPECT_THROW(new_zero_state(kMaxQubits + 1), std::invalid_argument);
}

TEST(Gates, HadamardCreatesPlus) {
  StateVector s = new_zero_state(1);
  apply_h(s, 0);
  const double r = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(s.amps[0].real(), r, kTight);
  EXPECT_NEAR(s.amps[1].real(), r, kTight);
  EXPECT_NEAR(s.amps[0].imag(), 0.0, kTight);
  EXPECT_NEAR(s.amps[1].imag(), 0.0, kTight);
}

TEST(Gates, HadamardIsInvolution) {
  StateVector s = new_zero_state(2);
  apply_h(s, 1);
  apply_h(s, 1);
  EXPECT_NEAR(std::abs(s.amps[0] - complexd(1, 0)), 0.0, kTight);
}

TEST(Gates, RyHalfAngleConvention) {
  StateVector s = new_zero_state(1);
  apply_ry(s, 0, pi / 2.0);
  EXPECT_NEAR(s.amps[0].real(), std::cos(pi / 4.0), kTight);
  EXPECT_NEAR(s.amps[1].real(), std::sin(pi / 4.0), kTight);

  StateVector f = new_zero_state(1);
  apply_ry(f, 0, pi);
  EXPECT_NEAR(std::abs(f.amps[1] - complexd(1, 0)), 0.0, kTight);
}

TEST(Gates, RxPiGivesMinusIOne) {
  StateVector s = new_zero_state(1);
  apply_rx(s, 0, pi);
  EXPECT_NEAR(std::abs(s.amps[0]), 0.0, kTight);
  EXPECT_NEAR(std::abs(s.amps[1] - complexd(0, -1)), 0.0, kTight);
}

TEST(Gates, CnotTruthTable) {
  // control = qubit 0, target = qubit 1; input index k -> expected index.
  const std::size_t expect[4] = {0, 3, 2, 1};
  for (std::size_t k = 0; k < 4; ++k) {
    StateVector s = new_zero_state(2);
    s.amps[0] = {0, 0};
    s.amps[k] = {1, 0};
    apply_cnot(s, 0, 1);
    SCOPED_TRACE(k);
    EXPECT_NEAR(std::abs(s.amps[expect[k]] - complexd(1, 0)), 0.0, kTight);
  }
}

TEST(Gates, BellState) {
  StateVector s = new_zero_state(2);
  apply_h(s, 0);
  apply_cnot(s, 0, 1);
  const double r = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(std::abs(s.amps[0] - complexd(r, 0)), 0.0, kTight);
  EXPECT_NEAR(std::abs(s.amps[3] - complexd(r, 0)), 0.0, kTight);
  EXPECT_NEAR(std::abs(s.amps[1]), 0.0, kTight);
  EXPECT_NEAR(std::abs(s.amps[2]), 0.0, kTight);
}

TEST(Gates, RejectsBadIndices) {
  StateVector s = new_zero_state(2);
  EXPECT_THROW(apply_h(s, 2), std::invalid_argument);
  EXPECT_THROW(apply_ry(s, -1, 0.1), std::invalid_argument);
  EXPECT_THROW(apply_cnot(s, 0, 0), std::invalid_argument);
  EXPECT_THROW(apply_cnot(s, 0, 5), std::invalid_argument);
}

TEST(Gates, MatchesDenseOracleOnRandomCircuits) {
  std::mt19937_64 rng(20260117ull);
  for (int n = 1; n <= 4; ++n) {
    for (int rep = 0; rep < 40; ++rep) {
      SCOPED_TRACE(testing::Message() << "n=" << n << " rep=" << rep);
      const RandomCircuitCase c = run_random_circuit(n, 24, rng);
      ASSERT_EQ(c.sim.dim(), c.ref.size());
      for (std::size_t k = 0; k < c.ref.size(); ++k)
        ASSERT_NEAR(std::abs(c.sim.amps[k] - complexd(c.ref[k])), 0.0, kOracleTol);
    }
  }
}

TEST(Gates, RandomCircuitsPreserveNorm) {
  std::mt19937_64 rng(7ull);
  for (int rep = 0; rep < 25; ++rep) {
    const RandomCircuitCase c = run_random_circuit(4, 60, rng);
    EXPECT_NEAR(c.sim.norm_sq(), 1.0, 1e-11);
  }
}

TEST(PauliStrings, ParseAndFormat) {
  const PauliString p = PauliString::parse("IXYZ");
  ASSERT_EQ(p.size(), 4);
  EXPECT_EQ(p.at(0), PauliOp::I);
  EXPECT_EQ(p.at(3), PauliOp::Z);
  EXPECT_EQ(p.str(), "IXYZ");
  EXPECT_EQ(p.weight(), 3);
  EXPECT_FALSE(p.identity());
  EXPECT_TRUE(PauliString(5).identity());
  EXPECT_THROW(PauliString::parse("XQ"), std::invalid_argument);
}

TEST(Expectation, SingleQubitKnownValues) {
  StateVector plus = new_zero_state(1);
  apply_h(plus, 0);
  EXPECT_NEAR(expectation(plus, PauliString::parse("X")), 1.0, kTight);
  EXPECT_NEAR(expectation(plus, PauliString::parse("Z")), 0.0, kTight);

  StateVector zero = new_zero_state(1);
  EXPECT_NEAR(expectation(zero, PauliString::parse("Z")), 1.0, kTight);

  StateVector one = new_zero_state(1);
  apply_ry(one, 0, pi);
  EXPECT_NEAR(expectation(one, PauliString::parse("Z")), -1.0, kTight);

  // Rx(-pi/2)|0> = (|0> + i|1>)/sqrt(2), a +1 eigenstate of Y.
  StateVector yplus = new_zero_state(1);
  apply_rx(yplus, 0, -pi / 2.0);
  EXPECT_NEAR(expectation(yplus, PauliString::parse("Y")), 1.0, kTight);
}

TEST(Expectation, MatchesDenseOracle) {
  std::mt19937_64 rng(99ull);
  const char ops[4] = {'I', 'X', 'Y', 'Z'};
  for (int rep = 0; rep < 60; ++rep) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const RandomCircuitCase c = run_random_circuit(n, 30, rng);
    std::string label;
    for (int q = 0; q < n; ++q) label.push_back(ops[rng() % 4]);
    SCOPED_TRACE(testing::Message() << "label=" << label << " rep=" << rep);
    const double got = expectation(c.sim, PauliString::parse(label));
    const double want = oracle::expectation(to_dense(c.sim), label);
    EXPECT_NEAR(got, want, kOracleTol);
  }
}

TEST(Expectation, SumIsLinear) {
  std::mt19937_64 rng(5ull);
  const RandomCircuitCase c = run_random_circuit(3, 25, rng);
  PauliSum h;
  h.add(0.75, PauliString::parse("ZIZ"));
  h.add(-1.25, PauliString::parse("XXI"));
  h.add(0.4, PauliString::parse("IYI"));
  const double direct = expectation(c.sim, h);
  const double manual = 0.75 * expectation(c.sim, PauliString::parse("ZIZ")) -
                        1.25 * expectation(c.sim, PauliString::parse("XXI")) +
                        0.4 * expectation(c.sim, PauliString::parse("IYI"));
  EXPECT_NEAR(direct, manual, kTight);
  EXPECT_EQ(h.size(), 3);
  EXPECT_NEAR(h.abs_coeff_sum(), 2.4, kTight);
}

TEST(Expectation, RejectsLengthMismatch) {
  const StateVector s = new_zero_state(2);
  EXPECT_THROW(expectation(s, PauliString::parse("ZZZ")), std::invalid_argument);
}

TEST(BitStrings, IndexRoundTripAndOrdering) {
  // Qubit 0 is the lowest-order index bit and prints leftmost.
  const BitString b = BitString::from_index(1, 3);
  EXPECT_EQ(b.str(), "100");
  EXPECT_EQ(b.index(), 1u);
  for (std::size_t k = 0; k < 16; ++k)
    EXPECT_EQ(BitString::from_index(k, 4).index(), k);
}

TEST(Sampling, ProbabilitiesSumToOne) {
  std::mt19937_64 rng(11ull);
  const RandomCircuitCase c = run_random_circuit(4, 40, rng);
  const std::vector<double> p = probabilities(c.sim);
  double total = 0.0;
  for (double v : p) {
    EXPECT_GE(v, 0.0);
    total += v;
  }
  EXPECT_NEAR(total, 1.0, 1e-11);
}

TEST(Sampling, DeterministicForFixedSeed) {
  StateVector s = new_zero_state(2);
  apply_h(s, 0);
  apply_h(s, 1);
  const auto a = sample(s, 256, 42);
  const auto b = sample(s, 256, 42);
  ASSERT_EQ(a.size(), 256u);
  EXPECT_EQ(a, b);
  const auto c = sample(s, 256, 43);
  EXPECT_NE(a, c);
}

TEST(Sampling, ZeroStateAlwaysSamplesZeros) {
  const StateVector s = new_zero_state(3);
  for (const BitString& b : sample(s, 64, 1)) EXPECT_EQ(b.str(), "000");
}

TEST(Sampling, PlusStateFrequenciesAreBalanced) {
  StateVector s = new_zero_state(1);
  apply_h(s, 0);
  int ones = 0;
  const int shots = 4096;
  for (const BitString& b : sample(s, shots, 2024)) ones += b.bits[0];
  const double frac = static_cast<double>(ones) / shots;
  EXPECT_GT(frac, 0.46);
  EXPECT_LT(frac, 0.54);
}

TEST(Sampling, EdgeCases) {
  const StateVector s = new_zero_state(1);
  EXPECT_TRUE(sample(s, 0, 9).empty());
  EXPECT_THROW(sample(s, -1, 9), std::invalid_argument);
}

}  // namespace
