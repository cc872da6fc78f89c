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

#ifndef HQCNBV_OPTIMIZER_HPP
#define HQCNBV_OPTIMIZER_HPP

// Adaptive SPSA minimization of the hybrid planning cost.
//
// The objective is total_cost(theta) = <H> + beta * C(theta), where <H> is
// the expectation of the cost Hamiltonian in the ansatz state and C is a
// classical viewpoint-quality score evaluated on the decoded candidate.
// With beta = 0 the optimizer runs on the bare quantum expectation.
//
// SPSA uses the standard gain schedules a_k = a0/(k+1+A)^0.602 and
// c_k = c0/(k+1)^0.101 with a single random +-1 perturbation per iteration
// (two cost evaluations). On top sits an adaptive learning rate with
// momentum: eta grows by a small nudge while the EMA-smoothed cost keeps
// improving and is cut in half after a stagnation window without progress.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "hqcnbv/ansatz.hpp"
#include "hqcnbv/decode.hpp"
#include "hqcnbv/hamiltonian.hpp"
#include "hqcnbv/qsim.hpp"
#include "hqcnbv/world.hpp"

namespace hqcnbv {

using ParameterVector = std::vector<double>;

struct SpsaConfig {
  int n_iter = 100;
  double a0 = 0.2;
  double A = 10.0;
  double alpha_gain = 0.602;
  double c0 = 0.1;
  double gamma_gain = 0.101;
  double mu = 0.9;                // momentum on the learning rate
  double eta0 = 0.15;             // initial learning rate
  int stagnation_window = 10;     // non-improving iterations before a cut
  double shrink = 0.5;            // learning-rate cut factor
  double ema_alpha = 0.8;         // cost smoothing factor
  double beta = 1.0;              // classical-cost mix weight
  // When set, one extra evaluation per iteration records cost(theta_k)
  // exactly; otherwise the mean of the two probe values stands in.
  bool track_cost = false;

  void validate() const {
    if (n_iter < 0) throw std::invalid_argument("SpsaConfig: n_iter negative");
    if (!(a0 > 0) || !(c0 > 0) || !(A >= 0))
      throw std::invalid_argument("SpsaConfig: gains must be positive");
    if (!(alpha_gain > 0) || !(gamma_gain > 0))
      throw std::invalid_argument("SpsaConfig: gain exponents must be positive");
    if (!(mu >= 0) || !(mu < 1))
      throw std::invalid_argument("SpsaConfig: momentum must be in [0, 1)");
    if (!(ema_alpha > 0) || !(ema_alpha < 1))
      throw std::invalid_argument("SpsaConfig: ema_alpha must be in (0, 1)");
    if (!(eta0 > 0) || !(shrink > 0) || !(shrink < 1))
      throw std::invalid_argument("SpsaConfig: eta0/shrink out of range");
    if (stagnation_window < 1)
      throw std::invalid_argument("SpsaConfig: stagnation_window must be >= 1");
    if (beta < 0) throw std::invalid_argument("SpsaConfig: beta negative");
  }
};

struct ObjectiveWeights {
  double w_E = 1.0;  // exploration; planners set 1 + coverage
  double w_M = 0.5;  // movement
  double w_S = 1.0;  // safety
  double w_R = 0.1;  // rotation regularizer

  void validate() const {
    if (!(w_E >= 1.0) || w_M < 0 || w_S < 0 || w_R < 0)
      throw std::invalid_argument("ObjectiveWeights: out of range");
  }
};

struct TraceRecord {
  int iteration = 0;
  double raw_cost = 0.0;
  double smoothed_cost = 0.0;
  double learning_rate = 0.0;  // the rate applied to this update
};

struct OptimizationTrace {
  std::vector<TraceRecord> records;
  ParameterVector best_theta;  // iterate with the lowest smoothed cost
  double best_cost = std::numeric_limits<double>::quiet_NaN();  // min raw
  long long evaluations = 0;   // total cost-function calls
};

// EMA update: prev * alpha + next * (1 - alpha).
inline double ema_smooth(double prev, double next, double ema_alpha) {
  return prev * ema_alpha + next * (1.0 - ema_alpha);
}

// One learning-rate step: eta + mu * m + (1 - mu) * d_eta, clamped.
// The momentum update m <- mu * m + (1 - mu) * (eta_new - eta_old) is the
// caller's responsibility.
inline double adaptive_learning_rate(double eta, double m, double d_eta,
                                     double mu) {
  const double next = eta + mu * m + (1.0 - mu) * d_eta;
  return std::clamp(next, 1e-4, 1.0);
}

using CostFn = std::function<double(const ParameterVector&)>;
// Cost with the iteration index attached; total_cost derives its sampling
// seed from it so both probes of one iteration see the same objective.
using IteratedCostFn = std::function<double(const ParameterVector&, int)>;

namespace detail {

struct GradientSample {
  std::vector<double> gradient;
  double f_plus = 0.0;
  double f_minus = 0.0;
};

// Symmetric SPSA difference with one shared +-1 perturbation.
template <typename Cost>
inline GradientSample spsa_gradient_sample(const Cost& cost,
                                           const ParameterVector& theta,
                                           double c_k, std::mt19937_64& rng) {
  if (!(c_k > 0)) throw std::invalid_argument("spsa_gradient: c_k must be > 0");
  const std::size_t d = theta.size();
  std::vector<double> delta(d);
  for (double& x : delta) x = (rng() & 1u) ? 1.0 : -1.0;
  ParameterVector plus = theta, minus = theta;
  for (std::size_t j = 0; j < d; ++j) {
    plus[j] += c_k * delta[j];
    minus[j] -= c_k * delta[j];
  }
  GradientSample g;
  g.f_plus = cost(plus);
  g.f_minus = cost(minus);
  g.gradient.resize(d);
  const double diff = g.f_plus - g.f_minus;
  for (std::size_t j = 0; j < d; ++j)
    g.gradient[j] = diff / (2.0 * c_k * delta[j]);
  return g;
}

}  // namespace detail

// Single SPSA gradient estimate; exactly two cost evaluations.
inline std::vector<double> spsa_gradient(const CostFn& cost,
                                         const ParameterVector& theta,
                                         double c_k, std::mt19937_64& rng) {
  return detail::spsa_gradient_sample(cost, theta, c_k, rng).gradient;
}

// Adaptive SPSA minimization. Returns the iterate with the lowest smoothed
// cost together with the full per-iteration trace.
inline std::pair<ParameterVector, OptimizationTrace> optimize(
    const IteratedCostFn& cost, ParameterVector theta0, const SpsaConfig& cfg,
    std::uint64_t seed) {
  cfg.validate();
  OptimizationTrace trace;
  if (cfg.n_iter == 0) {
    trace.best_theta = theta0;
    return {std::move(theta0), std::move(trace)};
  }
  trace.records.reserve(static_cast<std::size_t>(cfg.n_iter));

  std::mt19937_64 rng(seed);
  ParameterVector theta = std::move(theta0);
  double eta = cfg.eta0;
  double momentum = 0.0;
  double smoothed = 0.0;
  double best_smoothed = std::numeric_limits<double>::infinity();
  double best_raw = std::numeric_limits<double>::infinity();
  int stagnation = 0;

  for (int k = 0; k < cfg.n_iter; ++k) {
    const double a_k = cfg.a0 / std::pow(k + 1 + cfg.A, cfg.alpha_gain);
    const double c_k = cfg.c0 / std::pow(k + 1, cfg.gamma_gain);

    const auto cost_k = [&](const ParameterVector& th) { return cost(th, k); };
    const detail::GradientSample g =
        detail::spsa_gradient_sample(cost_k, theta, c_k, rng);
    trace.evaluations += 2;

    double raw = 0.5 * (g.f_plus + g.f_minus);
    if (cfg.track_cost) {
      raw = cost_k(theta);
      ++trace.evaluations;
    }
    smoothed = (k == 0) ? raw : ema_smooth(smoothed, raw, cfg.ema_alpha);

    // Progress-driven learning-rate adaptation.
    double d_eta = 0.0;
    if (smoothed < best_smoothed) {
      best_smoothed = smoothed;
      best_raw = std::min(best_raw, raw);
      trace.best_theta = theta;
      stagnation = 0;
      d_eta = 0.05 * eta;
    } else {
      best_raw = std::min(best_raw, raw);
      if (++stagnation >= cfg.stagnation_window) {
        d_eta = -cfg.shrink * eta;
        stagnation = 0;
      }
    }
    const double eta_next = adaptive_learning_rate(eta, momentum, d_eta, cfg.mu);
    momentum = cfg.mu * momentum + (1.0 - cfg.mu) * (eta_next - eta);
    eta = eta_next;

    trace.records.push_back({k, raw, smoothed, eta});
    for (std::size_t j = 0; j < theta.size(); ++j)
      theta[j] -= eta * a_k * g.gradient[j];
  }

  trace.best_cost = best_raw;
  return {trace.best_theta, std::move(trace)};
}

inline std::pair<ParameterVector, OptimizationTrace> optimize(
    const CostFn& cost, ParameterVector theta0, const SpsaConfig& cfg,
    std::uint64_t seed) {
  return optimize(
      IteratedCostFn{[&cost](const ParameterVector& th, int) { return cost(th); }},
      std::move(theta0), cfg, seed);
}

namespace detail {

// Mean squared wrapped parameter change, normalized to [0, 1] by pi^2.
// Zero when there is no comparable previous parameter vector.
inline double rotation_penalty(const ParameterVector& theta_prev,
                               const ParameterVector& theta_now) {
  if (theta_prev.empty() || theta_prev.size() != theta_now.size()) return 0.0;
  constexpr double kPi = 3.14159265358979323846;
  double acc = 0.0;
  for (std::size_t j = 0; j < theta_now.size(); ++j) {
    const double d = angle_diff(theta_now[j], theta_prev[j]);
    acc += d * d;
  }
  return acc / (static_cast<double>(theta_now.size()) * kPi * kPi);
}

}  // namespace detail

// Classical viewpoint-quality objective C = w_E*C_E + w_M*C_M + w_S*C_S
// + w_R*C_R. Lower is better; C_E rewards newly visible unknown area,
// C_M penalizes travel, C_S penalizes moves that end close to known
// obstacles relative to the distance traveled, and C_R penalizes large
// parameter swings between consecutive planning steps.
inline double classical_objective(const Viewpoint& v_candidate,
                                  const Viewpoint& v_current, const GridMap& map,
                                  const ObjectiveWeights& w,
                                  const ParameterVector& theta_prev,
                                  const ParameterVector& theta_now) {
  const double range = map.scene().camera.range;
  const int disc = cells_in_disc(map, v_candidate.x, v_candidate.y, range);
  const double c_e =
      disc > 0 ? -static_cast<double>(predicted_unknown_visible(map, v_candidate)) /
                     static_cast<double>(disc)
               : 0.0;
  const double d_travel = travel_distance(v_current, v_candidate);
  const double c_m = std::min(d_travel / range, 1.0);
  const double d_obs =
      distance_to_known_obstacle(map, v_candidate.x, v_candidate.y);
  const double c_s = 1.0 - 1.0 / (1.0 + std::exp(-(d_obs - d_travel)));
  const double c_r = detail::rotation_penalty(theta_prev, theta_now);
  return w.w_E * c_e + w.w_M * c_m + w.w_S * c_s + w.w_R * c_r;
}

// Everything total_cost needs besides theta. The geometric score of a
// decoded candidate depends only on its bitstring, so those parts are
// memoized per readout index for the lifetime of the context.
struct CostContext {
  const AnsatzConfig* ansatz = nullptr;
  const PauliSum* hamiltonian = nullptr;
  const GridMap* map = nullptr;
  Viewpoint v_current;
  ObjectiveWeights weights;
  DecodeTable table;
  double beta = 1.0;
  int shots = 128;
  std::uint64_t rng_seed = 0;
  ParameterVector theta_prev;  // empty on the first planning step

  mutable std::unordered_map<std::size_t, double> geometric_cache;
};

namespace detail {

// w_E*C_E + w_M*C_M + w_S*C_S for one readout; theta-independent.
inline double geometric_score(const CostContext& ctx, const BitString& bits) {
  const std::size_t key = bits.index();
  if (const auto it = ctx.geometric_cache.find(key);
      it != ctx.geometric_cache.end())
    return it->second;
  const Viewpoint v =
      decode_parameters(bits, ctx.v_current, *ctx.map, ctx.table);
  const double score =
      classical_objective(v, ctx.v_current, *ctx.map, ctx.weights, {}, {});
  ctx.geometric_cache.emplace(key, score);
  return score;
}

}  // namespace detail

// Hybrid cost <H> + beta * C(theta). The classical part scores the
// majority-vote readout of the prepared state, sampled with the seed
// carried by the context, so the value is deterministic given (theta, ctx).
inline double total_cost(const ParameterVector& theta, const CostContext& ctx) {
  const StateVector state = prepare_state(*ctx.ansatz, theta);
  double value = expectation(state, *ctx.hamiltonian);
  if (ctx.beta != 0.0) {
    const std::vector<BitString> readouts =
        sample(state, ctx.shots, ctx.rng_seed);
    const BitString voted = majority_vote(readouts);
    const double classical =
        detail::geometric_score(ctx, voted) +
        ctx.weights.w_R * detail::rotation_penalty(ctx.theta_prev, theta);
    value += ctx.beta * classical;
  }
  return value;
}

}  // namespace hqcnbv

#endif  // HQCNBV_OPTIMIZER_HPP
