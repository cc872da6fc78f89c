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

#ifndef HQCNBV_HAMILTONIAN_HPP
#define HQCNBV_HAMILTONIAN_HPP

// Cost-Hamiltonian construction for view planning. The register is split
// into four parameter groups (direction, distance, heading adjustment,
// orientation); each builder maps scene features onto Pauli terms over its
// group, and assemble_hamiltonian() concatenates them according to the
// selected variant:
//
//   CH  - complete Hamiltonian, all five component families;
//   NC  - coherence terms removed entirely;
//   SQX - coherence retained but restricted to single-qubit X mixing
//         (the two-qubit XX couplings are dropped).
//
// Terms whose coefficient works out to exactly zero are never emitted.

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>

#include "hqcnbv/qsim.hpp"

namespace hqcnbv {

// Compass bearings, counterclockwise from east; also the index order of
// ExplorationFeatures::unexplored.
enum class Bearing : int {
  East = 0,
  NorthEast = 1,
  North = 2,
  NorthWest = 3,
  West = 4,
  SouthWest = 5,
  South = 6,
  SouthEast = 7,
};

inline constexpr int kNumBearings = 8;

inline double bearing_angle(Bearing b) {
  return static_cast<int>(b) * (std::numbers::pi / 4.0);
}

// Sector index of an angle under the same discretization (nearest bearing).
inline Bearing bearing_of_angle(double angle) {
  const double two_pi = 2.0 * std::numbers::pi;
  double a = std::fmod(angle, two_pi);
  if (a < 0) a += two_pi;
  const int k = static_cast<int>(std::llround(a / (std::numbers::pi / 4.0))) % 8;
  return static_cast<Bearing>(k);
}

// --- register layout ------------------------------------------------------

// Qubit groups are laid out contiguously: direction, distance, adjustment,
// orientation. The paper-scale register uses q_p = 4 (2 + 2 + 2 + 4 = 10
// qubits); smaller layouts are allowed for toy studies.
struct QubitLayout {
  int n_dir = 2;
  int n_dist = 2;
  int n_adj = 2;
  int n_orient = 4;

  static QubitLayout from_qubits_per_param(int q_p) {
    if (q_p < 2)
      throw std::invalid_argument("QubitLayout: qubits_per_param must be >= 2");
    QubitLayout l;
    l.n_dir = 2;
    l.n_dist = q_p - 2;
    l.n_adj = q_p - 2;
    l.n_orient = q_p;
    return l;
  }

  int l_dir() const { return 0; }
  int l_dist() const { return n_dir; }
  int l_adj() const { return n_dir + n_dist; }
  int l_orient() const { return n_dir + n_dist + n_adj; }
  int n_total() const { return n_dir + n_dist + n_adj + n_orient; }

  void validate() const {
    if (n_dir < 1 || n_dist < 0 || n_adj < 0 || n_orient < 1)
      throw std::invalid_argument("QubitLayout: invalid group sizes");
    if (n_total() > kMaxQubits)
      throw std::invalid_argument("QubitLayout: register too large");
  }

  bool operator==(const QubitLayout&) const = default;
};

// --- scene features -------------------------------------------------------

// Scalar summary of the known map around the current viewpoint; produced by
// the world module and consumed by the Hamiltonian builders.
struct ExplorationFeatures {
  // Per-bearing weight of unknown space in [0,1], indexed by Bearing. Any
  // normalization works; the builders only take contrasts between sectors.
  std::array<double, kNumBearings> unexplored{};
  double d_obs = 0.0;        // distance to nearest known obstacle, capped
  double d_max = 8.0;        // sensing range; cap for d_obs
  double coverage = 0.0;     // fraction of the map already observed
  double point_density = 0.0;  // unknown-cell density near the viewpoint
  double dispersion = 1.0;     // angular spread of unknown mass, 0..1
  double target_angle = 0.0;   // dominant direction toward unknown space

  double at(Bearing b) const {
    return unexplored[static_cast<std::size_t>(static_cast<int>(b))];
  }

  void validate() const {
    for (double e : unexplored)
      if (!(e >= 0.0 && e <= 1.0))
        throw std::invalid_argument("ExplorationFeatures: unexplored out of [0,1]");
    if (!(d_max > 0.0))
      throw std::invalid_argument("ExplorationFeatures: d_max must be positive");
    if (!(d_obs >= 0.0 && d_obs <= d_max))
      throw std::invalid_argument("ExplorationFeatures: d_obs out of [0,d_max]");
    if (!(coverage >= 0.0 && coverage <= 1.0))
      throw std::invalid_argument("ExplorationFeatures: coverage out of [0,1]");
    if (!(point_density >= 0.0 && point_density <= 1.0))
      throw std::invalid_argument("ExplorationFeatures: point_density out of [0,1]");
    if (!(dispersion >= 0.0 && dispersion <= 1.0))
      throw std::invalid_argument("ExplorationFeatures: dispersion out of [0,1]");
    if (!std::isfinite(target_angle))
      throw std::invalid_argument("ExplorationFeatures: target_angle not finite");
  }
};

struct HamiltonianWeights {
  double lambda_dir = 1.0;
  double lambda_diag = 0.5;
  double lambda_dist = 0.8;
  double lambda_adj = 0.6;
  double lambda_orient = 1.0;
  double lambda_orient_x = 0.5;
  double lambda_orient_zz = 0.2;
  double lambda_coh = 0.4;
  double lambda_coh_x = 0.2;
  double gamma = 0.5;  // geometric decay of the orientation X ladder
};

enum class HamiltonianVariant { CH, NC, SQX };

inline std::string_view variant_name(HamiltonianVariant v) {
  switch (v) {
    case HamiltonianVariant::CH: return "ch";
    case HamiltonianVariant::NC: return "nc";
    case HamiltonianVariant::SQX: return "sqx";
  }
  throw std::logic_error("variant_name: unknown variant");
}

inline HamiltonianVariant parse_variant(std::string_view s) {
  if (s == "ch") return HamiltonianVariant::CH;
  if (s == "nc") return HamiltonianVariant::NC;
  if (s == "sqx") return HamiltonianVariant::SQX;
  throw std::invalid_argument("parse_variant: expected ch|nc|sqx, got '" +
                              std::string(s) + "'");
}

namespace detail {

inline void add_z(PauliSum& h, int n, int q, double coeff) {
  if (coeff == 0.0) return;
  h.add(coeff, PauliString(n).set(q, PauliOp::Z));
}

inline void add_x(PauliSum& h, int n, int q, double coeff) {
  if (coeff == 0.0) return;
  h.add(coeff, PauliString(n).set(q, PauliOp::X));
}

inline void add_zz(PauliSum& h, int n, int q0, int q1, double coeff) {
  if (coeff == 0.0) return;
  h.add(coeff, PauliString(n).set(q0, PauliOp::Z).set(q1, PauliOp::Z));
}

inline void add_xx(PauliSum& h, int n, int q0, int q1, double coeff) {
  if (coeff == 0.0) return;
  h.add(coeff, PauliString(n).set(q0, PauliOp::X).set(q1, PauliOp::X));
}

}  // namespace detail

// Grid index of the orientation sector containing `angle`, using
// round-to-nearest over 2^n_bits sectors.
inline int encode_target_angle(double angle, int n_bits) {
  if (n_bits < 1 || n_bits > 16)
    throw std::invalid_argument("encode_target_angle: bad bit count");
  const double two_pi = 2.0 * std::numbers::pi;
  double a = std::fmod(angle, two_pi);
  if (a < 0) a += two_pi;
  const long sectors = 1L << n_bits;
  return static_cast<int>(std::llround(a / two_pi * static_cast<double>(sectors)) %
                          sectors);
}

// Direction terms: two biased Z fields plus one diagonal ZZ coupling on the
// direction pair. The tanh arguments contrast unexplored mass across the
// axes so minimization favors bit patterns that decode toward unknown
// space.
inline PauliSum build_direction(const ExplorationFeatures& f,
                                const HamiltonianWeights& w,
                                const QubitLayout& layout) {
  layout.validate();
  if (layout.n_dir != 2)
    throw std::invalid_argument("build_direction: direction group must be 2 qubits");
  const int n = layout.n_total();
  const double a1 = w.lambda_dir * std::tanh(f.at(Bearing::West) + f.at(Bearing::South) -
                                             f.at(Bearing::East) - f.at(Bearing::North));
  const double a2 = w.lambda_dir * std::tanh(f.at(Bearing::North) + f.at(Bearing::South) -
                                             f.at(Bearing::East) - f.at(Bearing::West));
  const double azz =
      w.lambda_diag * std::tanh(f.at(Bearing::SouthEast) + f.at(Bearing::NorthEast) -
                                f.at(Bearing::SouthWest) - f.at(Bearing::NorthWest));
  PauliSum h;
  detail::add_z(h, n, layout.l_dir(), a1);
  detail::add_z(h, n, layout.l_dir() + 1, a2);
  detail::add_zz(h, n, layout.l_dir(), layout.l_dir() + 1, azz);
  return h;
}

// Distance terms: a binary-weighted Z ladder scaled by the clearance ratio
// d_obs/d_max. Larger clearance biases toward larger decoded travel.
inline PauliSum build_distance(const ExplorationFeatures& f,
                               const HamiltonianWeights& w,
                               const QubitLayout& layout) {
  layout.validate();
  if (layout.n_dist < 1)
    throw std::invalid_argument("build_distance: needs at least one distance qubit");
  if (!(f.d_max > 0.0))
    throw std::invalid_argument("build_distance: d_max must be positive");
  const int n = layout.n_total();
  PauliSum h;
  const double ratio = f.d_obs / f.d_max;
  for (int i = 0; i < layout.n_dist; ++i)
    detail::add_z(h, n, layout.l_dist() + i,
                  w.lambda_dist * std::ldexp(1.0, -(i + 1)) * ratio);
  return h;
}

// Heading-adjustment terms: the same ladder shape, driven by how much of
// the map is still uncovered.
inline PauliSum build_adjustment(const ExplorationFeatures& f,
                                 const HamiltonianWeights& w,
                                 const QubitLayout& layout) {
  layout.validate();
  if (layout.n_adj < 1)
    throw std::invalid_argument("build_adjustment: needs at least one adjustment qubit");
  const int n = layout.n_total();
  PauliSum h;
  for (int i = 0; i < layout.n_adj; ++i)
    detail::add_z(h, n, layout.l_adj() + i,
                  w.lambda_adj * std::ldexp(1.0, -(i + 1)) * (1.0 - f.coverage));
  return h;
}

// Orientation terms. The Z fields steer each orientation bit toward the
// binary encoding of target_angle (sign +1 where the encoded bit is 1, so
// minimization drives <Z> to -1, i.e. bit = 1); bits are taken MSB-first
// across the group. Adjacent ZZ couplings stabilize the sector choice, and
// an X ladder with geometric decay keeps mixing alive when the unknown
// mass is dispersed.
inline PauliSum build_orientation(const ExplorationFeatures& f,
                                  const HamiltonianWeights& w,
                                  const QubitLayout& layout) {
  layout.validate();
  if (layout.n_orient < 1)
    throw std::invalid_argument("build_orientation: needs at least one orientation qubit");
  const int n = layout.n_total();
  const int j = encode_target_angle(f.target_angle, layout.n_orient);
  PauliSum h;
  const double z_scale = f.point_density * (1.0 - f.dispersion);
  for (int i = 0; i < layout.n_orient; ++i) {
    const int bit = (j >> (layout.n_orient - 1 - i)) & 1;
    const double sign = bit ? 1.0 : -1.0;
    detail::add_z(h, n, layout.l_orient() + i,
                  w.lambda_orient * std::ldexp(1.0, -(i + 1)) * z_scale * sign);
  }
  for (int i = 0; i + 1 < layout.n_orient; ++i)
    detail::add_zz(h, n, layout.l_orient() + i, layout.l_orient() + i + 1,
                   w.lambda_orient_zz * z_scale);
  for (int i = 0; i < layout.n_orient; ++i)
    detail::add_x(h, n, layout.l_orient() + i,
                  w.lambda_orient_x * f.dispersion * std::pow(w.gamma, i));
  return h;
}

// Coherence terms couple the leading qubit of each group: XX pairs across
// (direction, adjustment), (distance, adjustment) and (direction,
// orientation), plus a single-X field on every group leader. All scale
// with the uncovered fraction so they anneal away as the map completes.
// `include_xx` is false under the SQX variant.
inline PauliSum build_coherence(const ExplorationFeatures& f,
                                const HamiltonianWeights& w,
                                const QubitLayout& layout,
                                bool include_xx = true) {
  layout.validate();
  if (layout.n_dist < 1 || layout.n_adj < 1)
    throw std::invalid_argument("build_coherence: all four groups must be non-empty");
  const int n = layout.n_total();
  const double scale = 1.0 - f.coverage;
  PauliSum h;
  if (include_xx) {
    detail::add_xx(h, n, layout.l_dir(), layout.l_adj(), w.lambda_coh * scale);
    detail::add_xx(h, n, layout.l_dist(), layout.l_adj(), w.lambda_coh * scale);
    detail::add_xx(h, n, layout.l_dir(), layout.l_orient(), w.lambda_coh * scale);
  }
  for (int q : {layout.l_dir(), layout.l_dist(), layout.l_adj(), layout.l_orient()})
    detail::add_x(h, n, q, w.lambda_coh_x * scale);
  return h;
}

inline PauliSum assemble_hamiltonian(const ExplorationFeatures& f,
                                     const HamiltonianWeights& w,
                                     const QubitLayout& layout,
                                     HamiltonianVariant variant) {
  f.validate();
  PauliSum h = build_direction(f, w, layout);
  h.append(build_distance(f, w, layout));
  h.append(build_adjustment(f, w, layout));
  h.append(build_orientation(f, w, layout));
  if (variant != HamiltonianVariant::NC)
    h.append(build_coherence(f, w, layout,
                             /*include_xx=*/variant != HamiltonianVariant::SQX));
  return h;
}

}  // namespace hqcnbv

#endif  // HQCNBV_HAMILTONIAN_HPP
