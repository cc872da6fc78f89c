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

#ifndef HQCNBV_DECODE_HPP
#define HQCNBV_DECODE_HPP

// Measurement decoding: turning sampled bitstrings into candidate
// viewpoints, plus the feasibility checks that guard the planner.
//
// A register of n_dir + n_dist + n_adj + n_orient qubits is read group by
// group; within a group the first qubit is the most significant bit. The
// default 10-qubit layout decodes as
//
//   bits 0-1  direction     k -> k * pi/2        (E, N, W, S)
//   bits 2-3  distance      k -> d_max*(k+1)/4
//   bits 4-5  adjustment    m -> (m - 1.5)*pi/6
//   bits 6-9  orientation   j -> 2*pi*j/16
//
// and the candidate position is the current one advanced by d along
// direction + adjustment, clamped to the map rectangle.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "hqcnbv/hamiltonian.hpp"
#include "hqcnbv/qsim.hpp"
#include "hqcnbv/world.hpp"

namespace hqcnbv {

// Per-bit majority over equal-length samples; a tie resolves to 0.
inline BitString majority_vote(const std::vector<BitString>& samples) {
  if (samples.empty())
    throw std::invalid_argument("majority_vote: no samples");
  const std::size_t len = samples.front().bits.size();
  std::vector<std::size_t> ones(len, 0);
  for (const BitString& s : samples) {
    if (s.bits.size() != len)
      throw std::invalid_argument("majority_vote: samples differ in length");
    for (std::size_t i = 0; i < len; ++i) ones[i] += s.bits[i];
  }
  BitString out;
  out.bits.resize(len);
  for (std::size_t i = 0; i < len; ++i)
    out.bits[i] = 2 * ones[i] > samples.size() ? 1 : 0;
  return out;
}

namespace detail {

// Unsigned value of one register group, first qubit most significant.
inline unsigned group_value(const BitString& bits, int offset, int size) {
  unsigned v = 0;
  for (int i = 0; i < size; ++i) {
    v = (v << 1) |
        static_cast<unsigned>(bits.bits[static_cast<std::size_t>(offset + i)]);
  }
  return v;
}

}  // namespace detail

// Fixed numeric maps from group values to motion parameters. Every map is
// strictly monotone in its argument, hence a bijection onto its value set.
struct DecodeTable {
  QubitLayout layout = QubitLayout::from_qubits_per_param(4);
  double d_max = 8.0;

  // k in [0, 2^n_dir): evenly spaced bearings starting east, CCW.
  double direction(unsigned k) const {
    return 2.0 * kPi * static_cast<double>(k) /
           static_cast<double>(1u << layout.n_dir);
  }

  // k in [0, 2^n_dist): travel distance, never zero, max d_max.
  double distance(unsigned k) const {
    return d_max * static_cast<double>(k + 1) /
           static_cast<double>(1u << layout.n_dist);
  }

  // m in [0, 2^n_adj): heading offset in steps of pi/6, centered on zero.
  double adjustment(unsigned m) const {
    const double mid =
        0.5 * static_cast<double>((1u << layout.n_adj) - 1u);
    return (static_cast<double>(m) - mid) * (kPi / 6.0);
  }

  // j in [0, 2^n_orient): view orientation on a uniform angular grid.
  double orientation(unsigned j) const {
    return 2.0 * kPi * static_cast<double>(j) /
           static_cast<double>(1u << layout.n_orient);
  }

 private:
  static constexpr double kPi = 3.14159265358979323846;
};

// Decodes one register readout into a candidate viewpoint relative to the
// current pose. Positions are clamped to the map rectangle; feasibility is
// a separate question answered by validate_trajectory().
inline Viewpoint decode_parameters(const BitString& bits,
                                   const Viewpoint& v_current,
                                   const GridMap& map,
                                   const DecodeTable& table = {}) {
  const QubitLayout& l = table.layout;
  if (bits.size() != l.n_total())
    throw std::invalid_argument("decode_parameters: bitstring length mismatch");
  const unsigned kd = detail::group_value(bits, l.l_dir(), l.n_dir);
  const unsigned ks = detail::group_value(bits, l.l_dist(), l.n_dist);
  const unsigned km = detail::group_value(bits, l.l_adj(), l.n_adj);
  const unsigned kj = detail::group_value(bits, l.l_orient(), l.n_orient);

  const double bearing = table.direction(kd) + table.adjustment(km);
  const double d = table.distance(ks);
  Viewpoint v;
  v.x = std::clamp(v_current.x + d * std::cos(bearing), 0.0, map.scene().width);
  v.y = std::clamp(v_current.y + d * std::sin(bearing), 0.0, map.scene().height);
  v.theta = wrap_2pi(table.orientation(kj));
  return v;
}

// A move is admissible when the straight segment stays inside known free
// space and the destination cell itself is known free.
inline bool validate_trajectory(const GridMap& map, const Viewpoint& v_from,
                                const Viewpoint& v_to) {
  if (!map.position_in_bounds(v_to.x, v_to.y)) return false;
  const auto [ix, iy] = map.cell_of(v_to.x, v_to.y);
  if (map.at(ix, iy) != CellState::Free) return false;
  return is_path_free(map, v_from, v_to);
}

// Projects an infeasible proposal back onto the feasible set: the farthest
// admissible point along the ray toward the proposal, searched on a grid of
// 0.25 * resolution. Keeps the proposed orientation; collapses to the
// current position when no forward step is admissible.
inline Viewpoint fallback_project(const GridMap& map, const Viewpoint& v_current,
                                  const Viewpoint& v_quantum) {
  Viewpoint full{v_quantum.x, v_quantum.y, v_quantum.theta};
  if (validate_trajectory(map, v_current, full)) return full;

  const double dx = v_quantum.x - v_current.x;
  const double dy = v_quantum.y - v_current.y;
  const double len = std::hypot(dx, dy);
  const double step = 0.25 * map.scene().resolution;
  if (len > 0.0) {
    for (int k = static_cast<int>(std::floor(len / step)); k >= 1; --k) {
      const double s = static_cast<double>(k) * step;
      if (s >= len) continue;  // that is the endpoint, already rejected
      Viewpoint v{v_current.x + dx / len * s, v_current.y + dy / len * s,
                  v_quantum.theta};
      if (validate_trajectory(map, v_current, v)) return v;
    }
  }
  return Viewpoint{v_current.x, v_current.y, v_quantum.theta};
}

}  // namespace hqcnbv

#endif  // HQCNBV_DECODE_HPP
