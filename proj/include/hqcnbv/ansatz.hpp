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

#ifndef HQCNBV_ANSATZ_HPP
#define HQCNBV_ANSATZ_HPP

// Variational state preparation. The circuit is
//
//   |psi(theta)> = U_L ... U_2 U_1 H^(x)n |0...0>
//
// where each layer U_l applies one Ry rotation per qubit (in register
// order), the layer's CNOT entanglers, then one Rx rotation per qubit.
// Parameters are packed layer-major: layer l owns
// theta[l*2n .. l*2n + n) for Ry and theta[l*2n + n .. (l+1)*2n) for Rx.
//
// Entangler schedules come in four variants:
//   FA - intra-group chains plus inter-group links (alternating direction
//        between even and odd layers);
//   NE - no entanglers;
//   IG - intra-group chains only;
//   EG - inter-group links only.
// For every layer the FA schedule is exactly the IG schedule followed by
// the EG schedule.

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hqcnbv/hamiltonian.hpp"
#include "hqcnbv/qsim.hpp"

namespace hqcnbv {

enum class AnsatzVariant { FA, NE, IG, EG };

inline std::string_view ansatz_name(AnsatzVariant v) {
  switch (v) {
    case AnsatzVariant::FA: return "fa";
    case AnsatzVariant::NE: return "ne";
    case AnsatzVariant::IG: return "ig";
    case AnsatzVariant::EG: return "eg";
  }
  throw std::logic_error("ansatz_name: unknown variant");
}

inline AnsatzVariant parse_ansatz(std::string_view s) {
  if (s == "fa") return AnsatzVariant::FA;
  if (s == "ne") return AnsatzVariant::NE;
  if (s == "ig") return AnsatzVariant::IG;
  if (s == "eg") return AnsatzVariant::EG;
  throw std::invalid_argument("parse_ansatz: expected fa|ne|ig|eg, got '" +
                              std::string(s) + "'");
}

struct AnsatzConfig {
  QubitLayout layout;
  int layers = 5;
  AnsatzVariant variant = AnsatzVariant::FA;

  void validate() const {
    layout.validate();
    if (layers < 1) throw std::invalid_argument("AnsatzConfig: layers must be >= 1");
  }
};

// Each layer carries n Ry angles plus n Rx angles.
inline int parameter_count(const AnsatzConfig& cfg) {
  cfg.validate();
  return cfg.layers * 2 * cfg.layout.n_total();
}

namespace detail {

inline void append_intra_group(const QubitLayout& l,
                               std::vector<std::pair<int, int>>& out) {
  const int leads[4] = {l.l_dir(), l.l_dist(), l.l_adj(), l.l_orient()};
  const int sizes[4] = {l.n_dir, l.n_dist, l.n_adj, l.n_orient};
  for (int g = 0; g < 4; ++g)
    for (int i = 0; i + 1 < sizes[g]; ++i)
      out.emplace_back(leads[g] + i, leads[g] + i + 1);
}

inline void append_inter_group(const QubitLayout& l, int layer,
                               std::vector<std::pair<int, int>>& out) {
  // Links couple group leaders; a link is skipped when either group is
  // empty. Odd layers reverse both the list order and the CNOT direction
  // so information flows back toward the direction pair.
  std::vector<std::pair<int, int>> links;
  if (l.n_dir > 0 && l.n_adj > 0) links.emplace_back(l.l_dir(), l.l_adj());
  if (l.n_dist > 0 && l.n_adj > 0) links.emplace_back(l.l_dist(), l.l_adj());
  if (l.n_dir > 0 && l.n_orient > 0) links.emplace_back(l.l_dir(), l.l_orient());
  if (layer % 2 == 0) {
    out.insert(out.end(), links.begin(), links.end());
  } else {
    for (auto it = links.rbegin(); it != links.rend(); ++it)
      out.emplace_back(it->second, it->first);
  }
}

}  // namespace detail

// CNOT pairs (control, target) applied by layer `layer` (0-based), in
// application order.
inline std::vector<std::pair<int, int>> entangler_schedule(const AnsatzConfig& cfg,
                                                           int layer) {
  cfg.validate();
  if (layer < 0 || layer >= cfg.layers)
    throw std::invalid_argument("entangler_schedule: layer out of range");
  std::vector<std::pair<int, int>> out;
  switch (cfg.variant) {
    case AnsatzVariant::NE:
      break;
    case AnsatzVariant::IG:
      detail::append_intra_group(cfg.layout, out);
      break;
    case AnsatzVariant::EG:
      detail::append_inter_group(cfg.layout, layer, out);
      break;
    case AnsatzVariant::FA:
      detail::append_intra_group(cfg.layout, out);
      detail::append_inter_group(cfg.layout, layer, out);
      break;
  }
  return out;
}

// Full gate list for |psi(theta)>, starting from |0...0>.
inline std::vector<Gate> build_circuit(const AnsatzConfig& cfg,
                                       std::span<const double> theta) {
  cfg.validate();
  const int n = cfg.layout.n_total();
  if (static_cast<int>(theta.size()) != parameter_count(cfg))
    throw std::invalid_argument("build_circuit: expected " +
                                std::to_string(parameter_count(cfg)) +
                                " parameters, got " + std::to_string(theta.size()));
  std::vector<Gate> gates;
  gates.reserve(static_cast<std::size_t>(n + cfg.layers * (3 * n + 9)));
  for (int q = 0; q < n; ++q) gates.push_back(Gate::h(q));
  for (int layer = 0; layer < cfg.layers; ++layer) {
    const int off = layer * 2 * n;
    for (int q = 0; q < n; ++q) gates.push_back(Gate::ry(q, theta[off + q]));
    for (const auto& [c, t] : entangler_schedule(cfg, layer))
      gates.push_back(Gate::cnot(c, t));
    for (int q = 0; q < n; ++q) gates.push_back(Gate::rx(q, theta[off + n + q]));
  }
  return gates;
}

inline StateVector prepare_state(const AnsatzConfig& cfg,
                                 std::span<const double> theta) {
  const std::vector<Gate> gates = build_circuit(cfg, theta);
  StateVector s = new_zero_state(cfg.layout.n_total());
  apply_circuit(s, gates);
  return s;
}

}  // namespace hqcnbv

#endif  // HQCNBV_ANSATZ_HPP
