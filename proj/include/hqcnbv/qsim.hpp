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

#ifndef HQCNBV_QSIM_HPP
#define HQCNBV_QSIM_HPP

// Dense statevector simulator for small qubit counts.
//
// Conventions used throughout the library:
//  * qubit 0 maps to the lowest-order bit of the amplitude index;
//  * basis index k holds qubit q in bit (k >> q) & 1;
//  * BitString::bits[q] is the value of qubit q, and the printable form
//    lists qubit 0 first (leftmost).
// Rotation gates use the half-angle convention, Ry(a) = exp(-i*a*Y/2).

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hqcnbv {

using complexd = std::complex<double>;

inline constexpr int kMaxQubits = 24;

// --- deterministic RNG helpers -------------------------------------------

// splitmix64 finalizer; used to derive independent streams from one seed.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Uniform double in [0, 1) built from the top 53 bits of the generator
// output. std::uniform_real_distribution is not bit-stable across standard
// library implementations; this is.
inline double uniform_double(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// --- state ----------------------------------------------------------------

struct StateVector {
  int n_qubits = 0;
  std::vector<complexd> amps;

  std::size_t dim() const { return amps.size(); }

  double norm_sq() const {
    double s = 0.0;
    for (const complexd& a : amps) s += std::norm(a);
    return s;
  }
};

// |0...0> on n qubits.
inline StateVector new_zero_state(int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits)
    throw std::invalid_argument("new_zero_state: qubit count out of range [1, " +
                                std::to_string(kMaxQubits) + "]");
  StateVector s;
  s.n_qubits = n_qubits;
  s.amps.assign(std::size_t{1} << n_qubits, complexd{0.0, 0.0});
  s.amps[0] = complexd{1.0, 0.0};
  return s;
}

namespace detail {

inline void check_qubit(const StateVector& s, int q, const char* who) {
  if (q < 0 || q >= s.n_qubits)
    throw std::invalid_argument(std::string(who) + ": qubit index out of range");
}

// Applies the 2x2 matrix [[m00, m01], [m10, m11]] to `q` of every basis pair.
inline void apply_1q(StateVector& s, int q, complexd m00, complexd m01,
                     complexd m10, complexd m11) {
  const std::size_t bit = std::size_t{1} << q;
  const std::size_t dim = s.dim();
  for (std::size_t block = 0; block < dim; block += 2 * bit) {
    for (std::size_t j = 0; j < bit; ++j) {
      const std::size_t i0 = block + j;
      const std::size_t i1 = i0 + bit;
      const complexd a0 = s.amps[i0];
      const complexd a1 = s.amps[i1];
      s.amps[i0] = m00 * a0 + m01 * a1;
      s.amps[i1] = m10 * a0 + m11 * a1;
    }
  }
}

}  // namespace detail

inline void apply_h(StateVector& s, int q) {
  detail::check_qubit(s, q, "apply_h");
  const double r = 1.0 / std::sqrt(2.0);
  detail::apply_1q(s, q, {r, 0}, {r, 0}, {r, 0}, {-r, 0});
}

inline void apply_ry(StateVector& s, int q, double angle) {
  detail::check_qubit(s, q, "apply_ry");
  const double c = std::cos(angle / 2.0);
  const double sn = std::sin(angle / 2.0);
  detail::apply_1q(s, q, {c, 0}, {-sn, 0}, {sn, 0}, {c, 0});
}

inline void apply_rx(StateVector& s, int q, double angle) {
  detail::check_qubit(s, q, "apply_rx");
  const double c = std::cos(angle / 2.0);
  const double sn = std::sin(angle / 2.0);
  detail::apply_1q(s, q, {c, 0}, {0, -sn}, {0, -sn}, {c, 0});
}

inline void apply_cnot(StateVector& s, int control, int target) {
  detail::check_qubit(s, control, "apply_cnot");
  detail::check_qubit(s, target, "apply_cnot");
  if (control == target)
    throw std::invalid_argument("apply_cnot: control equals target");
  const std::size_t cbit = std::size_t{1} << control;
  const std::size_t tbit = std::size_t{1} << target;
  const std::size_t dim = s.dim();
  for (std::size_t k = 0; k < dim; ++k) {
    // Swap each control-set pair exactly once, from the target-clear side.
    if ((k & cbit) && !(k & tbit)) std::swap(s.amps[k], s.amps[k | tbit]);
  }
}

// Small gate IR so circuits can be built, inspected and replayed in tests.
struct Gate {
  enum class Kind { H, Ry, Rx, Cnot };
  Kind kind;
  int q0 = 0;
  int q1 = -1;      // Cnot target; unused otherwise
  double angle = 0; // Ry/Rx only

  static Gate h(int q) { return {Kind::H, q, -1, 0.0}; }
  static Gate ry(int q, double a) { return {Kind::Ry, q, -1, a}; }
  static Gate rx(int q, double a) { return {Kind::Rx, q, -1, a}; }
  static Gate cnot(int c, int t) { return {Kind::Cnot, c, t, 0.0}; }
};

inline void apply_gate(StateVector& s, const Gate& g) {
  switch (g.kind) {
    case Gate::Kind::H: apply_h(s, g.q0); return;
    case Gate::Kind::Ry: apply_ry(s, g.q0, g.angle); return;
    case Gate::Kind::Rx: apply_rx(s, g.q0, g.angle); return;
    case Gate::Kind::Cnot: apply_cnot(s, g.q0, g.q1); return;
  }
  throw std::logic_error("apply_gate: unknown gate kind");
}

inline void apply_circuit(StateVector& s, std::span<const Gate> gates) {
  for (const Gate& g : gates) apply_gate(s, g);
}

// --- Pauli strings and sums ----------------------------------------------

enum class PauliOp : char { I = 'I', X = 'X', Y = 'Y', Z = 'Z' };

struct PauliString {
  std::vector<PauliOp> ops;  // ops[q] acts on qubit q

  PauliString() = default;
  explicit PauliString(int n_qubits)
      : ops(static_cast<std::size_t>(n_qubits), PauliOp::I) {
    if (n_qubits < 0) throw std::invalid_argument("PauliString: negative size");
  }

  static PauliString parse(std::string_view text) {
    PauliString p;
    p.ops.reserve(text.size());
    for (char c : text) {
      switch (c) {
        case 'I': p.ops.push_back(PauliOp::I); break;
        case 'X': p.ops.push_back(PauliOp::X); break;
        case 'Y': p.ops.push_back(PauliOp::Y); break;
        case 'Z': p.ops.push_back(PauliOp::Z); break;
        default:
          throw std::invalid_argument("PauliString::parse: bad character");
      }
    }
    return p;
  }

  int size() const { return static_cast<int>(ops.size()); }

  PauliOp at(int q) const { return ops.at(static_cast<std::size_t>(q)); }

  PauliString& set(int q, PauliOp op) {
    ops.at(static_cast<std::size_t>(q)) = op;
    return *this;
  }

  bool identity() const {
    return std::all_of(ops.begin(), ops.end(),
                       [](PauliOp o) { return o == PauliOp::I; });
  }

  int weight() const {
    return static_cast<int>(std::count_if(
        ops.begin(), ops.end(), [](PauliOp o) { return o != PauliOp::I; }));
  }

  std::string str() const {
    std::string out;
    out.reserve(ops.size());
    for (PauliOp o : ops) out.push_back(static_cast<char>(o));
    return out;
  }

  bool operator==(const PauliString&) const = default;
};

struct PauliTerm {
  double coeff = 0.0;
  PauliString string;
};

// Real-weighted sum of Pauli strings. All strings must share one length to
// be usable in expectation(); the container itself does not enforce it so
// partial sums can be assembled and appended.
struct PauliSum {
  std::vector<PauliTerm> terms;

  void add(double coeff, PauliString s) {
    terms.push_back(PauliTerm{coeff, std::move(s)});
  }

  void append(const PauliSum& other) {
    terms.insert(terms.end(), other.terms.begin(), other.terms.end());
  }

  int size() const { return static_cast<int>(terms.size()); }

  double abs_coeff_sum() const {
    double s = 0.0;
    for (const PauliTerm& t : terms) s += std::abs(t.coeff);
    return s;
  }
};

namespace detail {

struct PauliMasks {
  std::size_t x = 0, y = 0, z = 0;
  int n_y = 0;
};

inline PauliMasks masks_of(const PauliString& p) {
  PauliMasks m;
  for (int q = 0; q < p.size(); ++q) {
    const std::size_t bit = std::size_t{1} << q;
    switch (p.ops[static_cast<std::size_t>(q)]) {
      case PauliOp::I: break;
      case PauliOp::X: m.x |= bit; break;
      case PauliOp::Y: m.y |= bit; ++m.n_y; break;
      case PauliOp::Z: m.z |= bit; break;
    }
  }
  return m;
}

}  // namespace detail

// <psi| P |psi> for a single string. P|k> = phase(k) |k ^ (x|y)> with
// phase(k) = i^{n_y} * (-1)^{popcount(k & (y|z))}.
inline double expectation(const StateVector& s, const PauliString& p) {
  if (p.size() != s.n_qubits)
    throw std::invalid_argument("expectation: Pauli length != qubit count");
  const detail::PauliMasks m = detail::masks_of(p);
  const std::size_t flip = m.x | m.y;
  const std::size_t sign_mask = m.y | m.z;
  static constexpr complexd kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const complexd y_phase = kIPow[m.n_y & 3];
  complexd acc{0.0, 0.0};
  const std::size_t dim = s.dim();
  for (std::size_t k = 0; k < dim; ++k) {
    const double sgn = (std::popcount(k & sign_mask) & 1) ? -1.0 : 1.0;
    acc += std::conj(s.amps[k ^ flip]) * (y_phase * sgn) * s.amps[k];
  }
  return acc.real();
}

inline double expectation(const StateVector& s, const PauliSum& h) {
  double total = 0.0;
  for (const PauliTerm& t : h.terms) total += t.coeff * expectation(s, t.string);
  return total;
}

// --- measurement ----------------------------------------------------------

struct BitString {
  std::vector<std::uint8_t> bits;  // bits[q] is qubit q

  static BitString from_index(std::size_t index, int n_qubits) {
    BitString b;
    b.bits.resize(static_cast<std::size_t>(n_qubits));
    for (int q = 0; q < n_qubits; ++q)
      b.bits[static_cast<std::size_t>(q)] = (index >> q) & 1u;
    return b;
  }

  std::size_t index() const {
    std::size_t k = 0;
    for (std::size_t q = 0; q < bits.size(); ++q)
      if (bits[q]) k |= std::size_t{1} << q;
    return k;
  }

  int size() const { return static_cast<int>(bits.size()); }

  std::string str() const {
    std::string out;
    out.reserve(bits.size());
    for (std::uint8_t b : bits) out.push_back(b ? '1' : '0');
    return out;
  }

  bool operator==(const BitString&) const = default;
};

inline std::vector<double> probabilities(const StateVector& s) {
  std::vector<double> p(s.dim());
  for (std::size_t k = 0; k < s.dim(); ++k) p[k] = std::norm(s.amps[k]);
  return p;
}

// Draws `shots` basis-state samples from |psi|^2. Deterministic for a fixed
// (state, shots, seed) triple on every platform.
inline std::vector<BitString> sample(const StateVector& s, int shots,
                                     std::uint64_t seed) {
  if (shots < 0) throw std::invalid_argument("sample: negative shot count");
  std::vector<double> cdf = probabilities(s);
  std::partial_sum(cdf.begin(), cdf.end(), cdf.begin());
  const double total = cdf.empty() ? 0.0 : cdf.back();
  if (!(total > 0.0)) throw std::invalid_argument("sample: zero-norm state");
  std::mt19937_64 rng(seed);
  std::vector<BitString> out;
  out.reserve(static_cast<std::size_t>(shots));
  for (int i = 0; i < shots; ++i) {
    const double u = uniform_double(rng) * total;
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    std::size_t k = static_cast<std::size_t>(it - cdf.begin());
    if (k >= s.dim()) k = s.dim() - 1;  // guard u == total after rounding
    out.push_back(BitString::from_index(k, s.n_qubits));
  }
  return out;
}

}  // namespace hqcnbv

#endif  // HQCNBV_QSIM_HPP
