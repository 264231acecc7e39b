// Copyright 2026 The qclone Authors
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

#pragma once

#include <array>
#include <bit>
#include <cmath>
#include <map>
#include <string>
#include <utility>

#include "qclone/core/register_layout.hpp"
#include "qclone/core/state_vector.hpp"
#include "qclone/core/types.hpp"

namespace qclone {

/// sigma_mu for mu = 0..3: I, X, Y, Z.
enum class Pauli : int { I = 0, X = 1, Y = 2, Z = 3 };

constexpr Pauli pauli_from_index(int mu) {
  if (mu < 0 || mu > 3) throw Error(ErrorCode::kInvalidArgument, "Pauli index must be 0..3");
  return static_cast<Pauli>(mu);
}

constexpr char pauli_char(Pauli p) { return "IXYZ"[static_cast<int>(p)]; }

template <typename Real = double>
Eigen::Matrix<std::complex<Real>, 2, 2> pauli_matrix(Pauli p) {
  using C = std::complex<Real>;
  Eigen::Matrix<C, 2, 2> m;
  switch (p) {
    case Pauli::I: m << C(1), C(0), C(0), C(1); break;
    case Pauli::X: m << C(0), C(1), C(1), C(0); break;
    case Pauli::Y: m << C(0), C(0, -1), C(0, 1), C(0); break;
    case Pauli::Z: m << C(1), C(0), C(0), C(-1); break;
  }
  return m;
}

/// Single-qubit product sigma_a sigma_b = phase * sigma_c.
inline std::pair<Complex, Pauli> multiply(Pauli a, Pauli b) {
  if (a == Pauli::I) return {Complex(1), b};
  if (b == Pauli::I) return {Complex(1), a};
  if (a == b) return {Complex(1), Pauli::I};
  const int ia = static_cast<int>(a);
  const int ib = static_cast<int>(b);
  const auto c = static_cast<Pauli>(6 - ia - ib);
  // Cyclic (X,Y,Z) ordering gives +i.
  const bool cyclic = (ib - ia + 3) % 3 == 1;
  return {cyclic ? Complex(0, 1) : Complex(0, -1), c};
}

/// scalar * tensor_q factors[q], with identity on absent qubits.
struct PauliString {
  Complex scalar{1.0, 0.0};
  std::map<int, Pauli> factors;

  PauliString() = default;
  PauliString(Complex s, std::map<int, Pauli> f) : scalar(s), factors(std::move(f)) {
    for (auto it = factors.begin(); it != factors.end();) {
      if (it->first < 0) throw Error(ErrorCode::kInvalidQubits, "negative qubit in Pauli string");
      it = it->second == Pauli::I ? factors.erase(it) : std::next(it);
    }
  }

  /// The same Pauli on every listed qubit.
  template <typename Range>
  static PauliString uniform(Pauli p, const Range& qubits, Complex s = Complex(1)) {
    std::map<int, Pauli> f;
    for (int q : qubits) f[q] = p;
    return PauliString(s, std::move(f));
  }

  Pauli at(int q) const {
    const auto it = factors.find(q);
    return it == factors.end() ? Pauli::I : it->second;
  }

  int max_qubit() const { return factors.empty() ? -1 : factors.rbegin()->first; }

  friend PauliString operator*(const PauliString& a, const PauliString& b) {
    PauliString out;
    out.scalar = a.scalar * b.scalar;
    for (const auto& [q, p] : a.factors) out.factors[q] = p;
    for (const auto& [q, p] : b.factors) {
      const auto [phase, c] = multiply(out.at(q), p);
      out.scalar *= phase;
      if (c == Pauli::I) {
        out.factors.erase(q);
      } else {
        out.factors[q] = c;
      }
    }
    return out;
  }

  std::string to_string() const {
    std::string out = "(" + std::to_string(scalar.real()) + "," + std::to_string(scalar.imag()) + ")";
    for (const auto& [q, p] : factors) out += std::string(" ") + pauli_char(p) + std::to_string(q);
    return out;
  }
};

namespace detail {

struct PauliMasks {
  std::size_t flip = 0;   // X or Y
  std::size_t sign = 0;   // Y or Z: contributes (-1)^bit
  int y_count = 0;
};

inline PauliMasks pauli_masks(const PauliString& p) {
  PauliMasks m;
  for (const auto& [q, s] : p.factors) {
    const std::size_t bit = std::size_t{1} << q;
    if (s == Pauli::X || s == Pauli::Y) m.flip |= bit;
    if (s == Pauli::Y || s == Pauli::Z) m.sign |= bit;
    if (s == Pauli::Y) ++m.y_count;
  }
  return m;
}

inline Complex i_power(int k) {
  static constexpr std::array<std::pair<double, double>, 4> kTable{{{1, 0}, {0, 1}, {-1, 0}, {0, -1}}};
  const auto& e = kTable[static_cast<std::size_t>(((k % 4) + 4) % 4)];
  return {e.first, e.second};
}

}  // namespace detail

/// Dense matrix of a unimodular Pauli string on an n-qubit register. Each column
/// has exactly one nonzero: P|c> = scalar * i^{#Y} (-1)^{popcount(c & sign)} |c ^ flip>.
template <typename Real = double>
CMatrix<Real> pauli_string_matrix(const PauliString& p, int num_qubits) {
  if (p.max_qubit() >= num_qubits) {
    throw Error(ErrorCode::kInvalidQubits, "Pauli string acts outside the register");
  }
  const detail::PauliMasks m = detail::pauli_masks(p);
  const Complex base = p.scalar * detail::i_power(m.y_count);
  const auto d = static_cast<Eigen::Index>(dim_of(num_qubits));
  CMatrix<Real> out = CMatrix<Real>::Zero(d, d);
  for (std::size_t c = 0; c < static_cast<std::size_t>(d); ++c) {
    const bool negative = (std::popcount(c & m.sign) & 1) != 0;
    const Complex v = negative ? -base : base;
    out(static_cast<Eigen::Index>(c ^ m.flip), static_cast<Eigen::Index>(c)) =
        std::complex<Real>(static_cast<Real>(v.real()), static_cast<Real>(v.imag()));
  }
  return out;
}

/// Unitary of a Pauli string over a layout; rejects |scalar| != 1.
inline Matrix pauli_string_unitary(const PauliString& p, const RegisterLayout& layout) {
  if (std::abs(std::abs(p.scalar) - 1.0) > tol::kUnitary) {
    throw Error(ErrorCode::kNotUnitary, "Pauli string scalar is not unimodular");
  }
  return pauli_string_matrix<double>(p, layout.num_qubits());
}

/// P|psi> without forming the dense matrix.
template <typename Real>
CVector<Real> apply_pauli_string(const CVector<Real>& amplitudes, const PauliString& p) {
  const detail::PauliMasks m = detail::pauli_masks(p);
  const Complex base = p.scalar * detail::i_power(m.y_count);
  const std::complex<Real> pos(static_cast<Real>(base.real()), static_cast<Real>(base.imag()));
  CVector<Real> out(amplitudes.size());
  for (std::size_t c = 0; c < static_cast<std::size_t>(amplitudes.size()); ++c) {
    const bool negative = (std::popcount(c & m.sign) & 1) != 0;
    out[static_cast<Eigen::Index>(c ^ m.flip)] =
        (negative ? -pos : pos) * amplitudes[static_cast<Eigen::Index>(c)];
  }
  return out;
}

/// exp(-i t P) |psi> = cos t |psi> - i sin t P|psi> for a Hermitian Pauli string P.
template <typename Real>
void apply_pauli_rotation_inplace(BasicStateVector<Real>& state, const PauliString& p, Real t) {
  if (std::abs(p.scalar - Complex(1)) > tol::kUnitary && std::abs(p.scalar + Complex(1)) > tol::kUnitary) {
    throw Error(ErrorCode::kInvalidArgument, "rotation generator must be a Hermitian Pauli string");
  }
  if (p.max_qubit() >= state.num_qubits()) {
    throw Error(ErrorCode::kInvalidQubits, "Pauli string acts outside the register");
  }
  const CVector<Real> rotated = apply_pauli_string(state.amplitudes(), p);
  auto& amps = state.mutable_amplitudes();
  amps = std::cos(t) * amps - std::complex<Real>(0, std::sin(t)) * rotated;
}

/// Entrywise transpose in the computational basis: sigma_2^T = -sigma_2, others fixed.
inline std::pair<Complex, Pauli> pauli_transpose(Pauli p) {
  return {p == Pauli::Y ? Complex(-1) : Complex(1), p};
}

/// |phi_mu> = (sigma_mu (x) I)|phi>, |phi> = (|00>+|11>)/sqrt2, first qubit = low bit.
template <typename Real = double>
Eigen::Matrix<std::complex<Real>, 4, 1> bell_state(int mu) {
  using C = std::complex<Real>;
  Eigen::Matrix<C, 4, 1> phi;
  const Real h = Real(1) / std::sqrt(Real(2));
  phi << C(h), C(0), C(0), C(h);
  Eigen::Matrix<C, 4, 4> op = Eigen::Matrix<C, 4, 4>::Zero();
  const auto s = pauli_matrix<Real>(pauli_from_index(mu));
  // Local index = b(first) + 2 b(second): sigma on the first (low) qubit.
  op.block(0, 0, 2, 2) = s;
  op.block(2, 2, 2, 2) = s;
  return op * phi;
}

}  // namespace qclone
