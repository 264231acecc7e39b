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

#include <complex>
#include <cstddef>
#include <cstdlib>
#include <string>

#include <Eigen/Dense>

#include "qclone/core/error.hpp"

namespace qclone {

template <typename Real>
using CVector = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>;

template <typename Real>
using CMatrix = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;

using Complex = std::complex<double>;
using Vector = CVector<double>;
using Matrix = CMatrix<double>;
using Matrix2 = Eigen::Matrix2cd;
using Matrix4 = Eigen::Matrix4cd;

inline constexpr double kPi = 3.14159265358979323846;

// Tolerance tiers: single states, matrix identities, accumulated circuits.
namespace tol {
inline constexpr double kState = 1e-10;
inline constexpr double kMatrix = 1e-9;
inline constexpr double kCircuit = 1e-8;
inline constexpr double kNorm = 1e-10;
inline constexpr double kUnitary = 1e-10;
// Eigenvalues in [-kNegativeEigen, kEigenClamp] count as exact zeros.
inline constexpr double kEigenClamp = 1e-12;
inline constexpr double kNegativeEigen = 1e-10;
}  // namespace tol

inline constexpr int kDefaultMaxQubits = 24;

/// Register capacity; QCLONE_MAX_QUBITS overrides the default of 24.
inline int max_register_qubits() {
  if (const char* env = std::getenv("QCLONE_MAX_QUBITS"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != nullptr && *end == '\0' && value > 0 && value <= 40) {
      return static_cast<int>(value);
    }
    throw Error(ErrorCode::kInvalidArgument,
                "QCLONE_MAX_QUBITS must be an integer in 1..40, got '" + std::string(env) + "'");
  }
  return kDefaultMaxQubits;
}

inline void require_capacity(int num_qubits) {
  const int cap = max_register_qubits();
  if (num_qubits > cap) {
    throw Error(ErrorCode::kCapacityExceeded, "register of " + std::to_string(num_qubits) +
                                                  " qubits exceeds capacity " + std::to_string(cap));
  }
}

constexpr std::size_t dim_of(int num_qubits) { return std::size_t{1} << num_qubits; }

/// Returns log2(dim) when dim is a power of two, otherwise -1.
constexpr int qubits_of(std::size_t dim) {
  if (dim == 0 || (dim & (dim - 1)) != 0) return -1;
  int q = 0;
  while ((std::size_t{1} << q) < dim) ++q;
  return q;
}

/// Kronecker product high (x) low: `low` acts on the least-significant qubits.
template <typename DerivedHigh, typename DerivedLow>
auto kron(const Eigen::MatrixBase<DerivedHigh>& high, const Eigen::MatrixBase<DerivedLow>& low) {
  using Scalar = typename DerivedHigh::Scalar;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out(high.rows() * low.rows(), high.cols() * low.cols());
  for (Eigen::Index r = 0; r < high.rows(); ++r) {
    for (Eigen::Index c = 0; c < high.cols(); ++c) {
      out.block(r * low.rows(), c * low.cols(), low.rows(), low.cols()) = high(r, c) * low;
    }
  }
  return out;
}

template <typename Derived>
typename Derived::RealScalar unitarity_defect(const Eigen::MatrixBase<Derived>& u) {
  using Plain = typename Derived::PlainObject;
  const Plain prod = u.adjoint() * u;
  return (prod - Plain::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
}

template <typename Derived>
bool is_unitary(const Eigen::MatrixBase<Derived>& u,
                typename Derived::RealScalar tolerance = tol::kUnitary) {
  return u.rows() == u.cols() && unitarity_defect(u) <= tolerance;
}

}  // namespace qclone
