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

#include <algorithm>
#include <cmath>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Eigenvalues>

#include "qclone/core/kernels.hpp"
#include "qclone/core/register_layout.hpp"
#include "qclone/core/state_vector.hpp"
#include "qclone/core/types.hpp"

namespace qclone {

/// Hermitian, positive semidefinite, trace-one operator on a labeled register.
template <typename Real>
class BasicDensityOperator {
 public:
  using RealScalar = Real;
  using Scalar = std::complex<Real>;
  using MatrixType = CMatrix<Real>;

  /// Full validation, including an eigendecomposition for positivity.
  BasicDensityOperator(MatrixType matrix, RegisterLayout layout)
      : BasicDensityOperator(std::move(matrix), std::move(layout), Checked{}) {
    const Real min_eig = min_eigenvalue();
    if (min_eig < -Real(tol::kNegativeEigen)) {
      throw Error(ErrorCode::kNotPositive, "eigenvalue " + std::to_string(static_cast<double>(min_eig)));
    }
  }

  explicit BasicDensityOperator(MatrixType matrix)
      : BasicDensityOperator(matrix, RegisterLayout::wires(qubits_of(static_cast<std::size_t>(matrix.rows())))) {}

  /// Skips the positivity eigensolve; for operators that are PSD by construction
  /// (outer products, partial traces). Shape, Hermiticity and trace are still checked.
  static BasicDensityOperator trusted(MatrixType matrix, RegisterLayout layout) {
    return BasicDensityOperator(std::move(matrix), std::move(layout), Checked{});
  }

  static BasicDensityOperator pure(const BasicStateVector<Real>& psi) {
    return trusted(psi.amplitudes() * psi.amplitudes().adjoint(), psi.layout());
  }

  static BasicDensityOperator maximally_mixed(RegisterLayout layout) {
    const auto d = static_cast<Eigen::Index>(dim_of(layout.num_qubits()));
    return trusted(MatrixType::Identity(d, d) / Real(d), std::move(layout));
  }

  int num_qubits() const { return layout_.num_qubits(); }
  std::size_t dim() const { return static_cast<std::size_t>(matrix_.rows()); }
  const MatrixType& matrix() const { return matrix_; }
  const RegisterLayout& layout() const { return layout_; }
  Scalar operator()(std::size_t r, std::size_t c) const {
    return matrix_(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
  }

  Eigen::Matrix<Real, Eigen::Dynamic, 1> eigenvalues() const {
    Eigen::SelfAdjointEigenSolver<MatrixType> solver(matrix_, Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
  }

  Real min_eigenvalue() const { return eigenvalues().minCoeff(); }

  Real purity() const { return (matrix_ * matrix_).trace().real(); }

  /// Kronecker product with `high` on the qubits above this register.
  BasicDensityOperator tensor(const BasicDensityOperator& high) const {
    std::vector<Role> roles = layout_.roles();
    roles.insert(roles.end(), high.layout().roles().begin(), high.layout().roles().end());
    const Eigen::Index d = matrix_.rows();
    const Eigen::Index h = high.matrix_.rows();
    MatrixType out(d * h, d * h);
    for (Eigen::Index r = 0; r < h; ++r) {
      for (Eigen::Index c = 0; c < h; ++c) {
        out.block(r * d, c * d, d, d) = high.matrix_(r, c) * matrix_;
      }
    }
    return trusted(std::move(out), RegisterLayout(std::move(roles)));
  }

  /// Max |entry| of (this - other).
  Real max_deviation(const BasicDensityOperator& other) const {
    if (other.dim() != dim()) throw Error(ErrorCode::kDimensionMismatch, "operators of unequal size");
    return (matrix_ - other.matrix_).cwiseAbs().maxCoeff();
  }

 private:
  struct Checked {};

  BasicDensityOperator(MatrixType matrix, RegisterLayout layout, Checked)
      : matrix_(std::move(matrix)), layout_(std::move(layout)) {
    if (matrix_.rows() != matrix_.cols() ||
        static_cast<std::size_t>(matrix_.rows()) != dim_of(layout_.num_qubits())) {
      throw Error(ErrorCode::kDimensionMismatch, "density matrix shape does not match " +
                                                     std::to_string(layout_.num_qubits()) + " qubits");
    }
    if ((matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff() > Real(tol::kState)) {
      throw Error(ErrorCode::kInvalidArgument, "density matrix is not Hermitian");
    }
    if (std::abs(matrix_.trace() - Scalar(1)) > Real(tol::kState)) {
      throw Error(ErrorCode::kNotNormalized,
                  "trace " + std::to_string(static_cast<double>(matrix_.trace().real())));
    }
  }

  MatrixType matrix_;
  RegisterLayout layout_;
};

using DensityOperator = BasicDensityOperator<double>;

namespace detail {

inline std::vector<int> sorted_keep(std::span<const int> keep, int num_qubits) {
  if (keep.empty()) throw Error(ErrorCode::kInvalidQubits, "partial trace needs a non-empty keep set");
  kernels::check_targets(keep, num_qubits);
  std::vector<int> sorted(keep.begin(), keep.end());
  std::sort(sorted.begin(), sorted.end());
  return sorted;
}

}  // namespace detail

/// Reduced state on `keep`; kept qubits are renumbered in ascending original order.
template <typename Real>
BasicDensityOperator<Real> partial_trace(const BasicStateVector<Real>& state, std::span<const int> keep) {
  const std::vector<int> kept = detail::sorted_keep(keep, state.num_qubits());
  const std::vector<int> rest = kernels::complement(kept, state.num_qubits());
  const auto keep_dim = static_cast<Eigen::Index>(dim_of(static_cast<int>(kept.size())));
  const auto rest_dim = static_cast<Eigen::Index>(dim_of(static_cast<int>(rest.size())));

  // Psi(a, e) = <a, e | psi>, so rho = Psi Psi^dagger.
  CMatrix<Real> psi(keep_dim, rest_dim);
  for (Eigen::Index e = 0; e < rest_dim; ++e) {
    const std::size_t rest_bits = kernels::scatter_bits(static_cast<std::size_t>(e), rest);
    for (Eigen::Index a = 0; a < keep_dim; ++a) {
      psi(a, e) = state[rest_bits | kernels::scatter_bits(static_cast<std::size_t>(a), kept)];
    }
  }
  CMatrix<Real> rho = psi * psi.adjoint();
  return BasicDensityOperator<Real>::trusted(std::move(rho), state.layout().subset(kept));
}

template <typename Real>
BasicDensityOperator<Real> partial_trace(const BasicDensityOperator<Real>& rho, std::span<const int> keep) {
  const std::vector<int> kept = detail::sorted_keep(keep, rho.num_qubits());
  const std::vector<int> rest = kernels::complement(kept, rho.num_qubits());
  const auto keep_dim = static_cast<Eigen::Index>(dim_of(static_cast<int>(kept.size())));
  const auto rest_dim = static_cast<Eigen::Index>(dim_of(static_cast<int>(rest.size())));

  std::vector<std::size_t> keep_bits(static_cast<std::size_t>(keep_dim));
  for (Eigen::Index a = 0; a < keep_dim; ++a) {
    keep_bits[static_cast<std::size_t>(a)] = kernels::scatter_bits(static_cast<std::size_t>(a), kept);
  }
  CMatrix<Real> out = CMatrix<Real>::Zero(keep_dim, keep_dim);
  for (Eigen::Index e = 0; e < rest_dim; ++e) {
    const std::size_t rest_bits = kernels::scatter_bits(static_cast<std::size_t>(e), rest);
    for (Eigen::Index a = 0; a < keep_dim; ++a) {
      for (Eigen::Index b = 0; b < keep_dim; ++b) {
        out(a, b) += rho(rest_bits | keep_bits[static_cast<std::size_t>(a)],
                         rest_bits | keep_bits[static_cast<std::size_t>(b)]);
      }
    }
  }
  return BasicDensityOperator<Real>::trusted(std::move(out), rho.layout().subset(kept));
}

template <typename Real>
BasicDensityOperator<Real> partial_trace(const BasicStateVector<Real>& state, std::initializer_list<int> keep) {
  const std::vector<int> k(keep);
  return partial_trace(state, std::span<const int>(k));
}

template <typename Real>
BasicDensityOperator<Real> partial_trace(const BasicDensityOperator<Real>& rho, std::initializer_list<int> keep) {
  const std::vector<int> k(keep);
  return partial_trace(rho, std::span<const int>(k));
}

/// -sum p log2 p over a spectrum, with 0 log 0 := 0 and the shared eigenvalue clamp.
template <typename Derived>
typename Derived::Scalar shannon_entropy_bits(const Eigen::MatrixBase<Derived>& probabilities) {
  using Real = typename Derived::Scalar;
  Real h = 0;
  for (Eigen::Index i = 0; i < probabilities.size(); ++i) {
    const Real p = probabilities[i];
    if (p < -Real(tol::kNegativeEigen)) {
      throw Error(ErrorCode::kNotPositive, "negative eigenvalue " + std::to_string(static_cast<double>(p)));
    }
    if (p <= Real(tol::kEigenClamp)) continue;
    h -= p * std::log2(p);
  }
  return h;
}

/// Von Neumann entropy in bits.
template <typename Real>
Real von_neumann_entropy(const BasicDensityOperator<Real>& rho) {
  const Real s = shannon_entropy_bits(rho.eigenvalues());
  return std::clamp(s, Real(0), Real(rho.num_qubits()));
}

/// <psi| rho |psi>.
template <typename Real>
Real fidelity_pure(const BasicDensityOperator<Real>& rho, const BasicStateVector<Real>& psi) {
  if (rho.dim() != psi.dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "fidelity between registers of different size");
  }
  return psi.amplitudes().dot(rho.matrix() * psi.amplitudes()).real();
}

/// (1/2) || rho - sigma ||_1.
template <typename Real>
Real trace_distance(const BasicDensityOperator<Real>& rho, const BasicDensityOperator<Real>& sigma) {
  if (rho.dim() != sigma.dim()) throw Error(ErrorCode::kDimensionMismatch, "trace distance size mismatch");
  const CMatrix<Real> diff = rho.matrix() - sigma.matrix();
  Eigen::SelfAdjointEigenSolver<CMatrix<Real>> solver(diff, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().cwiseAbs().sum() / Real(2);
}

}  // namespace qclone
