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

#include <cmath>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qclone/core/kernels.hpp"
#include "qclone/core/register_layout.hpp"
#include "qclone/core/types.hpp"

namespace qclone {

/// Pure state of a labeled qubit register, unit norm within tol::kNorm.
template <typename Real>
class BasicStateVector {
 public:
  using RealScalar = Real;
  using Scalar = std::complex<Real>;
  using VectorType = CVector<Real>;

  BasicStateVector(VectorType amplitudes, RegisterLayout layout)
      : amplitudes_(std::move(amplitudes)), layout_(std::move(layout)) {
    if (static_cast<std::size_t>(amplitudes_.size()) != dim_of(layout_.num_qubits())) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "state of length " + std::to_string(amplitudes_.size()) + " does not match " +
                      std::to_string(layout_.num_qubits()) + " qubits");
    }
    if (std::abs(amplitudes_.squaredNorm() - Real(1)) > Real(tol::kNorm)) {
      throw Error(ErrorCode::kNotNormalized,
                  "squared norm " + std::to_string(static_cast<double>(amplitudes_.squaredNorm())));
    }
  }

  /// Convenience for anonymous registers; the layout is q0..q{k-1}.
  explicit BasicStateVector(VectorType amplitudes)
      : BasicStateVector(amplitudes, RegisterLayout::wires(qubits_of(static_cast<std::size_t>(amplitudes.size())))) {}

  static BasicStateVector basis(RegisterLayout layout, std::size_t index) {
    VectorType v = VectorType::Zero(static_cast<Eigen::Index>(dim_of(layout.num_qubits())));
    if (index >= static_cast<std::size_t>(v.size())) {
      throw Error(ErrorCode::kInvalidArgument, "basis index out of range");
    }
    v[static_cast<Eigen::Index>(index)] = Scalar(1);
    return BasicStateVector(std::move(v), std::move(layout));
  }

  /// Rescales arbitrary nonzero amplitudes to unit norm.
  static BasicStateVector normalized(VectorType amplitudes, RegisterLayout layout) {
    const Real norm = amplitudes.norm();
    if (!(norm > Real(0))) throw Error(ErrorCode::kNotNormalized, "zero vector cannot be normalized");
    amplitudes /= norm;
    return BasicStateVector(std::move(amplitudes), std::move(layout));
  }

  int num_qubits() const { return layout_.num_qubits(); }
  std::size_t dim() const { return static_cast<std::size_t>(amplitudes_.size()); }
  const VectorType& amplitudes() const { return amplitudes_; }
  const RegisterLayout& layout() const { return layout_; }
  Scalar operator[](std::size_t i) const { return amplitudes_[static_cast<Eigen::Index>(i)]; }

  Real norm_defect() const { return std::abs(amplitudes_.squaredNorm() - Real(1)); }

  /// Kronecker product with `high` occupying the qubits above this register.
  BasicStateVector tensor(const BasicStateVector& high) const {
    std::vector<Role> roles = layout_.roles();
    roles.insert(roles.end(), high.layout().roles().begin(), high.layout().roles().end());
    require_capacity(static_cast<int>(roles.size()));
    VectorType v(amplitudes_.size() * high.amplitudes_.size());
    for (Eigen::Index h = 0; h < high.amplitudes_.size(); ++h) {
      v.segment(h * amplitudes_.size(), amplitudes_.size()) = high.amplitudes_[h] * amplitudes_;
    }
    return BasicStateVector(std::move(v), RegisterLayout(std::move(roles)));
  }

  /// Same amplitudes, relabeled; the new layout must have the same size.
  BasicStateVector relabeled(RegisterLayout layout) const {
    return BasicStateVector(amplitudes_, std::move(layout));
  }

  Scalar inner(const BasicStateVector& other) const {
    if (other.dim() != dim()) throw Error(ErrorCode::kDimensionMismatch, "inner product of unequal registers");
    return amplitudes_.dot(other.amplitudes_);
  }

  // In-place mutation; callers hold exclusive access. Used by the apply_* free
  // functions, which return fresh values.
  VectorType& mutable_amplitudes() { return amplitudes_; }

 private:
  VectorType amplitudes_;
  RegisterLayout layout_;
};

using StateVector = BasicStateVector<double>;

template <typename Real, typename UDerived>
void apply_unitary_inplace(BasicStateVector<Real>& state, const Eigen::MatrixBase<UDerived>& u,
                           std::span<const int> targets) {
  const int k = static_cast<int>(targets.size());
  if (k == 0) throw Error(ErrorCode::kInvalidQubits, "no target qubits given");
  if (u.rows() != u.cols() || static_cast<std::size_t>(u.rows()) != dim_of(k)) {
    throw Error(ErrorCode::kDimensionMismatch, std::to_string(u.rows()) + "x" + std::to_string(u.cols()) +
                                                   " matrix on " + std::to_string(k) + " targets");
  }
  kernels::check_targets(targets, state.num_qubits());
  if (!is_unitary(u)) {
    throw Error(ErrorCode::kNotUnitary, "defect " + std::to_string(static_cast<double>(unitarity_defect(u))));
  }
  auto& amps = state.mutable_amplitudes();
  kernels::apply_matrix(amps, u, targets);
}

/// Returns `state` with `u` applied on `targets` (targets[0] = least-significant
/// local qubit) and the identity elsewhere.
template <typename Real, typename UDerived>
BasicStateVector<Real> apply_unitary(BasicStateVector<Real> state, const Eigen::MatrixBase<UDerived>& u,
                                     std::span<const int> targets) {
  apply_unitary_inplace(state, u, targets);
  return state;
}

template <typename Real, typename UDerived>
BasicStateVector<Real> apply_unitary(BasicStateVector<Real> state, const Eigen::MatrixBase<UDerived>& u,
                                     std::initializer_list<int> targets) {
  const std::vector<int> t(targets);
  apply_unitary_inplace(state, u, std::span<const int>(t));
  return state;
}

}  // namespace qclone
