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

// Bit-indexed kernels shared by statevectors, density operators and circuit
// reconstruction. Amplitude index bit q belongs to qubit q.

#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qclone/core/types.hpp"

namespace qclone::kernels {

/// Throws unless targets are distinct and lie in [0, num_qubits).
inline void check_targets(std::span<const int> targets, int num_qubits) {
  std::vector<bool> seen(static_cast<std::size_t>(std::max(num_qubits, 0)), false);
  for (int t : targets) {
    if (t < 0 || t >= num_qubits) {
      throw Error(ErrorCode::kInvalidQubits,
                  "qubit " + std::to_string(t) + " outside register of " + std::to_string(num_qubits));
    }
    if (seen[static_cast<std::size_t>(t)]) {
      throw Error(ErrorCode::kInvalidQubits, "qubit " + std::to_string(t) + " listed twice");
    }
    seen[static_cast<std::size_t>(t)] = true;
  }
}

/// Spreads the bits of `i` over the positions not in `sorted_holes` (ascending).
inline std::size_t insert_zero_bits(std::size_t i, std::span<const int> sorted_holes) {
  for (int h : sorted_holes) {
    const std::size_t low = i & ((std::size_t{1} << h) - 1);
    i = ((i >> h) << (h + 1)) | low;
  }
  return i;
}

/// Offset of local basis state j (bit b of j -> qubit targets[b]).
inline std::vector<std::size_t> local_offsets(std::span<const int> targets) {
  const std::size_t local_dim = dim_of(static_cast<int>(targets.size()));
  std::vector<std::size_t> offsets(local_dim, 0);
  for (std::size_t j = 0; j < local_dim; ++j) {
    std::size_t off = 0;
    for (std::size_t b = 0; b < targets.size(); ++b) {
      if (((j >> b) & 1U) != 0) off |= std::size_t{1} << targets[b];
    }
    offsets[j] = off;
  }
  return offsets;
}

/// Applies the 2^k x 2^k matrix `u` to every column of `data` on the given target
/// qubits (targets[0] is the least-significant local qubit). No validation.
template <typename Derived, typename UDerived>
void apply_matrix(Eigen::MatrixBase<Derived>& data, const Eigen::MatrixBase<UDerived>& u,
                  std::span<const int> targets) {
  using Scalar = typename Derived::Scalar;
  using Local = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  const std::size_t local_dim = static_cast<std::size_t>(u.rows());
  const std::size_t total = static_cast<std::size_t>(data.rows());
  const std::size_t blocks = total / local_dim;

  std::vector<int> sorted(targets.begin(), targets.end());
  std::sort(sorted.begin(), sorted.end());
  const std::vector<std::size_t> offsets = local_offsets(targets);
  const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> op = u.template cast<Scalar>();

  Local in(static_cast<Eigen::Index>(local_dim));
  Local out(static_cast<Eigen::Index>(local_dim));
  for (Eigen::Index col = 0; col < data.cols(); ++col) {
    for (std::size_t block = 0; block < blocks; ++block) {
      const std::size_t base = insert_zero_bits(block, sorted);
      for (std::size_t j = 0; j < local_dim; ++j) {
        in[static_cast<Eigen::Index>(j)] = data(static_cast<Eigen::Index>(base | offsets[j]), col);
      }
      out.noalias() = op * in;
      for (std::size_t j = 0; j < local_dim; ++j) {
        data(static_cast<Eigen::Index>(base | offsets[j]), col) = out[static_cast<Eigen::Index>(j)];
      }
    }
  }
}

/// Gathers the bits of `index` at `qubits` into a compact integer (qubits[0] -> bit 0).
inline std::size_t extract_bits(std::size_t index, std::span<const int> qubits) {
  std::size_t out = 0;
  for (std::size_t b = 0; b < qubits.size(); ++b) {
    out |= ((index >> qubits[b]) & 1U) << b;
  }
  return out;
}

/// Inverse of extract_bits: places bit b of `value` on qubit qubits[b].
inline std::size_t scatter_bits(std::size_t value, std::span<const int> qubits) {
  std::size_t out = 0;
  for (std::size_t b = 0; b < qubits.size(); ++b) {
    out |= ((value >> b) & 1U) << qubits[b];
  }
  return out;
}

/// Qubits of an n-qubit register not contained in `keep`, ascending.
inline std::vector<int> complement(std::span<const int> keep, int num_qubits) {
  std::vector<int> rest;
  for (int q = 0; q < num_qubits; ++q) {
    if (std::find(keep.begin(), keep.end(), q) == keep.end()) rest.push_back(q);
  }
  return rest;
}

}  // namespace qclone::kernels
