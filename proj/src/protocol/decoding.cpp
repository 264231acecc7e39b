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

#include "qclone/protocol/decoding.hpp"

#include <algorithm>
#include <string>

#include "qclone/core/pauli.hpp"
#include "qclone/protocol/encoding.hpp"

namespace qclone::protocol {

Matrix bell_controlled_decoder(const AlphaCoefficients& alphas, std::span<const KeyFactor> keys) {
  alphas.validate();
  const int key_count = static_cast<int>(keys.size());
  require_capacity(key_count + 2);
  const auto d = static_cast<Eigen::Index>(dim_of(key_count + 2));
  Matrix out = Matrix::Zero(d, d);
  for (int mu = 0; mu < 4; ++mu) {
    const Eigen::Vector4cd phi = bell_state<double>(mu);
    const Matrix projector = phi * phi.adjoint();
    const Matrix2 sigma = pauli_matrix<double>(pauli_from_index(mu));
    Matrix keys_op = Matrix::Identity(1, 1);
    for (const KeyFactor k : keys) {
      const Matrix factor = k == KeyFactor::kTransposed ? Matrix(sigma.transpose()) : Matrix(sigma);
      keys_op = kron(factor, keys_op);
    }
    out += alphas[mu] * kron(keys_op, projector);
  }
  return out;
}

Matrix permute_qubits(const Matrix& m, std::span<const int> order) {
  const int k = static_cast<int>(order.size());
  if (static_cast<std::size_t>(m.rows()) != dim_of(k) || m.rows() != m.cols()) {
    throw Error(ErrorCode::kDimensionMismatch, "permutation does not match operator size");
  }
  kernels::check_targets(order, k);
  const auto d = m.rows();
  // P(old, new) = 1 where old has bit j of `new` on qubit order[j].
  Matrix p = Matrix::Zero(d, d);
  for (Eigen::Index fresh = 0; fresh < d; ++fresh) {
    p(static_cast<Eigen::Index>(kernels::scatter_bits(static_cast<std::size_t>(fresh), order)), fresh) = 1.0;
  }
  return p.transpose() * m * p;
}

LocalOperator decoding_unitary(int n, const AlphaCoefficients& alphas, int target) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "clone count n must be >= 1");
  if (target < 1 || target > n) {
    throw Error(ErrorCode::kInvalidArgument, "target " + std::to_string(target) + " outside 1.." + std::to_string(n));
  }
  const std::vector<KeyFactor> keys(static_cast<std::size_t>(n - 1), KeyFactor::kTransposed);
  const Matrix canonical = bell_controlled_decoder(alphas, keys);

  // Canonical local order: S_t, N_t, then N_j (j != t) ascending.
  // Returned order: S_t, N_1, ..., N_n.
  std::vector<int> order{0};
  for (int i = 1; i <= n; ++i) {
    if (i == target) {
      order.push_back(1);
    } else {
      order.push_back(2 + (i < target ? i - 1 : i - 2));
    }
  }
  LocalOperator op{permute_qubits(canonical, order), {Role::signal(target)}};
  for (int i = 1; i <= n; ++i) op.roles.push_back(Role::noise(i));
  return op;
}

void apply_local(StateVector& state, const LocalOperator& op, bool adjoint) {
  const std::vector<int> qubits = state.layout().qubits(op.roles);
  if (adjoint) {
    const Matrix inverse = op.matrix.adjoint();
    apply_unitary_inplace(state, inverse, qubits);
  } else {
    apply_unitary_inplace(state, op.matrix, qubits);
  }
}

DensityOperator DecryptionOutcome::residual() const {
  const std::vector<int> rest = kernels::complement(std::vector<int>{slot}, global_state.num_qubits());
  return partial_trace(global_state, std::span<const int>(rest));
}

DensityOperator DecryptionOutcome::reduced(std::span<const Role> roles) const { return reduce(global_state, roles); }

double DecryptionOutcome::fidelity(const StateVector& psi) const { return fidelity_pure(recovered, psi); }

DecryptionOutcome make_outcome(StateVector global_state, int slot, const std::optional<StateVector>& input) {
  DensityOperator recovered = partial_trace(global_state, {slot});
  Eigen::SelfAdjointEigenSolver<Matrix> solver(recovered.matrix());
  Vector top = solver.eigenvectors().col(1);
  Eigen::Index lead = 0;
  top.cwiseAbs().maxCoeff(&lead);
  top *= std::conj(top[lead]) / std::abs(top[lead]);
  StateVector recovered_state(top, recovered.layout());
  DecryptionOutcome out{std::move(global_state), slot, std::move(recovered), std::move(recovered_state), std::nullopt,
                        true};
  if (input) out.fidelity_vs_input = out.fidelity(*input);
  return out;
}

namespace {

void check_encoded(const StateVector& encoded, const ProtocolConfig& config) {
  config.validate();
  const int clones = encoded.layout().count(RoleKind::kSignal);
  if (clones != config.n || encoded.layout().count(RoleKind::kNoise) != config.n) {
    throw Error(ErrorCode::kPrecondition, "state holds " + std::to_string(clones) + " clones but config.n = " +
                                              std::to_string(config.n));
  }
}

void check_pair_index(int j, int n, const char* what) {
  if (j < 1 || j > n) {
    throw Error(ErrorCode::kInvalidArgument, std::string(what) + " index " + std::to_string(j) + " outside 1.." +
                                                 std::to_string(n));
  }
}

bool contains(std::span<const int> set, int v) { return std::find(set.begin(), set.end(), v) != set.end(); }

}  // namespace

DecryptionOutcome decrypt(const StateVector& encoded, const ProtocolConfig& config, int target,
                          const std::optional<StateVector>& input) {
  check_encoded(encoded, config);
  check_pair_index(target, config.n, "target");
  const AlphaCoefficients alphas = decoding_alphas(config.n, config.t, config.variant);
  StateVector state = encoded;
  apply_local(state, decoding_unitary(config.n, alphas, target));
  const int slot = state.layout().qubit(Role::signal(target));
  DecryptionOutcome out = make_outcome(std::move(state), slot, input);
  out.fully_encrypted = config.n > 1;
  return out;
}

DecryptionOutcome decrypt_with_substitution(const StateVector& encoded, const ProtocolConfig& config,
                                            std::span<const int> lost_noise, int target,
                                            const std::optional<StateVector>& input,
                                            std::span<const int> lost_signals) {
  check_encoded(encoded, config);
  check_pair_index(target, config.n, "target");
  for (int j : lost_noise) check_pair_index(j, config.n, "lost noise");
  for (int j : lost_signals) check_pair_index(j, config.n, "lost signal");
  if (contains(lost_noise, target) || contains(lost_signals, target)) {
    throw Error(ErrorCode::kPrecondition, "the target pair (S" + std::to_string(target) + ", N" +
                                              std::to_string(target) + ") must be fully available");
  }
  for (int j : lost_noise) {
    if (contains(lost_signals, j)) {
      throw Error(ErrorCode::kPrecondition,
                  "pair " + std::to_string(j) + " lost both halves; the input cannot be recovered");
    }
  }
  const AlphaCoefficients alphas = decoding_alphas(config.n, config.t, config.variant);
  std::vector<KeyFactor> keys;
  LocalOperator op{Matrix(), {Role::signal(target), Role::noise(target)}};
  for (int j = 1; j <= config.n; ++j) {
    if (j == target) continue;
    const bool substitute = contains(lost_noise, j);
    keys.push_back(substitute ? KeyFactor::kPlain : KeyFactor::kTransposed);
    op.roles.push_back(substitute ? Role::signal(j) : Role::noise(j));
  }
  op.matrix = bell_controlled_decoder(alphas, keys);
  StateVector state = encoded;
  apply_local(state, op);
  const int slot = state.layout().qubit(Role::signal(target));
  DecryptionOutcome out = make_outcome(std::move(state), slot, input);
  out.fully_encrypted = config.n > 1;
  return out;
}

DecryptionOutcome decrypt_from_A(const StateVector& encoded, const ProtocolConfig& config,
                                 const std::optional<StateVector>& input) {
  check_encoded(encoded, config);
  if (config.n % 2 != 0) {
    throw Error(ErrorCode::kOddCloneCount, "decrypting from A is only established for even n, got n = " +
                                               std::to_string(config.n));
  }
  StateVector state = encoded;
  const RegisterLayout& layout = state.layout();
  std::vector<int> noise;
  for (int i = 1; i <= config.n; ++i) noise.push_back(layout.qubit(Role::noise(i)));
  const int data = layout.qubit(Role::data());
  apply_encoding_inverse(state, data, noise, config.t, config.variant);
  return make_outcome(std::move(state), data, input);
}

DecryptionOutcome reverse_encoding_recovery(const StateVector& encoded, const ProtocolConfig& config,
                                            const std::optional<StateVector>& input, std::span<const Role> lost) {
  check_encoded(encoded, config);
  for (const Role& r : lost) {
    if (r.kind == RoleKind::kData || r.kind == RoleKind::kSignal) {
      throw Error(ErrorCode::kPrecondition, "reverse encoding needs A and every signal qubit; " + r.label() +
                                                " is missing");
    }
  }
  StateVector state = encoded;
  const RegisterLayout& layout = state.layout();
  std::vector<int> signals;
  for (int i = 1; i <= config.n; ++i) signals.push_back(layout.qubit(Role::signal(i)));
  const int data = layout.qubit(Role::data());
  apply_encoding_inverse(state, data, signals, config.t, config.variant);
  return make_outcome(std::move(state), data, input);
}

}  // namespace qclone::protocol
