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

#include <optional>
#include <span>
#include <vector>

#include "qclone/core/density_operator.hpp"
#include "qclone/core/register_layout.hpp"
#include "qclone/core/state_vector.hpp"
#include "qclone/protocol/config.hpp"

namespace qclone::protocol {

/// A dense unitary together with the roles of its local qubits (roles[0] = local bit 0).
struct LocalOperator {
  Matrix matrix;
  std::vector<Role> roles;
};

/// How a key qubit's Pauli factor enters the decoder: sigma_mu^T for a noise qubit,
/// sigma_mu itself when the partner signal qubit substitutes for a lost noise qubit.
enum class KeyFactor { kTransposed, kPlain };

/// sum_mu alpha_mu |phi_mu><phi_mu| (x) K_mu^{(1)} (x) ... on local qubits
/// (pair signal, pair noise, key 1, key 2, ...).
Matrix bell_controlled_decoder(const AlphaCoefficients& alphas, std::span<const KeyFactor> keys);

/// U_dec on roles (S_target, N_1, ..., N_n). The target != 1 form is obtained from the
/// target-1 form by conjugation with the qubit permutation that relabels the pairs.
/// n = 1 gives sum_mu alpha_mu |phi_mu><phi_mu| on (S_1, N_1).
LocalOperator decoding_unitary(int n, const AlphaCoefficients& alphas, int target);

/// Permutes the local qubits of a 2^k x 2^k operator: new local qubit j is old local
/// qubit `order[j]`. Computed as P^T M P with an explicit permutation matrix.
Matrix permute_qubits(const Matrix& m, std::span<const int> order);

/// Applies `op` to the qubits that carry its roles.
void apply_local(StateVector& state, const LocalOperator& op, bool adjoint = false);

struct DecryptionOutcome {
  StateVector global_state;      ///< full register after decoding
  int slot = 0;                  ///< qubit that holds the recovered state
  DensityOperator recovered;     ///< reduced state of `slot`
  StateVector recovered_state;   ///< dominant eigenvector of `recovered`
  std::optional<double> fidelity_vs_input;
  bool fully_encrypted = true;   ///< false for n = 1, whose clone leaks the input

  /// Reduced state on every qubit except `slot`.
  DensityOperator residual() const;
  DensityOperator reduced(std::span<const Role> roles) const;
  double fidelity(const StateVector& psi) const;
};

/// Builds an outcome for `slot`; fills fidelity_vs_input when `input` is given.
DecryptionOutcome make_outcome(StateVector global_state, int slot, const std::optional<StateVector>& input);

/// Decrypts clone S_target with all noise qubits.
/// Errors: kPrecondition when the state's clone count differs from config.n,
/// kUnsupportedAngle unless t = pi/4 + m pi/2, kInvalidArgument for a bad target.
DecryptionOutcome decrypt(const StateVector& encoded, const ProtocolConfig& config, int target,
                          const std::optional<StateVector>& input = std::nullopt);

/// Decrypts S_target after losing the listed noise qubits, using S_j in place of each lost N_j.
/// Errors: kPrecondition when N_target is lost or a pair lost both halves.
DecryptionOutcome decrypt_with_substitution(const StateVector& encoded, const ProtocolConfig& config,
                                            std::span<const int> lost_noise, int target,
                                            const std::optional<StateVector>& input = std::nullopt,
                                            std::span<const int> lost_signals = {});

/// Recovers the input on A by undoing the encoder form that acts on (A, N_1..N_n).
/// Errors: kOddCloneCount when n is odd.
DecryptionOutcome decrypt_from_A(const StateVector& encoded, const ProtocolConfig& config,
                                 const std::optional<StateVector>& input = std::nullopt);

/// Runs U_enc^dagger on A and all signal qubits; noise qubits are not needed.
/// Errors: kPrecondition when A or any signal qubit is among `lost`.
DecryptionOutcome reverse_encoding_recovery(const StateVector& encoded, const ProtocolConfig& config,
                                            const std::optional<StateVector>& input = std::nullopt,
                                            std::span<const Role> lost = {});

}  // namespace qclone::protocol
