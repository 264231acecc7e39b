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

#include <span>

#include "qclone/core/density_operator.hpp"
#include "qclone/core/pauli.hpp"
#include "qclone/core/state_vector.hpp"
#include "qclone/protocol/config.hpp"

namespace qclone::protocol {

/// sigma_p on every listed qubit.
PauliString coupling(Pauli p, std::span<const int> qubits);

/// exp(-i t X^{(x)(n+1)}) exp(-i t P^{(x)(n+1)}) on local qubits (A, S1..Sn), A = qubit 0,
/// with P = Z (standard) or Y (kRotatedX2).
Matrix encoding_unitary(int n, double t, Variant v = Variant::kStandard);

/// Applies the encoding to the data qubit `data` and the clone qubits `signals` in place.
void apply_encoding(StateVector& state, int data, std::span<const int> signals, double t,
                    Variant v = Variant::kStandard);

/// Applies U_enc(t)^dagger on the same qubits.
void apply_encoding_inverse(StateVector& state, int data, std::span<const int> signals, double t,
                            Variant v = Variant::kStandard);

/// |psi>_A (x) Bell pairs (S_i, N_i). Rejects kWithReference configs.
StateVector prepare_initial(const ProtocolConfig& config, const StateVector& psi);

/// Bell pair (Ref, A) (x) Bell pairs (S_i, N_i); requires kWithReference.
StateVector prepare_initial(const ProtocolConfig& config);

/// Prepared and encoded global state.
StateVector encode(const ProtocolConfig& config, const StateVector& psi);
StateVector encode(const ProtocolConfig& config);

/// Reduced post-encoding state on the kept roles (ascending qubit order).
DensityOperator run_channel(const ProtocolConfig& config, const StateVector& psi, std::span<const Role> keep);
DensityOperator run_channel(const ProtocolConfig& config, std::span<const Role> keep);

/// Reduced state of a state on the given roles.
DensityOperator reduce(const StateVector& state, std::span<const Role> keep);

}  // namespace qclone::protocol
