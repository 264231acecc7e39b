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
#include <string>

#include "qclone/compiler/circuit.hpp"
#include "qclone/protocol/config.hpp"

namespace qclone::compiler {

/// U_enc(t) on qubits (A = 0, S_i = i). Z part: CNOT ladder, RZ(2t), reversed ladder.
/// X part: the same wrapped in Hadamards. The sigma_2 variant wraps the Z ladder in S^dagger H / H S.
/// Errors: kInvalidArgument for n < 1.
GateCircuit compile_encoding(int n, double t, protocol::Variant v = protocol::Variant::kStandard);

/// Maps |phi_mu> on (S = 0, N = 1) to |mu_1>_S |mu_2>_N, mu = 2 mu_1 + mu_2, phases included:
/// CNOT(S->N), H(S), CNOT(S->N), then a controlled phase diag(i, 1) fixing the sigma_2 branch.
GateCircuit basis_change_V_tilde();

/// Doubly controlled u: five two-qubit gates C-V, CNOT, C-V^dagger, CNOT, C-V with V^2 = u.
/// pattern[k] is the required value of controls[k]; zeros are handled by X conjugation.
/// Errors: kNotUnitary, kInvalidArgument for a malformed pattern or repeated qubits.
GateCircuit compile_ccu(const std::string& pattern, const Matrix2& u, std::array<int, 2> controls, int target,
                        int num_qubits);

/// Principal square root of a unitary 2x2 matrix.
Matrix2 unitary_sqrt(const Matrix2& u);

/// U_dec for target 1 on qubits (S_1 = 0, N_1 = 1, N_j = j for j >= 2), up to the global
/// phase alpha_0: V~^dagger V_3 V_2 V_1 V~, each V_mu holding n doubly controlled gates.
/// Errors: kInvalidArgument for n < 2.
GateCircuit compile_decoding(int n, const protocol::AlphaCoefficients& alphas);

/// The n = 1 decoder as one GENERIC_2Q gate on (S_1 = 0, N_1 = 1).
GateCircuit compile_single_pair_decoder(const protocol::AlphaCoefficients& alphas);

struct GateCountReport {
  int n = 0;
  int enc_2q = 0;
  int dec_2q = 0;
  int total_2q = 0;
  int enc_1q = 0;
  int dec_1q = 0;
  int dec_basis_change_2q = 0;  ///< V~ and V~^dagger together
  int dec_controlled_2q = 0;    ///< the 3n doubly controlled blocks
  int formula_enc = 0;          ///< 4n
  int formula_dec = 0;          ///< 15n + 7
  int formula_total_bound = 0;  ///< 21n + 11

  bool encoding_matches() const { return enc_2q == formula_enc; }
  bool decoding_matches() const { return dec_2q == formula_dec; }
  bool within_total_bound() const { return total_2q <= formula_total_bound; }
};

/// Counts measured from compiled circuits alongside the closed-form figures.
/// Errors: kInvalidArgument for n < 2.
GateCountReport gate_count_report(int n);

}  // namespace qclone::compiler
