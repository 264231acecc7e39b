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
#include <string>
#include <string_view>
#include <vector>

#include "qclone/core/state_vector.hpp"
#include "qclone/core/types.hpp"

namespace qclone::compiler {

enum class GateKind { kH, kX, kZ, kRZ, kPhase, kCNOT, kControlledU, kGeneric2Q };

std::string_view to_string(GateKind k);
/// Inverse of to_string ("H", "RZ", "CNOT", "CONTROLLED_U", ...). Throws kParse.
GateKind parse_gate_kind(std::string_view text);

/// One- or two-qubit gate. For CNOT and CONTROLLED_U, qubits = {control, target}.
/// For GENERIC_2Q, qubits[0] is the low bit of `matrix`'s local index.
struct Gate {
  GateKind kind = GateKind::kH;
  std::vector<int> qubits;
  double param = 0.0;  ///< RZ angle theta or PHASE angle phi
  Matrix matrix;       ///< 2x2 for CONTROLLED_U, 4x4 for GENERIC_2Q, empty otherwise

  static Gate h(int q) { return {GateKind::kH, {q}, 0.0, {}}; }
  static Gate x(int q) { return {GateKind::kX, {q}, 0.0, {}}; }
  static Gate z(int q) { return {GateKind::kZ, {q}, 0.0, {}}; }
  /// exp(-i theta Z / 2).
  static Gate rz(int q, double theta) { return {GateKind::kRZ, {q}, theta, {}}; }
  /// diag(1, e^{i phi}).
  static Gate phase(int q, double phi) { return {GateKind::kPhase, {q}, phi, {}}; }
  static Gate cnot(int control, int target) { return {GateKind::kCNOT, {control, target}, 0.0, {}}; }
  static Gate controlled(int control, int target, const Matrix2& u) {
    return {GateKind::kControlledU, {control, target}, 0.0, Matrix(u)};
  }
  static Gate generic(int low, int high, const Matrix4& u) { return {GateKind::kGeneric2Q, {low, high}, 0.0, Matrix(u)}; }

  int arity() const;
  /// Throws unless the arity, qubits and embedded matrix fit `kind`.
  void validate() const;
  /// Local matrix; local bit b belongs to qubits[b].
  Matrix local_matrix() const;
  Gate adjoint() const;

  friend bool operator==(const Gate& a, const Gate& b);
};

struct GateCounts {
  int two_qubit = 0;
  int one_qubit = 0;
};

/// Ordered gate list; gates[0] acts first.
class GateCircuit {
 public:
  explicit GateCircuit(int num_qubits = 0);

  int num_qubits() const { return num_qubits_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }

  /// Validates the gate and its qubit range.
  GateCircuit& add(Gate g);
  GateCircuit& append(const GateCircuit& other);

  /// Recounted from the gate list on every call.
  GateCounts counts() const;
  int two_qubit_count() const { return counts().two_qubit; }
  int one_qubit_count() const { return counts().one_qubit; }

  /// Reversed gate order with every gate inverted.
  GateCircuit adjoint() const;
  /// Circuit qubit q becomes wires[q] of a `num_qubits` register.
  GateCircuit remapped(std::span<const int> wires, int num_qubits) const;

  friend bool operator==(const GateCircuit& a, const GateCircuit& b) {
    return a.num_qubits_ == b.num_qubits_ && a.gates_ == b.gates_;
  }

 private:
  int num_qubits_;
  std::vector<Gate> gates_;
};

inline constexpr int kDefaultMaxDenseQubits = 12;

/// Product of the gate embeddings. Errors: kCapacityExceeded past `max_qubits`.
Matrix circuit_to_unitary(const GateCircuit& c, int max_qubits = kDefaultMaxDenseQubits);

/// Runs the circuit on `state`; circuit qubit q acts on wires[q].
void apply_circuit(StateVector& state, const GateCircuit& c, std::span<const int> wires);

struct EquivalenceResult {
  bool equivalent = false;
  Complex global_phase{1.0, 0.0};
  double max_entry_deviation = 0.0;
};

/// u ~ phase * v, with the phase read from the largest diagonal entry of v^dagger u.
/// Errors: kDimensionMismatch.
EquivalenceResult equivalence_up_to_global_phase(const Matrix& u, const Matrix& v,
                                                 double tolerance = tol::kCircuit);

}  // namespace qclone::compiler
