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

#include "qclone/compiler/circuit.hpp"

#include <array>
#include <cmath>
#include <string>

#include "qclone/core/kernels.hpp"

namespace qclone::compiler {

namespace {

constexpr std::array<std::pair<GateKind, std::string_view>, 8> kNames{{
    {GateKind::kH, "H"},
    {GateKind::kX, "X"},
    {GateKind::kZ, "Z"},
    {GateKind::kRZ, "RZ"},
    {GateKind::kPhase, "PHASE"},
    {GateKind::kCNOT, "CNOT"},
    {GateKind::kControlledU, "CONTROLLED_U"},
    {GateKind::kGeneric2Q, "GENERIC_2Q"},
}};

}  // namespace

std::string_view to_string(GateKind k) {
  for (const auto& [kind, name] : kNames) {
    if (kind == k) return name;
  }
  return "?";
}

GateKind parse_gate_kind(std::string_view text) {
  for (const auto& [kind, name] : kNames) {
    if (name == text) return kind;
  }
  throw Error(ErrorCode::kParse, "unknown gate kind '" + std::string(text) + "'");
}

int Gate::arity() const {
  switch (kind) {
    case GateKind::kCNOT:
    case GateKind::kControlledU:
    case GateKind::kGeneric2Q:
      return 2;
    default:
      return 1;
  }
}

void Gate::validate() const {
  if (static_cast<int>(qubits.size()) != arity()) {
    throw Error(ErrorCode::kInvalidQubits, std::string(to_string(kind)) + " takes " + std::to_string(arity()) +
                                               " qubit(s), got " + std::to_string(qubits.size()));
  }
  for (int q : qubits) {
    if (q < 0) throw Error(ErrorCode::kInvalidQubits, "negative qubit index");
  }
  if (arity() == 2 && qubits[0] == qubits[1]) {
    throw Error(ErrorCode::kInvalidQubits, std::string(to_string(kind)) + " on a repeated qubit");
  }
  const Eigen::Index expected = kind == GateKind::kControlledU ? 2 : kind == GateKind::kGeneric2Q ? 4 : 0;
  if (matrix.rows() != expected || matrix.cols() != expected) {
    throw Error(ErrorCode::kDimensionMismatch, std::string(to_string(kind)) + " carries a " +
                                                   std::to_string(matrix.rows()) + "x" +
                                                   std::to_string(matrix.cols()) + " matrix");
  }
  if (expected > 0 && !is_unitary(matrix)) {
    throw Error(ErrorCode::kNotUnitary, std::string(to_string(kind)) + " matrix defect " +
                                            std::to_string(unitarity_defect(matrix)));
  }
  if (!std::isfinite(param)) throw Error(ErrorCode::kInvalidArgument, "non-finite gate parameter");
}

Matrix Gate::local_matrix() const {
  const double h = 1.0 / std::sqrt(2.0);
  switch (kind) {
    case GateKind::kH: {
      Matrix m(2, 2);
      m << h, h, h, -h;
      return m;
    }
    case GateKind::kX: {
      Matrix m(2, 2);
      m << 0, 1, 1, 0;
      return m;
    }
    case GateKind::kZ: {
      Matrix m(2, 2);
      m << 1, 0, 0, -1;
      return m;
    }
    case GateKind::kRZ: {
      Matrix m = Matrix::Zero(2, 2);
      m(0, 0) = std::polar(1.0, -param / 2);
      m(1, 1) = std::polar(1.0, param / 2);
      return m;
    }
    case GateKind::kPhase: {
      Matrix m = Matrix::Identity(2, 2);
      m(1, 1) = std::polar(1.0, param);
      return m;
    }
    case GateKind::kCNOT:
    case GateKind::kControlledU: {
      // Local index = control + 2 * target; the control = 1 block is {1, 3}.
      Matrix m = Matrix::Identity(4, 4);
      Matrix u(2, 2);
      if (kind == GateKind::kCNOT) {
        u << 0, 1, 1, 0;
      } else {
        u = matrix;
      }
      m(1, 1) = u(0, 0);
      m(1, 3) = u(0, 1);
      m(3, 1) = u(1, 0);
      m(3, 3) = u(1, 1);
      return m;
    }
    case GateKind::kGeneric2Q:
      return matrix;
  }
  return {};
}

Gate Gate::adjoint() const {
  Gate g = *this;
  switch (kind) {
    case GateKind::kRZ:
    case GateKind::kPhase:
      g.param = -param;
      break;
    case GateKind::kControlledU:
    case GateKind::kGeneric2Q:
      g.matrix = matrix.adjoint();
      break;
    default:
      break;
  }
  return g;
}

bool operator==(const Gate& a, const Gate& b) {
  if (a.kind != b.kind || a.qubits != b.qubits || a.param != b.param) return false;
  if (a.matrix.rows() != b.matrix.rows() || a.matrix.cols() != b.matrix.cols()) return false;
  return a.matrix.size() == 0 || a.matrix == b.matrix;
}

GateCircuit::GateCircuit(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 0) throw Error(ErrorCode::kInvalidArgument, "negative qubit count");
}

GateCircuit& GateCircuit::add(Gate g) {
  g.validate();
  for (int q : g.qubits) {
    if (q >= num_qubits_) {
      throw Error(ErrorCode::kInvalidQubits, "gate on qubit " + std::to_string(q) + " in a " +
                                                 std::to_string(num_qubits_) + "-qubit circuit");
    }
  }
  gates_.push_back(std::move(g));
  return *this;
}

GateCircuit& GateCircuit::append(const GateCircuit& other) {
  if (other.num_qubits_ > num_qubits_) {
    throw Error(ErrorCode::kInvalidQubits, "appended circuit is wider than the destination");
  }
  for (const Gate& g : other.gates_) add(g);
  return *this;
}

GateCounts GateCircuit::counts() const {
  GateCounts c;
  for (const Gate& g : gates_) {
    if (g.arity() == 2) {
      ++c.two_qubit;
    } else {
      ++c.one_qubit;
    }
  }
  return c;
}

GateCircuit GateCircuit::adjoint() const {
  GateCircuit out(num_qubits_);
  for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) out.gates_.push_back(it->adjoint());
  return out;
}

GateCircuit GateCircuit::remapped(std::span<const int> wires, int num_qubits) const {
  if (static_cast<int>(wires.size()) != num_qubits_) {
    throw Error(ErrorCode::kInvalidQubits, "wire map has " + std::to_string(wires.size()) + " entries for " +
                                               std::to_string(num_qubits_) + " qubits");
  }
  kernels::check_targets(wires, num_qubits);
  GateCircuit out(num_qubits);
  for (Gate g : gates_) {
    for (int& q : g.qubits) q = wires[static_cast<std::size_t>(q)];
    out.add(std::move(g));
  }
  return out;
}

Matrix circuit_to_unitary(const GateCircuit& c, int max_qubits) {
  if (c.num_qubits() > max_qubits) {
    throw Error(ErrorCode::kCapacityExceeded, "dense reconstruction of " + std::to_string(c.num_qubits()) +
                                                  " qubits exceeds " + std::to_string(max_qubits));
  }
  const auto d = static_cast<Eigen::Index>(dim_of(c.num_qubits()));
  Matrix u = Matrix::Identity(d, d);
  for (const Gate& g : c.gates()) {
    const Matrix local = g.local_matrix();
    kernels::apply_matrix(u, local, g.qubits);
  }
  return u;
}

void apply_circuit(StateVector& state, const GateCircuit& c, std::span<const int> wires) {
  const GateCircuit placed = c.remapped(wires, state.num_qubits());
  for (const Gate& g : placed.gates()) {
    apply_unitary_inplace(state, g.local_matrix(), g.qubits);
  }
}

EquivalenceResult equivalence_up_to_global_phase(const Matrix& u, const Matrix& v, double tolerance) {
  if (u.rows() != v.rows() || u.cols() != v.cols() || u.rows() != u.cols()) {
    throw Error(ErrorCode::kDimensionMismatch, "equivalence check on matrices of different shape");
  }
  EquivalenceResult out;
  if (u.size() == 0) {
    out.equivalent = true;
    return out;
  }
  // Diagonal of v^dagger u in O(N^2).
  double best_mag = -1.0;
  Complex best_value;
  for (Eigen::Index i = 0; i < u.cols(); ++i) {
    const Complex value = v.col(i).dot(u.col(i));
    if (std::abs(value) > best_mag) {
      best_mag = std::abs(value);
      best_value = value;
    }
  }
  out.global_phase = best_mag > 0.0 ? best_value / best_mag : Complex(1.0);
  out.max_entry_deviation = (u - out.global_phase * v).cwiseAbs().maxCoeff();
  out.equivalent = out.max_entry_deviation < tolerance;
  return out;
}

}  // namespace qclone::compiler
