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

#include "qclone/compiler/compile.hpp"

#include <cmath>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "qclone/core/pauli.hpp"
#include "qclone/protocol/decoding.hpp"

namespace qclone::compiler {

namespace {

// exp(-i t Z...Z) on `qubits`: parity ladder into the last qubit, RZ(2t), ladder undone.
void add_z_string_rotation(GateCircuit& c, const std::vector<int>& qubits, double t) {
  for (std::size_t i = 0; i + 1 < qubits.size(); ++i) c.add(Gate::cnot(qubits[i], qubits[i + 1]));
  c.add(Gate::rz(qubits.back(), 2 * t));
  for (std::size_t i = qubits.size() - 1; i > 0; --i) c.add(Gate::cnot(qubits[i - 1], qubits[i]));
}

}  // namespace

GateCircuit compile_encoding(int n, double t, protocol::Variant v) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "clone count n must be >= 1");
  std::vector<int> qubits(static_cast<std::size_t>(n + 1));
  for (int q = 0; q <= n; ++q) qubits[static_cast<std::size_t>(q)] = q;
  GateCircuit c(n + 1);

  if (protocol::second_coupling(v) == Pauli::Y) {
    // Y = (S H) Z (S H)^dagger.
    for (int q : qubits) c.add(Gate::phase(q, -kPi / 2)).add(Gate::h(q));
    add_z_string_rotation(c, qubits, t);
    for (int q : qubits) c.add(Gate::h(q)).add(Gate::phase(q, kPi / 2));
  } else {
    add_z_string_rotation(c, qubits, t);
  }

  for (int q : qubits) c.add(Gate::h(q));
  add_z_string_rotation(c, qubits, t);
  for (int q : qubits) c.add(Gate::h(q));
  return c;
}

GateCircuit basis_change_V_tilde() {
  Matrix2 fix;
  fix << Complex(0, 1), 0, 0, 1;
  GateCircuit c(2);
  c.add(Gate::cnot(0, 1)).add(Gate::h(0)).add(Gate::cnot(0, 1)).add(Gate::controlled(0, 1, fix));
  return c;
}

Matrix2 unitary_sqrt(const Matrix2& u) {
  if (!is_unitary(u)) throw Error(ErrorCode::kNotUnitary, "square root requested for a non-unitary matrix");
  // Unitaries are normal, so the Schur form is diagonal.
  const Eigen::ComplexSchur<Matrix2> schur(u);
  Matrix2 root = Matrix2::Zero();
  root(0, 0) = std::sqrt(schur.matrixT()(0, 0));
  root(1, 1) = std::sqrt(schur.matrixT()(1, 1));
  return schur.matrixU() * root * schur.matrixU().adjoint();
}

GateCircuit compile_ccu(const std::string& pattern, const Matrix2& u, std::array<int, 2> controls, int target,
                        int num_qubits) {
  if (pattern.size() != 2 || pattern.find_first_not_of("01") != std::string::npos) {
    throw Error(ErrorCode::kInvalidArgument, "control pattern must be two characters of 0/1, got '" + pattern + "'");
  }
  if (controls[0] == controls[1] || controls[0] == target || controls[1] == target) {
    throw Error(ErrorCode::kInvalidQubits, "controls and target must be distinct");
  }
  const Matrix2 v = unitary_sqrt(u);
  const Matrix2 v_dag = v.adjoint();

  GateCircuit c(num_qubits);
  std::vector<int> flipped;
  for (int k = 0; k < 2; ++k) {
    if (pattern[static_cast<std::size_t>(k)] == '0') flipped.push_back(controls[static_cast<std::size_t>(k)]);
  }
  for (int q : flipped) c.add(Gate::x(q));
  const auto [c1, c2] = controls;
  c.add(Gate::controlled(c2, target, v))
      .add(Gate::cnot(c1, c2))
      .add(Gate::controlled(c2, target, v_dag))
      .add(Gate::cnot(c1, c2))
      .add(Gate::controlled(c1, target, v));
  for (int q : flipped) c.add(Gate::x(q));
  return c;
}

GateCircuit compile_decoding(int n, const protocol::AlphaCoefficients& alphas) {
  if (n < 2) {
    throw Error(ErrorCode::kInvalidArgument, "the controlled-block decoder needs n >= 2; use the single-pair decoder");
  }
  alphas.validate();
  constexpr int s1 = 0;
  constexpr int n1 = 1;
  GateCircuit c(n + 1);
  const GateCircuit v_tilde = basis_change_V_tilde();
  c.append(v_tilde);

  // V_mu fires on |mu_1>_S1 |mu_2>_N1 and applies (alpha_mu / alpha_0) (sigma_mu^T)^{(x)(n-1)}.
  static constexpr std::array<const char*, 4> kPatterns{"00", "01", "10", "11"};
  for (int mu = 1; mu <= 3; ++mu) {
    const std::string pattern = kPatterns[static_cast<std::size_t>(mu)];
    const Matrix2 scalar = (alphas[mu] / alphas[0]) * Matrix2::Identity();
    c.append(compile_ccu(pattern, scalar, {s1, n1}, 2, n + 1));
    const Matrix2 key = pauli_matrix<double>(pauli_from_index(mu)).transpose();
    for (int j = 2; j <= n; ++j) c.append(compile_ccu(pattern, key, {s1, n1}, j, n + 1));
  }

  c.append(v_tilde.adjoint());
  return c;
}

GateCircuit compile_single_pair_decoder(const protocol::AlphaCoefficients& alphas) {
  const Matrix u = protocol::decoding_unitary(1, alphas, 1).matrix;
  GateCircuit c(2);
  c.add(Gate::generic(0, 1, Matrix4(u)));
  return c;
}

GateCountReport gate_count_report(int n) {
  if (n < 2) throw Error(ErrorCode::kInvalidArgument, "gate count report needs n >= 2");
  const GateCircuit enc = compile_encoding(n, kPi / 4);
  const GateCircuit dec = compile_decoding(n, protocol::standard_alphas(n));
  const GateCircuit v_tilde = basis_change_V_tilde();

  GateCountReport r;
  r.n = n;
  r.enc_2q = enc.two_qubit_count();
  r.enc_1q = enc.one_qubit_count();
  r.dec_2q = dec.two_qubit_count();
  r.dec_1q = dec.one_qubit_count();
  r.dec_basis_change_2q = v_tilde.two_qubit_count() + v_tilde.adjoint().two_qubit_count();
  r.dec_controlled_2q = r.dec_2q - r.dec_basis_change_2q;
  r.total_2q = r.enc_2q + r.dec_2q;
  r.formula_enc = 4 * n;
  r.formula_dec = 15 * n + 7;
  r.formula_total_bound = 21 * n + 11;
  return r;
}

}  // namespace qclone::compiler
