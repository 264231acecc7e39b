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

#include "qclone/protocol/encoding.hpp"

#include <cmath>
#include <numeric>
#include <vector>

namespace qclone::protocol {

PauliString coupling(Pauli p, std::span<const int> qubits) { return PauliString::uniform(p, qubits); }

Matrix encoding_unitary(int n, double t, Variant v) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "clone count n must be >= 1");
  require_capacity(n + 1);
  std::vector<int> all(static_cast<std::size_t>(n + 1));
  std::iota(all.begin(), all.end(), 0);
  const auto d = static_cast<Eigen::Index>(dim_of(n + 1));
  const Matrix id = Matrix::Identity(d, d);
  const Complex minus_i_sin(0, -std::sin(t));
  const Matrix x_part = std::cos(t) * id + minus_i_sin * pauli_string_matrix<double>(coupling(Pauli::X, all), n + 1);
  const Matrix p_part =
      std::cos(t) * id + minus_i_sin * pauli_string_matrix<double>(coupling(second_coupling(v), all), n + 1);
  return x_part * p_part;
}

namespace {

std::vector<int> coupled_qubits(int data, std::span<const int> signals) {
  std::vector<int> qubits{data};
  qubits.insert(qubits.end(), signals.begin(), signals.end());
  return qubits;
}

}  // namespace

void apply_encoding(StateVector& state, int data, std::span<const int> signals, double t, Variant v) {
  const std::vector<int> qubits = coupled_qubits(data, signals);
  kernels::check_targets(qubits, state.num_qubits());
  apply_pauli_rotation_inplace(state, coupling(second_coupling(v), qubits), t);
  apply_pauli_rotation_inplace(state, coupling(Pauli::X, qubits), t);
}

void apply_encoding_inverse(StateVector& state, int data, std::span<const int> signals, double t, Variant v) {
  const std::vector<int> qubits = coupled_qubits(data, signals);
  kernels::check_targets(qubits, state.num_qubits());
  apply_pauli_rotation_inplace(state, coupling(Pauli::X, qubits), -t);
  apply_pauli_rotation_inplace(state, coupling(second_coupling(v), qubits), -t);
}

namespace {

StateVector bell_pairs(const ProtocolConfig& config, const StateVector& head) {
  // Each (S_i, N_i) pair sits on consecutive qubits above the head register.
  const double h = 1.0 / std::sqrt(2.0);
  Vector bell(4);
  bell << h, 0, 0, h;
  StateVector out = head;
  for (int i = 1; i <= config.n; ++i) {
    out = out.tensor(StateVector(bell, RegisterLayout({Role::signal(i), Role::noise(i)})));
  }
  return out;
}

}  // namespace

StateVector prepare_initial(const ProtocolConfig& config, const StateVector& psi) {
  config.validate();
  if (config.with_reference()) {
    throw Error(ErrorCode::kInvalidArgument, "reference variant entangles A with Ref; no input state is loaded");
  }
  if (psi.num_qubits() != 1) throw Error(ErrorCode::kDimensionMismatch, "input must be a single qubit");
  return bell_pairs(config, psi.relabeled(RegisterLayout({Role::data()})));
}

StateVector prepare_initial(const ProtocolConfig& config) {
  config.validate();
  if (!config.with_reference()) {
    throw Error(ErrorCode::kInvalidArgument, "an input state is required unless the reference variant is used");
  }
  const double h = 1.0 / std::sqrt(2.0);
  Vector bell(4);
  bell << h, 0, 0, h;
  return bell_pairs(config, StateVector(bell, RegisterLayout({Role::reference(), Role::data()})));
}

namespace {

void encode_in_place(StateVector& state, const ProtocolConfig& config) {
  const RegisterLayout& layout = state.layout();
  std::vector<int> signals;
  for (int i = 1; i <= config.n; ++i) signals.push_back(layout.qubit(Role::signal(i)));
  apply_encoding(state, layout.qubit(Role::data()), signals, config.t, config.variant);
}

}  // namespace

StateVector encode(const ProtocolConfig& config, const StateVector& psi) {
  StateVector state = prepare_initial(config, psi);
  encode_in_place(state, config);
  return state;
}

StateVector encode(const ProtocolConfig& config) {
  StateVector state = prepare_initial(config);
  encode_in_place(state, config);
  return state;
}

DensityOperator reduce(const StateVector& state, std::span<const Role> keep) {
  if (keep.empty()) throw Error(ErrorCode::kInvalidQubits, "keep set is empty");
  const std::vector<int> qubits = state.layout().qubits(keep);
  return partial_trace(state, std::span<const int>(qubits));
}

DensityOperator run_channel(const ProtocolConfig& config, const StateVector& psi, std::span<const Role> keep) {
  return reduce(encode(config, psi), keep);
}

DensityOperator run_channel(const ProtocolConfig& config, std::span<const Role> keep) {
  return reduce(encode(config), keep);
}

}  // namespace qclone::protocol
