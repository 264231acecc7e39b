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

#include <algorithm>
#include <compare>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "qclone/core/error.hpp"

namespace qclone {

enum class RoleKind { kReference, kData, kSignal, kNoise, kWire };

/// Logical name of a physical qubit: the reference Ã, the data qubit A, signal S_i,
/// noise N_i, or an anonymous wire for registers outside the protocol.
struct Role {
  RoleKind kind = RoleKind::kWire;
  int index = 0;

  static constexpr Role reference() { return {RoleKind::kReference, 0}; }
  static constexpr Role data() { return {RoleKind::kData, 0}; }
  static constexpr Role signal(int i) { return {RoleKind::kSignal, i}; }
  static constexpr Role noise(int i) { return {RoleKind::kNoise, i}; }
  static constexpr Role wire(int i) { return {RoleKind::kWire, i}; }

  friend constexpr auto operator<=>(const Role&, const Role&) = default;

  std::string label() const {
    switch (kind) {
      case RoleKind::kReference: return "Ref";
      case RoleKind::kData: return "A";
      case RoleKind::kSignal: return "S" + std::to_string(index);
      case RoleKind::kNoise: return "N" + std::to_string(index);
      case RoleKind::kWire: return "q" + std::to_string(index);
    }
    return "?";
  }
};

/// Qubit 0 is the least-significant bit of an amplitude index. Big-endian is only
/// used when rendering basis labels for humans.
enum class QubitOrder { kLittleEndian, kBigEndian };

/// Bijection between physical qubit indices and protocol roles.
class RegisterLayout {
 public:
  RegisterLayout() = default;

  explicit RegisterLayout(std::vector<Role> roles_by_qubit) : roles_(std::move(roles_by_qubit)) {
    for (int q = 0; q < num_qubits(); ++q) {
      const Role& r = roles_[static_cast<std::size_t>(q)];
      if ((r.kind == RoleKind::kSignal || r.kind == RoleKind::kNoise) && r.index < 1) {
        throw Error(ErrorCode::kInvalidArgument, "signal/noise roles are numbered from 1");
      }
      if (r.kind == RoleKind::kWire && r.index < 0) {
        throw Error(ErrorCode::kInvalidArgument, "wire roles are numbered from 0");
      }
      if (!index_.emplace(r, q).second) {
        throw Error(ErrorCode::kInvalidArgument, "role " + r.label() + " assigned twice");
      }
    }
  }

  /// Protocol register: [Ref], A, S1, N1, S2, N2, ..., Sn, Nn in increasing qubit index.
  static RegisterLayout protocol(int n, bool with_reference) {
    if (n < 1) throw Error(ErrorCode::kInvalidArgument, "clone count must be >= 1");
    std::vector<Role> roles;
    roles.reserve(static_cast<std::size_t>(2 * n + 2));
    if (with_reference) roles.push_back(Role::reference());
    roles.push_back(Role::data());
    for (int i = 1; i <= n; ++i) {
      roles.push_back(Role::signal(i));
      roles.push_back(Role::noise(i));
    }
    return RegisterLayout(std::move(roles));
  }

  static RegisterLayout wires(int count) {
    std::vector<Role> roles;
    for (int q = 0; q < count; ++q) roles.push_back(Role::wire(q));
    return RegisterLayout(std::move(roles));
  }

  int num_qubits() const { return static_cast<int>(roles_.size()); }
  QubitOrder order() const { return QubitOrder::kLittleEndian; }

  bool contains(const Role& r) const { return index_.contains(r); }

  int qubit(const Role& r) const {
    const auto it = index_.find(r);
    if (it == index_.end()) {
      throw Error(ErrorCode::kInvalidQubits, "role " + r.label() + " not present in layout");
    }
    return it->second;
  }

  std::vector<int> qubits(std::span<const Role> roles) const {
    std::vector<int> out;
    out.reserve(roles.size());
    for (const Role& r : roles) out.push_back(qubit(r));
    return out;
  }

  const Role& role(int q) const {
    if (q < 0 || q >= num_qubits()) {
      throw Error(ErrorCode::kInvalidQubits, "qubit " + std::to_string(q) + " out of range");
    }
    return roles_[static_cast<std::size_t>(q)];
  }

  const std::vector<Role>& roles() const { return roles_; }

  int count(RoleKind kind) const {
    return static_cast<int>(
        std::count_if(roles_.begin(), roles_.end(), [kind](const Role& r) { return r.kind == kind; }));
  }

  /// Layout of the given qubits, renumbered 0..k-1 in the order supplied.
  RegisterLayout subset(std::span<const int> qubits) const {
    std::vector<Role> roles;
    roles.reserve(qubits.size());
    for (int q : qubits) roles.push_back(role(q));
    return RegisterLayout(std::move(roles));
  }

  /// Basis label such as "|A=0,S1=1,N1=1>" for a little-endian amplitude index.
  std::string basis_label(std::size_t index) const {
    std::string out = "|";
    for (int q = 0; q < num_qubits(); ++q) {
      if (q > 0) out += ",";
      out += role(q).label() + "=" + (((index >> q) & 1U) != 0 ? "1" : "0");
    }
    return out + ">";
  }

  /// Bitstring with qubit 0 leftmost (kLittleEndian) or rightmost (kBigEndian).
  std::string bitstring(std::size_t index, QubitOrder display) const {
    std::string out(static_cast<std::size_t>(num_qubits()), '0');
    for (int q = 0; q < num_qubits(); ++q) {
      const std::size_t pos = display == QubitOrder::kLittleEndian
                                  ? static_cast<std::size_t>(q)
                                  : static_cast<std::size_t>(num_qubits() - 1 - q);
      if (((index >> q) & 1U) != 0) out[pos] = '1';
    }
    return out;
  }

  friend bool operator==(const RegisterLayout& a, const RegisterLayout& b) { return a.roles_ == b.roles_; }

 private:
  std::vector<Role> roles_;
  std::map<Role, int> index_;
};

}  // namespace qclone
