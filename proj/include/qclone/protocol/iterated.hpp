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
#include <optional>
#include <span>
#include <vector>

#include "qclone/core/register_layout.hpp"
#include "qclone/core/state_vector.hpp"
#include "qclone/protocol/decoding.hpp"

namespace qclone::protocol {

/// One n = 2 encryption: `encrypted` is the qubit being cloned, `pairs` the two fresh
/// (S_i, N_i) pair indices it consumes.
struct CloningNode {
  int level = 1;
  int encrypted = 0;
  std::array<int, 2> pairs{};
};

/// Undo one encryption level. A data-slot step inverts the encoder form on
/// (slot, N_a, N_b); a signal step applies the n = 2 decoder to (slot, N_p, N_other).
struct DecryptStep {
  int node = 0;
  bool data_slot = false;
  int pair = 0;  ///< pair index of the decrypted signal (signal steps only)
};

struct CloneSlot {
  int qubit = 0;
  Role role;
  std::vector<DecryptStep> path;  ///< innermost level first
};

/// k rounds of three-way encrypted cloning. Pairs are assigned breadth-first.
struct IteratedCloningPlan {
  int k = 1;
  RegisterLayout layout;
  std::vector<CloningNode> nodes;
  std::vector<CloneSlot> clones;

  int num_pairs() const { return static_cast<int>(nodes.size()) * 2; }
  int num_noise() const { return num_pairs(); }

  /// Noise qubits consumed by each step of `clone`'s path (innermost first).
  std::vector<std::array<int, 2>> key(int clone) const;
  /// All 2k key qubits of `clone`.
  std::vector<int> key_qubits(int clone) const;
};

/// Errors: kInvalidArgument for k < 1, kCapacityExceeded past the register cap.
IteratedCloningPlan iterated_cloning_plan(int k);

/// |psi>_A (x) Bell pairs, then every node's encryption in plan order.
StateVector execute(const IteratedCloningPlan& plan, const StateVector& psi);

/// Decrypts `clone` with its ancestry key.
DecryptionOutcome decrypt_clone(const IteratedCloningPlan& plan, const StateVector& state, int clone,
                                const std::optional<StateVector>& input = std::nullopt);

/// Decrypts `clone` along its path but with caller-chosen noise qubits per step.
DecryptionOutcome decrypt_clone_with_key(const IteratedCloningPlan& plan, const StateVector& state, int clone,
                                         std::span<const std::array<int, 2>> key,
                                         const std::optional<StateVector>& input = std::nullopt);

}  // namespace qclone::protocol
