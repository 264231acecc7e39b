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

#include "qclone/protocol/iterated.hpp"

#include <algorithm>
#include <string>

#include "qclone/protocol/encoding.hpp"

namespace qclone::protocol {

namespace {

constexpr double kIteratedAngle = kPi / 4.0;

int power_of_three(int k) {
  int p = 1;
  for (int i = 0; i < k; ++i) p *= 3;
  return p;
}

}  // namespace

std::vector<std::array<int, 2>> IteratedCloningPlan::key(int clone) const {
  if (clone < 0 || clone >= static_cast<int>(clones.size())) {
    throw Error(ErrorCode::kInvalidArgument, "clone " + std::to_string(clone) + " out of range");
  }
  std::vector<std::array<int, 2>> out;
  for (const DecryptStep& step : clones[static_cast<std::size_t>(clone)].path) {
    const CloningNode& node = nodes[static_cast<std::size_t>(step.node)];
    int own = node.pairs[0];
    int other = node.pairs[1];
    if (!step.data_slot && step.pair == node.pairs[1]) std::swap(own, other);
    out.push_back({layout.qubit(Role::noise(own)), layout.qubit(Role::noise(other))});
  }
  return out;
}

std::vector<int> IteratedCloningPlan::key_qubits(int clone) const {
  std::vector<int> out;
  for (const auto& pair : key(clone)) out.insert(out.end(), pair.begin(), pair.end());
  return out;
}

IteratedCloningPlan iterated_cloning_plan(int k) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "iteration depth k must be >= 1");
  if (k > 6) throw Error(ErrorCode::kCapacityExceeded, "iteration depth " + std::to_string(k) + " is far past capacity");
  const int pairs = power_of_three(k) - 1;
  require_capacity(2 * pairs + 1);

  IteratedCloningPlan plan;
  plan.k = k;
  plan.layout = RegisterLayout::protocol(pairs, false);

  // Clones of the current level, each with its path (outermost level first while building).
  struct Lineage {
    Role role;
    std::vector<DecryptStep> outer_first;
  };
  std::vector<Lineage> level{{Role::data(), {}}};
  int next_pair = 1;
  for (int l = 1; l <= k; ++l) {
    std::vector<Lineage> grown;
    for (const Lineage& parent : level) {
      const int node_index = static_cast<int>(plan.nodes.size());
      const CloningNode node{l, plan.layout.qubit(parent.role), {next_pair, next_pair + 1}};
      next_pair += 2;
      plan.nodes.push_back(node);

      Lineage stay = parent;
      stay.outer_first.push_back({node_index, true, 0});
      grown.push_back(std::move(stay));
      for (int p : node.pairs) {
        Lineage fresh{Role::signal(p), parent.outer_first};
        fresh.outer_first.push_back({node_index, false, p});
        grown.push_back(std::move(fresh));
      }
    }
    level = std::move(grown);
  }

  for (Lineage& c : level) {
    CloneSlot slot{plan.layout.qubit(c.role), c.role, {c.outer_first.rbegin(), c.outer_first.rend()}};
    plan.clones.push_back(std::move(slot));
  }
  std::sort(plan.clones.begin(), plan.clones.end(),
            [](const CloneSlot& a, const CloneSlot& b) { return a.qubit < b.qubit; });
  return plan;
}

StateVector execute(const IteratedCloningPlan& plan, const StateVector& psi) {
  ProtocolConfig config;
  config.n = plan.num_pairs();
  config.t = kIteratedAngle;
  StateVector state = prepare_initial(config, psi);
  for (const CloningNode& node : plan.nodes) {
    const std::vector<int> signals{plan.layout.qubit(Role::signal(node.pairs[0])),
                                   plan.layout.qubit(Role::signal(node.pairs[1]))};
    apply_encoding(state, node.encrypted, signals, kIteratedAngle);
  }
  return state;
}

DecryptionOutcome decrypt_clone_with_key(const IteratedCloningPlan& plan, const StateVector& state, int clone,
                                         std::span<const std::array<int, 2>> key,
                                         const std::optional<StateVector>& input) {
  if (clone < 0 || clone >= static_cast<int>(plan.clones.size())) {
    throw Error(ErrorCode::kInvalidArgument, "clone " + std::to_string(clone) + " out of range");
  }
  if (!(state.layout() == plan.layout)) {
    throw Error(ErrorCode::kPrecondition, "state layout does not match the cloning plan");
  }
  const CloneSlot& target = plan.clones[static_cast<std::size_t>(clone)];
  if (key.size() != target.path.size()) {
    throw Error(ErrorCode::kInvalidArgument, "key has " + std::to_string(key.size()) + " steps, path has " +
                                                 std::to_string(target.path.size()));
  }
  const AlphaCoefficients alphas = decoding_alphas(2, kIteratedAngle, Variant::kStandard);
  const std::vector<KeyFactor> one_key{KeyFactor::kTransposed};
  const Matrix decoder = bell_controlled_decoder(alphas, one_key);

  StateVector work = state;
  const int slot = target.qubit;
  for (std::size_t s = 0; s < target.path.size(); ++s) {
    const std::array<int, 2>& noise = key[s];
    if (target.path[s].data_slot) {
      apply_encoding_inverse(work, slot, noise, kIteratedAngle);
    } else {
      const std::vector<int> qubits{slot, noise[0], noise[1]};
      apply_unitary_inplace(work, decoder, std::span<const int>(qubits));
    }
  }
  return make_outcome(std::move(work), slot, input);
}

DecryptionOutcome decrypt_clone(const IteratedCloningPlan& plan, const StateVector& state, int clone,
                                const std::optional<StateVector>& input) {
  const std::vector<std::array<int, 2>> k = plan.key(clone);
  return decrypt_clone_with_key(plan, state, clone, k, input);
}

}  // namespace qclone::protocol
