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
#include <string>
#include <vector>

#include "qclone/core/density_operator.hpp"
#include "qclone/core/register_layout.hpp"
#include "qclone/core/state_vector.hpp"

namespace qclone::analysis {

/// One audited claim about one subsystem. `expected` is whether the claim should hold
/// for this n (single clones leak the input when n = 1); `passed` compares the two.
struct AuditCheck {
  std::string claim;
  std::string subsystem;
  double value = 0.0;  ///< deviation or trace distance, >= 0
  double tolerance = 0.0;
  bool expected = true;
  bool holds = false;
  bool passed() const { return holds == expected; }
};

struct CapacitySummary {
  double lower_bound_at_t = 0.0;  ///< I(t) at the audited angle
  double decoded_channel = 1.0;   ///< A -> (S_i, all N): constructive decoder gives 1
  std::optional<double> single_signal;  ///< A -> S_i: 0 from the constant output (n >= 2 only)
};

struct AuditReport {
  int n = 0;
  double t = 0.0;
  std::vector<std::string> inputs;
  std::vector<AuditCheck> checks;
  CapacitySummary capacity;
  bool fully_encrypted = true;

  bool all_passed() const;
  /// Largest value among checks of `claim` (0 when none).
  double max_value(const std::string& claim) const;
};

/// Claims audited by encryption_audit.
inline constexpr const char* kClaimMaximallyMixed = "maximally_mixed";
inline constexpr const char* kClaimInputIndependent = "input_independent";
inline constexpr const char* kClaimErasureState = "erasure_state";
inline constexpr const char* kClaimKeyConsumed = "key_consumed";

/// (1/4) sum_mu |phi_mu><phi_mu|^{(x) m} over m pairs, each pair (S, N) = (low, high).
DensityOperator erasure_reference_state(int m);

/// Checks, over every input in `inputs` at t = pi/4:
///  - rho_A and each rho_{S_i} equal I/2;
///  - the marginals of A, each S_i, all noise qubits and every (n-1)-pair subset do not
///    depend on the input, and the (n-1)-pair marginals equal erasure_reference_state;
///  - after decrypting S_1 the remaining qubits do not depend on the input.
/// Errors: kInvalidArgument for empty `inputs` or n < 1.
AuditReport encryption_audit(int n, const std::vector<StateVector>& inputs,
                             const std::vector<std::string>& names);

/// Same, over the six Pauli eigenstates.
AuditReport encryption_audit(int n);

}  // namespace qclone::analysis
