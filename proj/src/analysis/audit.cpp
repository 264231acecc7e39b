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

#include "qclone/analysis/audit.hpp"

#include <algorithm>
#include <string>

#include "qclone/analysis/coherent_information.hpp"
#include "qclone/core/pauli.hpp"
#include "qclone/protocol/decoding.hpp"
#include "qclone/protocol/encoding.hpp"
#include "qclone/protocol/states.hpp"

namespace qclone::analysis {

bool AuditReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const AuditCheck& c) { return c.passed(); });
}

double AuditReport::max_value(const std::string& claim) const {
  double out = 0.0;
  for (const AuditCheck& c : checks) {
    if (c.claim == claim) out = std::max(out, c.value);
  }
  return out;
}

DensityOperator erasure_reference_state(int m) {
  if (m < 1) throw Error(ErrorCode::kInvalidArgument, "erasure state needs at least one pair");
  require_capacity(2 * m);
  const auto d = static_cast<Eigen::Index>(dim_of(2 * m));
  Matrix sum = Matrix::Zero(d, d);
  for (int mu = 0; mu < 4; ++mu) {
    const Eigen::Vector4cd phi = bell_state<double>(mu);
    const Matrix pair = phi * phi.adjoint();
    Matrix term = pair;
    for (int j = 1; j < m; ++j) term = kron(pair, term);
    sum += term;
  }
  return DensityOperator::trusted(sum / 4.0, RegisterLayout::wires(2 * m));
}

namespace {

struct Subsystem {
  std::string name;
  std::vector<Role> roles;
};

std::string join_labels(const std::vector<Role>& roles) {
  std::string out;
  for (const Role& r : roles) out += (out.empty() ? "" : ",") + r.label();
  return out;
}

double max_pairwise_distance(const std::vector<DensityOperator>& states) {
  double worst = 0.0;
  for (std::size_t a = 0; a < states.size(); ++a) {
    for (std::size_t b = a + 1; b < states.size(); ++b) worst = std::max(worst, trace_distance(states[a], states[b]));
  }
  return worst;
}

}  // namespace

AuditReport encryption_audit(int n, const std::vector<StateVector>& inputs, const std::vector<std::string>& names) {
  if (inputs.empty()) throw Error(ErrorCode::kInvalidArgument, "audit needs at least one input state");
  if (names.size() != inputs.size()) throw Error(ErrorCode::kInvalidArgument, "one name per input state");
  protocol::ProtocolConfig config;
  config.n = n;
  config.validate();

  AuditReport report;
  report.n = n;
  report.t = config.t;
  report.inputs = names;
  report.fully_encrypted = n > 1;
  report.capacity.lower_bound_at_t = coherent_information_formula(config.t);

  std::vector<StateVector> encoded;
  std::vector<StateVector> decoded;
  for (const StateVector& psi : inputs) {
    encoded.push_back(protocol::encode(config, psi));
    decoded.push_back(protocol::decrypt(encoded.back(), config, 1).global_state);
  }

  std::vector<Subsystem> singles{{"A", {Role::data()}}};
  for (int i = 1; i <= n; ++i) singles.push_back({"S" + std::to_string(i), {Role::signal(i)}});

  const DensityOperator half = DensityOperator::maximally_mixed(RegisterLayout::wires(1));
  for (const Subsystem& s : singles) {
    double worst = 0.0;
    for (const StateVector& e : encoded) worst = std::max(worst, protocol::reduce(e, s.roles).max_deviation(half));
    // The lone clone of n = 1 carries the input.
    const bool expected = !(n == 1 && s.roles.front().kind == RoleKind::kSignal);
    report.checks.push_back({kClaimMaximallyMixed, s.name, worst, tol::kState, expected, worst < tol::kState});
  }

  std::vector<Subsystem> unauthorized = singles;
  std::vector<Role> all_noise;
  for (int i = 1; i <= n; ++i) all_noise.push_back(Role::noise(i));
  unauthorized.push_back({join_labels(all_noise), all_noise});
  std::vector<Subsystem> erasures;
  if (n >= 2) {
    for (int skip = 1; skip <= n; ++skip) {
      std::vector<Role> kept;
      for (int j = 1; j <= n; ++j) {
        if (j == skip) continue;
        kept.push_back(Role::signal(j));
        kept.push_back(Role::noise(j));
      }
      erasures.push_back({join_labels(kept), kept});
      unauthorized.push_back(erasures.back());
    }
  }
  for (const Subsystem& s : unauthorized) {
    std::vector<DensityOperator> marginals;
    for (const StateVector& e : encoded) marginals.push_back(protocol::reduce(e, s.roles));
    const double spread = max_pairwise_distance(marginals);
    const bool expected = !(n == 1 && s.roles.front().kind == RoleKind::kSignal);
    report.checks.push_back({kClaimInputIndependent, s.name, spread, tol::kState, expected, spread < tol::kState});
  }

  if (!erasures.empty()) {
    const DensityOperator reference = erasure_reference_state(n - 1);
    for (const Subsystem& s : erasures) {
      double worst = 0.0;
      for (const StateVector& e : encoded) {
        worst = std::max(worst, protocol::reduce(e, s.roles).max_deviation(reference));
      }
      report.checks.push_back({kClaimErasureState, s.name, worst, tol::kState, true, worst < tol::kState});
    }
  }

  {
    const int slot = config.layout().qubit(Role::signal(1));
    const std::vector<int> rest = kernels::complement(std::vector<int>{slot}, config.num_qubits());
    std::vector<DensityOperator> residuals;
    for (const StateVector& d : decoded) residuals.push_back(partial_trace(d, std::span<const int>(rest)));
    const double spread = max_pairwise_distance(residuals);
    report.checks.push_back({kClaimKeyConsumed, "all but S1 after decoding", spread, tol::kState, true,
                             spread < tol::kState});
  }

  if (n >= 2) report.capacity.single_signal = 0.0;
  return report;
}

AuditReport encryption_audit(int n) {
  std::vector<std::string> names;
  for (std::string_view s : protocol::pauli_eigenstate_names()) names.emplace_back(s);
  return encryption_audit(n, protocol::pauli_eigenstates(), names);
}

}  // namespace qclone::analysis
