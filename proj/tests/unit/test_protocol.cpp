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

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "qclone/core.hpp"
#include "qclone/protocol.hpp"

using namespace qclone;
using namespace qclone::protocol;
using Catch::Matchers::WithinAbs;

namespace {

template <typename F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected qclone::Error");
  return ErrorCode::kParse;
}

ProtocolConfig config_for(int n, double t = kPi / 4, Variant v = Variant::kStandard) {
  ProtocolConfig c;
  c.n = n;
  c.t = t;
  c.variant = v;
  return c;
}

Complex ipow(int k) { return std::pow(Complex(0, 1), k); }

using oracle::projector;

oracle::Mat reference_decoder(int n, const AlphaCoefficients& a, int target) {
  return oracle::decoder(n, {a[0], a[1], a[2], a[3]}, target);
}

}  // namespace

TEST_CASE("variant names round trip") {
  for (Variant v : {Variant::kStandard, Variant::kRotatedX2, Variant::kWithReference}) {
    CHECK(parse_variant(to_string(v)) == v);
  }
  CHECK(code_of([] { parse_variant("sideways"); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("config validation") {
  CHECK(code_of([] { config_for(0).validate(); }) == ErrorCode::kInvalidArgument);
  ProtocolConfig c = config_for(2);
  c.signal_target = 3;
  CHECK(code_of([&] { c.validate(); }) == ErrorCode::kInvalidArgument);
  CHECK(config_for(3, kPi / 4, Variant::kWithReference).num_qubits() == 8);
}

TEST_CASE("Pauli expansion coefficients reproduce the encoder", "[property]") {
  const char names[] = {'I', 'X', 'Y', 'Z'};
  for (Variant v : {Variant::kStandard, Variant::kRotatedX2}) {
    for (int n = 1; n <= 4; ++n) {
      for (double t : {0.0, 0.3, kPi / 4, 2.2}) {
        const auto c = encoding_coefficients(n, t, v);
        oracle::Mat sum = oracle::Mat::Zero(1 << (n + 1), 1 << (n + 1));
        for (int mu = 0; mu < 4; ++mu) {
          sum += c[static_cast<std::size_t>(mu)] * oracle::pauli_word(std::string(n + 1, names[mu]));
        }
        const char p = v == Variant::kStandard ? 'Z' : 'Y';
        CHECK(oracle::max_abs(sum - oracle::encoder(n, t, p)) < 1e-12);
      }
    }
  }
}

TEST_CASE("decoder phases") {
  for (int n = 1; n <= 6; ++n) {
    const AlphaCoefficients s = standard_alphas(n);
    CHECK(std::abs(s[0] - Complex(1)) < 1e-15);
    CHECK(std::abs(s[1] - Complex(0, 1)) < 1e-15);
    CHECK(std::abs(s[2] + ipow(n + 1)) < 1e-15);
    CHECK(std::abs(s[3] - Complex(0, 1)) < 1e-15);

    const AlphaCoefficients r = rotated_variant_coefficients(n);
    CHECK(std::abs(r[1] - Complex(0, 1)) < 1e-15);
    CHECK(std::abs(r[2] - Complex(0, 1)) < 1e-15);
    CHECK(std::abs(r[3] + std::pow(Complex(0, -1), n + 1)) < 1e-15);

    // At pi/4 the phases are 1/(2 c_mu).
    for (Variant v : {Variant::kStandard, Variant::kRotatedX2}) {
      const auto c = encoding_coefficients(n, kPi / 4, v);
      const AlphaCoefficients a = decoding_alphas(n, kPi / 4, v);
      const AlphaCoefficients expected = v == Variant::kStandard ? s : r;
      for (int mu = 0; mu < 4; ++mu) {
        CHECK(std::abs(a[mu] - 1.0 / (2.0 * c[static_cast<std::size_t>(mu)])) < 1e-12);
        CHECK(std::abs(a[mu] - expected[mu]) < 1e-12);
      }
    }
  }
  CHECK(is_exact_decryption_angle(kPi / 4));
  CHECK(is_exact_decryption_angle(3 * kPi / 4));
  CHECK(is_exact_decryption_angle(-kPi / 4));
  CHECK_FALSE(is_exact_decryption_angle(kPi / 8));
  CHECK(code_of([] { decoding_alphas(2, 0.3, Variant::kStandard); }) == ErrorCode::kUnsupportedAngle);
  AlphaCoefficients bad;
  bad.alpha[2] = Complex(0.5);
  CHECK(code_of([&] { bad.validate(); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("encoding unitary matches matrix exponentials", "[property]") {
  for (Variant v : {Variant::kStandard, Variant::kRotatedX2}) {
    const char p = v == Variant::kStandard ? 'Z' : 'Y';
    for (int n = 1; n <= 4; ++n) {
      for (double t : {0.0, kPi / 8, kPi / 4, 1.1}) {
        CHECK(oracle::max_abs(encoding_unitary(n, t, v) - oracle::encoder(n, t, p)) < 1e-12);
      }
    }
  }
  CHECK(oracle::max_abs(encoding_unitary(2, 0.0) - oracle::Mat::Identity(8, 8)) < 1e-15);
}

TEST_CASE("encode matches the brute-force global state", "[property]") {
  std::mt19937_64 rng(21);
  for (int n = 1; n <= 3; ++n) {
    const StateVector psi = haar_random_qubit(rng);
    const StateVector encoded = encode(config_for(n, 0.6), psi);
    std::vector<int> targets{0};
    for (int i = 1; i <= n; ++i) targets.push_back(2 * i - 1);
    const oracle::Vec expected = oracle::embed(oracle::encoder(n, 0.6), targets, 2 * n + 1) *
                                 oracle::initial_state(psi.amplitudes(), n);
    CHECK((encoded.amplitudes() - expected).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("reference preparation") {
  CHECK(code_of([] { prepare_initial(config_for(2, kPi / 4, Variant::kWithReference), named_qubit("0")); }) ==
        ErrorCode::kInvalidArgument);
  CHECK(code_of([] { prepare_initial(config_for(2)); }) == ErrorCode::kInvalidArgument);
  const StateVector s = prepare_initial(config_for(1, kPi / 4, Variant::kWithReference));
  const std::vector<Role> ref_a{Role::reference(), Role::data()};
  CHECK(oracle::max_abs(reduce(s, ref_a).matrix() - projector(oracle::bell(0))) < 1e-15);
}

TEST_CASE("decoding unitary matches the Bell-projector construction") {
  for (int n = 1; n <= 4; ++n) {
    for (int target = 1; target <= n; ++target) {
      for (const AlphaCoefficients& a : {standard_alphas(n), rotated_variant_coefficients(n)}) {
        const LocalOperator op = decoding_unitary(n, a, target);
        REQUIRE(op.roles.size() == static_cast<std::size_t>(n + 1));
        CHECK(op.roles[0] == Role::signal(target));
        CHECK(oracle::max_abs(op.matrix - reference_decoder(n, a, target)) < 1e-12);
        CHECK(is_unitary(op.matrix));
      }
    }
  }
  CHECK(code_of([] { decoding_unitary(2, standard_alphas(2), 3); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("decoding after encoding swaps A into the target and restores every pair", "[property]") {
  std::mt19937_64 rng(77);
  for (int n = 2; n <= 4; ++n) {
    for (int target = 1; target <= n; ++target) {
      const StateVector psi = haar_random_qubit(rng);
      const DecryptionOutcome out = decrypt(encode(config_for(n), psi), config_for(n), target, psi);
      CHECK_THAT(*out.fidelity_vs_input, WithinAbs(1.0, 1e-10));
      CHECK(out.slot == out.global_state.layout().qubit(Role::signal(target)));
      const oracle::Mat phi = projector(oracle::bell(0));
      const std::vector<Role> a_pair{Role::data(), Role::noise(target)};
      CHECK(oracle::max_abs(out.reduced(a_pair).matrix() - phi) < 1e-10);
      for (int j = 1; j <= n; ++j) {
        if (j == target) continue;
        const std::vector<Role> pair{Role::signal(j), Role::noise(j)};
        CHECK(oracle::max_abs(out.reduced(pair).matrix() - phi) < 1e-10);
      }
    }
  }
}

TEST_CASE("recovery at t = pi/4 + m pi/2 for both encoders") {
  std::mt19937_64 rng(8);
  for (Variant v : {Variant::kStandard, Variant::kRotatedX2}) {
    for (double t : {kPi / 4, 3 * kPi / 4, 5 * kPi / 4, -kPi / 4}) {
      for (int n = 1; n <= 3; ++n) {
        const StateVector psi = haar_random_qubit(rng);
        const ProtocolConfig c = config_for(n, t, v);
        CHECK_THAT(*decrypt(encode(c, psi), c, n, psi).fidelity_vs_input, WithinAbs(1.0, 1e-10));
      }
    }
  }
}

TEST_CASE("single clone: S1 leaks before decoding and recovers exactly after") {
  const ProtocolConfig c = config_for(1);
  const std::vector<Role> s1{Role::signal(1)};
  const DensityOperator zero = reduce(encode(c, named_qubit("0")), s1);
  const DensityOperator plus_i = reduce(encode(c, named_qubit("+i")), s1);
  CHECK(trace_distance(zero, plus_i) > 0.1);
  for (const char* name : {"0", "1", "+", "-i"}) {
    const StateVector psi = named_qubit(name);
    const DecryptionOutcome out = decrypt(encode(c, psi), c, 1, psi);
    CHECK_FALSE(out.fully_encrypted);
    CHECK_THAT(*out.fidelity_vs_input, WithinAbs(1.0, 1e-10));
  }
}

TEST_CASE("decrypt preconditions") {
  const StateVector enc = encode(config_for(2), named_qubit("0"));
  CHECK(code_of([&] { decrypt(enc, config_for(3), 1); }) == ErrorCode::kPrecondition);
  CHECK(code_of([&] { decrypt(enc, config_for(2), 0); }) == ErrorCode::kInvalidArgument);
  CHECK(code_of([&] { decrypt(enc, config_for(2, kPi / 8), 1); }) == ErrorCode::kUnsupportedAngle);
}

TEST_CASE("residual is independent of the input after decoding", "[property]") {
  for (int n = 2; n <= 3; ++n) {
    const ProtocolConfig c = config_for(n);
    const auto zero = decrypt(encode(c, named_qubit("0")), c, 1);
    const auto one = decrypt(encode(c, named_qubit("1")), c, 1);
    CHECK(trace_distance(zero.residual(), one.residual()) < 1e-10);
  }
}

TEST_CASE("substituting signal qubits for lost noise qubits") {
  std::mt19937_64 rng(4);
  for (int n = 2; n <= 3; ++n) {
    const ProtocolConfig c = config_for(n);
    // Every subset of lost noise qubits that spares the target pair.
    for (int target = 1; target <= n; ++target) {
      for (int mask = 0; mask < (1 << n); ++mask) {
        if ((mask >> (target - 1)) & 1) continue;
        std::vector<int> lost;
        for (int j = 1; j <= n; ++j) {
          if ((mask >> (j - 1)) & 1) lost.push_back(j);
        }
        const StateVector psi = haar_random_qubit(rng);
        const auto out = decrypt_with_substitution(encode(c, psi), c, lost, target, psi);
        CHECK_THAT(*out.fidelity_vs_input, WithinAbs(1.0, 1e-10));
      }
    }
  }
  const ProtocolConfig c = config_for(3);
  const StateVector enc = encode(c, named_qubit("+"));
  const std::vector<int> lost_target{1};
  CHECK(code_of([&] { decrypt_with_substitution(enc, c, lost_target, 1); }) == ErrorCode::kPrecondition);
  const std::vector<int> lost_two{2};
  CHECK(code_of([&] { decrypt_with_substitution(enc, c, lost_two, 1, std::nullopt, lost_two); }) ==
        ErrorCode::kPrecondition);
  CHECK(code_of([&] { decrypt_with_substitution(enc, c, {}, 1, std::nullopt, lost_target); }) ==
        ErrorCode::kPrecondition);
}

TEST_CASE("even clone counts decrypt from A at any angle") {
  std::mt19937_64 rng(12);
  for (int n : {2, 4}) {
    for (double t : {kPi / 4, 0.3, 1.9}) {
      const ProtocolConfig c = config_for(n, t);
      const StateVector psi = haar_random_qubit(rng);
      const auto out = decrypt_from_A(encode(c, psi), c, psi);
      CHECK(out.slot == 0);
      CHECK_THAT(*out.fidelity_vs_input, WithinAbs(1.0, 1e-10));
    }
    const ProtocolConfig r = config_for(n, kPi / 4, Variant::kRotatedX2);
    const StateVector psi = haar_random_qubit(rng);
    CHECK_THAT(*decrypt_from_A(encode(r, psi), r, psi).fidelity_vs_input, WithinAbs(1.0, 1e-10));
  }
  for (int n : {1, 3}) {
    const ProtocolConfig c = config_for(n);
    CHECK(code_of([&] { decrypt_from_A(encode(c, named_qubit("0")), c); }) == ErrorCode::kOddCloneCount);
  }
}

TEST_CASE("reverse encoding recovery") {
  const ProtocolConfig c = config_for(3);
  const StateVector psi = named_qubit("1");
  const std::vector<Role> lost_noise{Role::noise(1), Role::noise(3)};
  const auto out = reverse_encoding_recovery(encode(c, psi), c, psi, lost_noise);
  CHECK_THAT(*out.fidelity_vs_input, WithinAbs(1.0, 1e-10));
  for (int j = 1; j <= 3; ++j) {
    const std::vector<Role> pair{Role::signal(j), Role::noise(j)};
    CHECK(oracle::max_abs(out.reduced(pair).matrix() - projector(oracle::bell(0))) < 1e-10);
  }
  const std::vector<Role> lost_signal{Role::signal(2)};
  CHECK(code_of([&] { reverse_encoding_recovery(encode(c, psi), c, psi, lost_signal); }) ==
        ErrorCode::kPrecondition);
}

TEST_CASE("named and random inputs") {
  CHECK(pauli_eigenstates().size() == 6);
  CHECK(std::abs(named_qubit("-i")[1] - Complex(0, -1.0 / std::sqrt(2.0))) < 1e-15);
  CHECK(code_of([] { named_qubit("2"); }) == ErrorCode::kInvalidArgument);
  std::mt19937_64 a(99);
  std::mt19937_64 b(99);
  CHECK(haar_random_qubit(a).amplitudes() == haar_random_qubit(b).amplitudes());
}

TEST_CASE("iterated cloning plan shape") {
  const IteratedCloningPlan one = iterated_cloning_plan(1);
  CHECK(one.clones.size() == 3);
  CHECK(one.num_noise() == 2);
  CHECK(one.nodes.size() == 1);
  CHECK(one.key_qubits(0) == std::vector<int>{2, 4});

  const IteratedCloningPlan two = iterated_cloning_plan(2);
  CHECK(two.clones.size() == 9);
  CHECK(two.num_noise() == 8);
  CHECK(two.layout.num_qubits() == 17);
  // Breadth first: level-2 nodes encrypt A, S1, S2 with pairs (3,4), (5,6), (7,8).
  REQUIRE(two.nodes.size() == 4);
  CHECK(two.nodes[1].encrypted == two.layout.qubit(Role::data()));
  CHECK(two.nodes[2].encrypted == two.layout.qubit(Role::signal(1)));
  CHECK(two.nodes[3].pairs == std::array<int, 2>{7, 8});
  for (std::size_t c = 0; c < two.clones.size(); ++c) {
    std::vector<int> key = two.key_qubits(static_cast<int>(c));
    CHECK(key.size() == 4);
    for (int q : key) CHECK(two.layout.role(q).kind == RoleKind::kNoise);
    std::sort(key.begin(), key.end());
    CHECK(std::adjacent_find(key.begin(), key.end()) == key.end());
  }
  CHECK(code_of([] { iterated_cloning_plan(0); }) == ErrorCode::kInvalidArgument);
  CHECK(code_of([] { iterated_cloning_plan(3); }) == ErrorCode::kCapacityExceeded);
}

TEST_CASE("iterated clones decrypt with their ancestry keys", "[property]") {
  std::mt19937_64 rng(31);
  for (int k = 1; k <= 2; ++k) {
    const IteratedCloningPlan plan = iterated_cloning_plan(k);
    const StateVector psi = haar_random_qubit(rng);
    const StateVector state = execute(plan, psi);
    for (std::size_t c = 0; c < plan.clones.size(); ++c) {
      const auto out = decrypt_clone(plan, state, static_cast<int>(c), psi);
      CHECK_THAT(*out.fidelity_vs_input, WithinAbs(1.0, 1e-9));
    }
  }
}

TEST_CASE("wrong iterated keys leave the output independent of the input") {
  for (int k = 1; k <= 2; ++k) {
    const IteratedCloningPlan plan = iterated_cloning_plan(k);
    const StateVector zero = execute(plan, named_qubit("0"));
    const StateVector one = execute(plan, named_qubit("1"));
    for (std::size_t c = 0; c < plan.clones.size(); ++c) {
      if (plan.clones[c].role.kind != RoleKind::kSignal) continue;
      auto key = plan.key(static_cast<int>(c));
      for (auto& pair : key) std::swap(pair[0], pair[1]);
      const auto a = decrypt_clone_with_key(plan, zero, static_cast<int>(c), key);
      const auto b = decrypt_clone_with_key(plan, one, static_cast<int>(c), key);
      CHECK(trace_distance(a.recovered, b.recovered) < 1e-9);
    }
  }
  // At k = 2, decrypting S1's outer level with another node's noise pair fails too.
  const IteratedCloningPlan plan = iterated_cloning_plan(2);
  const int s1 = [&] {
    for (std::size_t c = 0; c < plan.clones.size(); ++c) {
      if (plan.clones[c].role == Role::signal(1)) return static_cast<int>(c);
    }
    return -1;
  }();
  auto key = plan.key(s1);
  const std::array<int, 2> foreign{plan.layout.qubit(Role::noise(7)), plan.layout.qubit(Role::noise(8))};
  key.back() = foreign;
  const auto a = decrypt_clone_with_key(plan, execute(plan, named_qubit("0")), s1, key);
  const auto b = decrypt_clone_with_key(plan, execute(plan, named_qubit("1")), s1, key);
  CHECK(trace_distance(a.recovered, b.recovered) < 1e-9);
  CHECK(code_of([&] { decrypt_clone_with_key(plan, execute(plan, named_qubit("0")), s1, {}); }) ==
        ErrorCode::kInvalidArgument);
}
