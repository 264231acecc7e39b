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
#include <string>
#include <string_view>

#include "qclone/core/pauli.hpp"
#include "qclone/core/register_layout.hpp"
#include "qclone/core/types.hpp"

namespace qclone::protocol {

/// kRotatedX2 replaces the sigma_3 coupling of the encoder by sigma_2.
/// kWithReference entangles A with a reference qubit instead of loading a pure input.
enum class Variant { kStandard, kRotatedX2, kWithReference };

std::string_view to_string(Variant v);
Variant parse_variant(std::string_view text);

struct ProtocolConfig {
  int n = 2;
  double t = kPi / 4;
  Variant variant = Variant::kStandard;
  int signal_target = 1;

  bool with_reference() const { return variant == Variant::kWithReference; }
  int num_qubits() const { return 2 * n + 1 + (with_reference() ? 1 : 0); }
  RegisterLayout layout() const { return RegisterLayout::protocol(n, with_reference()); }

  /// Throws on n < 1, a target outside 1..n, or a register beyond capacity.
  void validate() const;
};

/// The Pauli coupled alongside sigma_1 in the encoder: Z, or Y for kRotatedX2.
Pauli second_coupling(Variant v);

/// Unimodular phases alpha_mu of the Bell-basis controlled decoder.
struct AlphaCoefficients {
  std::array<Complex, 4> alpha{Complex(1), Complex(1), Complex(1), Complex(1)};

  Complex operator[](int mu) const { return alpha.at(static_cast<std::size_t>(mu)); }
  /// Throws kInvalidArgument unless every |alpha_mu| = 1.
  void validate() const;
};

/// alpha = (1, i, -i^{n+1}, i).
AlphaCoefficients standard_alphas(int n);

/// alpha = (1, i, i, -(-i)^{n+1}), matching the sigma_2 encoder.
AlphaCoefficients rotated_variant_coefficients(int n);

/// c_mu(t) with U_enc(t) = sum_mu c_mu(t) sigma_mu^{(A)} (x) sigma_mu^{(x)n}.
/// Standard: (cos^2 t, -i cos t sin t, -(-i)^{n+1} sin^2 t, -i cos t sin t).
/// Rotated: (cos^2 t, -i cos t sin t, -i cos t sin t, -i^{n+1} sin^2 t).
std::array<Complex, 4> encoding_coefficients(int n, double t, Variant v);

/// True when t = pi/4 + m pi/2 for an integer m (all |c_mu| = 1/2).
bool is_exact_decryption_angle(double t);

/// alpha_mu = 1 / (2 c_mu(t)); requires an exact decryption angle.
AlphaCoefficients decoding_alphas(int n, double t, Variant v);

}  // namespace qclone::protocol
