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

#include "qclone/protocol/config.hpp"

#include <cmath>
#include <string>

namespace qclone::protocol {

std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::kStandard: return "standard";
    case Variant::kRotatedX2: return "rotated";
    case Variant::kWithReference: return "reference";
  }
  return "standard";
}

Variant parse_variant(std::string_view text) {
  if (text == "standard") return Variant::kStandard;
  if (text == "rotated") return Variant::kRotatedX2;
  if (text == "reference") return Variant::kWithReference;
  throw Error(ErrorCode::kInvalidArgument, "unknown variant '" + std::string(text) + "'");
}

void ProtocolConfig::validate() const {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "clone count n must be >= 1");
  if (signal_target < 1 || signal_target > n) {
    throw Error(ErrorCode::kInvalidArgument, "signal target " + std::to_string(signal_target) + " outside 1.." +
                                                 std::to_string(n));
  }
  if (!std::isfinite(t)) throw Error(ErrorCode::kInvalidArgument, "encoding angle must be finite");
  require_capacity(num_qubits());
}

Pauli second_coupling(Variant v) { return v == Variant::kRotatedX2 ? Pauli::Y : Pauli::Z; }

void AlphaCoefficients::validate() const {
  for (const Complex& a : alpha) {
    if (std::abs(std::abs(a) - 1.0) > tol::kUnitary) {
      throw Error(ErrorCode::kInvalidArgument, "decoder phases must be unimodular");
    }
  }
}

namespace {

Complex ipow(int k) { return detail::i_power(k); }
Complex minus_ipow(int k) { return detail::i_power(3 * k); }  // (-i)^k = i^{3k}

}  // namespace

AlphaCoefficients standard_alphas(int n) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "clone count n must be >= 1");
  return {{Complex(1), Complex(0, 1), -ipow(n + 1), Complex(0, 1)}};
}

AlphaCoefficients rotated_variant_coefficients(int n) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "clone count n must be >= 1");
  return {{Complex(1), Complex(0, 1), Complex(0, 1), -minus_ipow(n + 1)}};
}

std::array<Complex, 4> encoding_coefficients(int n, double t, Variant v) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "clone count n must be >= 1");
  const double c = std::cos(t);
  const double s = std::sin(t);
  const Complex cross(0, -c * s);
  if (v == Variant::kRotatedX2) {
    return {Complex(c * c), cross, cross, -ipow(n + 1) * (s * s)};
  }
  return {Complex(c * c), cross, -minus_ipow(n + 1) * (s * s), cross};
}

bool is_exact_decryption_angle(double t) {
  if (!std::isfinite(t)) return false;
  const double m = std::round((t - kPi / 4) / (kPi / 2));
  return std::abs(t - (kPi / 4 + m * kPi / 2)) <= 1e-12 * std::max(1.0, std::abs(t));
}

AlphaCoefficients decoding_alphas(int n, double t, Variant v) {
  if (!is_exact_decryption_angle(t)) {
    throw Error(ErrorCode::kUnsupportedAngle,
                "exact decryption needs t = pi/4 + m pi/2, got t = " + std::to_string(t));
  }
  const auto c = encoding_coefficients(n, t, v);
  AlphaCoefficients out;
  for (std::size_t mu = 0; mu < 4; ++mu) {
    const Complex a = 1.0 / (2.0 * c[mu]);
    out.alpha[mu] = a / std::abs(a);
  }
  return out;
}

}  // namespace qclone::protocol
