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

#include "qclone/protocol/states.hpp"

#include <cmath>
#include <string>

namespace qclone::protocol {

StateVector named_qubit(std::string_view name) {
  const double h = 1.0 / std::sqrt(2.0);
  if (name == "0") return qubit_from_amplitudes(1, 0);
  if (name == "1") return qubit_from_amplitudes(0, 1);
  if (name == "+") return qubit_from_amplitudes(h, h);
  if (name == "-") return qubit_from_amplitudes(h, -h);
  if (name == "+i") return qubit_from_amplitudes(h, Complex(0, h));
  if (name == "-i") return qubit_from_amplitudes(h, Complex(0, -h));
  throw Error(ErrorCode::kInvalidArgument, "unknown named state '" + std::string(name) + "'");
}

StateVector qubit_from_amplitudes(Complex a0, Complex a1) {
  Vector v(2);
  v << a0, a1;
  return StateVector(std::move(v), RegisterLayout({Role::data()}));
}

StateVector haar_random_qubit(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vector v(2);
  do {
    for (Eigen::Index i = 0; i < 2; ++i) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      v[i] = Complex(re, im);
    }
  } while (v.norm() < 1e-6);
  return StateVector::normalized(std::move(v), RegisterLayout({Role::data()}));
}

std::vector<std::string_view> pauli_eigenstate_names() { return {"0", "1", "+", "-", "+i", "-i"}; }

std::vector<StateVector> pauli_eigenstates() {
  std::vector<StateVector> out;
  for (std::string_view name : pauli_eigenstate_names()) out.push_back(named_qubit(name));
  return out;
}

}  // namespace qclone::protocol
