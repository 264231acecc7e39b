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

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "qclone/core/state_vector.hpp"

namespace qclone::protocol {

/// "0", "1", "+", "-", "+i", "-i".
StateVector named_qubit(std::string_view name);

/// Normalized (a0, a1); throws kNotNormalized when |a0|^2 + |a1|^2 != 1.
StateVector qubit_from_amplitudes(Complex a0, Complex a1);

/// Haar-distributed pure qubit from two complex Gaussians.
StateVector haar_random_qubit(std::mt19937_64& rng);

/// The six Pauli eigenstates, a tomographically complete input set.
std::vector<StateVector> pauli_eigenstates();

std::vector<std::string_view> pauli_eigenstate_names();

}  // namespace qclone::protocol
