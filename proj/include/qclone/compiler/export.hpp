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

#include <string>
#include <string_view>

#include "qclone/compiler/circuit.hpp"

namespace qclone::compiler {

enum class CircuitFormat { kText, kOpenQasm2 };

CircuitFormat parse_circuit_format(std::string_view text);

/// TEXT: "# qclone text circuit", "qubits=N", then one `KIND q[,q2][;param=value]` line per gate.
/// OPENQASM2: qelib1 vocabulary; CONTROLLED_U is lowered to u1 on the control plus cu3.
/// Errors: kUnsupportedGate for GENERIC_2Q in OPENQASM2.
std::string export_circuit(const GateCircuit& c, CircuitFormat format);

/// Parses the TEXT format. Errors: kParse.
GateCircuit parse_text_circuit(std::string_view text);

/// u = e^{i gamma} U3(theta, phi, lambda).
struct U3Angles {
  double gamma = 0.0;
  double theta = 0.0;
  double phi = 0.0;
  double lambda = 0.0;
};

U3Angles u3_decompose(const Matrix2& u);
Matrix2 u3_matrix(double theta, double phi, double lambda);

}  // namespace qclone::compiler
