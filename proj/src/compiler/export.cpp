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

#include "qclone/compiler/export.hpp"

#include <charconv>
#include <cmath>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace qclone::compiler {

namespace {

constexpr int kTextDigits = 17;
constexpr std::string_view kTextHeader = "# qclone text circuit";

std::string format_real(double x, int digits) {
  std::ostringstream os;
  os << std::setprecision(digits) << x;
  return os.str();
}

std::string format_matrix(const Matrix& m) {
  std::string out;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (!out.empty()) out += ',';
      out += format_real(m(r, c).real(), kTextDigits) + ',' + format_real(m(r, c).imag(), kTextDigits);
    }
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

int parse_int(std::string_view s, int line) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(ErrorCode::kParse, "line " + std::to_string(line) + ": bad integer '" + std::string(s) + "'");
  }
  return value;
}

double parse_real(std::string_view s, int line) {
  const std::string text(s);
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) {
    throw Error(ErrorCode::kParse, "line " + std::to_string(line) + ": bad number '" + text + "'");
  }
  return value;
}

Matrix parse_matrix(std::string_view s, Eigen::Index dim, int line) {
  const std::vector<std::string_view> parts = split(s, ',');
  if (static_cast<Eigen::Index>(parts.size()) != 2 * dim * dim) {
    throw Error(ErrorCode::kParse, "line " + std::to_string(line) + ": expected " + std::to_string(2 * dim * dim) +
                                       " matrix components, got " + std::to_string(parts.size()));
  }
  Matrix m(dim, dim);
  std::size_t k = 0;
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) {
      const double re = parse_real(parts[k++], line);
      const double im = parse_real(parts[k++], line);
      m(r, c) = Complex(re, im);
    }
  }
  return m;
}

std::string export_text(const GateCircuit& c) {
  std::string out = std::string(kTextHeader) + "\nqubits=" + std::to_string(c.num_qubits()) + "\n";
  for (const Gate& g : c.gates()) {
    out += to_string(g.kind);
    out += ' ';
    for (std::size_t i = 0; i < g.qubits.size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(g.qubits[i]);
    }
    switch (g.kind) {
      case GateKind::kRZ: out += ";theta=" + format_real(g.param, kTextDigits); break;
      case GateKind::kPhase: out += ";phi=" + format_real(g.param, kTextDigits); break;
      case GateKind::kControlledU:
      case GateKind::kGeneric2Q: out += ";u=" + format_matrix(g.matrix); break;
      default: break;
    }
    out += '\n';
  }
  return out;
}

std::string export_qasm(const GateCircuit& c) {
  std::ostringstream os;
  os << std::setprecision(kTextDigits);
  os << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
  os << "qreg q[" << c.num_qubits() << "];\n";
  for (const Gate& g : c.gates()) {
    const auto q = [&](std::size_t i) { return "q[" + std::to_string(g.qubits[i]) + "]"; };
    switch (g.kind) {
      case GateKind::kH: os << "h " << q(0) << ";\n"; break;
      case GateKind::kX: os << "x " << q(0) << ";\n"; break;
      case GateKind::kZ: os << "z " << q(0) << ";\n"; break;
      case GateKind::kRZ: os << "rz(" << g.param << ") " << q(0) << ";\n"; break;
      case GateKind::kPhase: os << "u1(" << g.param << ") " << q(0) << ";\n"; break;
      case GateKind::kCNOT: os << "cx " << q(0) << "," << q(1) << ";\n"; break;
      case GateKind::kControlledU: {
        const U3Angles a = u3_decompose(Matrix2(g.matrix));
        if (a.gamma != 0.0) os << "u1(" << a.gamma << ") " << q(0) << ";\n";
        os << "cu3(" << a.theta << "," << a.phi << "," << a.lambda << ") " << q(0) << "," << q(1) << ";\n";
        break;
      }
      case GateKind::kGeneric2Q:
        throw Error(ErrorCode::kUnsupportedGate, "GENERIC_2Q has no OPENQASM 2 form; compile it first");
    }
  }
  return os.str();
}

}  // namespace

CircuitFormat parse_circuit_format(std::string_view text) {
  if (text == "text" || text == "TEXT") return CircuitFormat::kText;
  if (text == "openqasm2" || text == "OPENQASM2" || text == "qasm") return CircuitFormat::kOpenQasm2;
  throw Error(ErrorCode::kInvalidArgument, "unknown circuit format '" + std::string(text) + "'");
}

std::string export_circuit(const GateCircuit& c, CircuitFormat format) {
  return format == CircuitFormat::kText ? export_text(c) : export_qasm(c);
}

GateCircuit parse_text_circuit(std::string_view text) {
  const std::vector<std::string_view> lines = split(text, '\n');
  std::optional<GateCircuit> circuit;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const int line_no = static_cast<int>(i) + 1;
    const std::string_view line = lines[i];
    if (line.empty() || line.front() == '#') continue;
    if (!circuit) {
      if (line.substr(0, 7) != "qubits=") {
        throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) + ": expected 'qubits=N'");
      }
      circuit.emplace(parse_int(line.substr(7), line_no));
      continue;
    }
    const std::size_t space = line.find(' ');
    if (space == std::string_view::npos) {
      throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) + ": missing qubit list");
    }
    Gate g;
    g.kind = parse_gate_kind(line.substr(0, space));
    const std::vector<std::string_view> fields = split(line.substr(space + 1), ';');
    for (std::string_view q : split(fields[0], ',')) g.qubits.push_back(parse_int(q, line_no));
    for (std::size_t f = 1; f < fields.size(); ++f) {
      const std::size_t eq = fields[f].find('=');
      if (eq == std::string_view::npos) {
        throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) + ": parameter without '='");
      }
      const std::string_view key = fields[f].substr(0, eq);
      const std::string_view value = fields[f].substr(eq + 1);
      if ((key == "theta" && g.kind == GateKind::kRZ) || (key == "phi" && g.kind == GateKind::kPhase)) {
        g.param = parse_real(value, line_no);
      } else if (key == "u" && g.kind == GateKind::kControlledU) {
        g.matrix = parse_matrix(value, 2, line_no);
      } else if (key == "u" && g.kind == GateKind::kGeneric2Q) {
        g.matrix = parse_matrix(value, 4, line_no);
      } else {
        throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) + ": unexpected parameter '" +
                                           std::string(key) + "' for " + std::string(to_string(g.kind)));
      }
    }
    try {
      circuit->add(std::move(g));
    } catch (const Error& e) {
      throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!circuit) throw Error(ErrorCode::kParse, "missing 'qubits=N' header");
  return *circuit;
}

Matrix2 u3_matrix(double theta, double phi, double lambda) {
  const double c = std::cos(theta / 2);
  const double s = std::sin(theta / 2);
  Matrix2 m;
  m << c, -std::polar(s, lambda), std::polar(s, phi), std::polar(c, phi + lambda);
  return m;
}

U3Angles u3_decompose(const Matrix2& u) {
  constexpr double kTiny = 1e-14;
  U3Angles a;
  const double c = std::abs(u(0, 0));
  const double s = std::abs(u(1, 0));
  a.theta = 2 * std::atan2(s, c);
  if (s < kTiny) {
    a.gamma = std::arg(u(0, 0));
    a.lambda = std::arg(u(1, 1)) - a.gamma;
  } else if (c < kTiny) {
    a.gamma = std::arg(u(1, 0));
    a.lambda = std::arg(-u(0, 1)) - a.gamma;
  } else {
    a.gamma = std::arg(u(0, 0));
    a.phi = std::arg(u(1, 0)) - a.gamma;
    a.lambda = std::arg(-u(0, 1)) - a.gamma;
  }
  return a;
}

}  // namespace qclone::compiler
