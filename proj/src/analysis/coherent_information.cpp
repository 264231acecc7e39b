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

#include "qclone/analysis/coherent_information.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>

#include "qclone/protocol/encoding.hpp"

namespace qclone::analysis {

LambdaSpectrum LambdaSpectrum::at(double t) {
  const double c2 = std::cos(t) * std::cos(t);
  const double s2 = std::sin(t) * std::sin(t);
  return {{c2 * c2, s2 * c2, s2 * s2, s2 * c2}, t};
}

double LambdaSpectrum::entropy_bits() const {
  const Eigen::Vector4d p(lambda[0], lambda[1], lambda[2], lambda[3]);
  return shannon_entropy_bits(p);
}

double coherent_information_formula(double t) { return LambdaSpectrum::at(t).entropy_bits() - 1.0; }

SweepRow coherent_information_simulated(int n, double t) {
  protocol::ProtocolConfig config;
  config.n = n;
  config.t = t;
  config.variant = protocol::Variant::kWithReference;
  config.validate();
  const StateVector state = protocol::encode(config);

  std::vector<Role> marginal{Role::signal(1)};
  for (int i = 1; i <= n; ++i) marginal.push_back(Role::noise(i));
  std::vector<Role> joint = marginal;
  joint.push_back(Role::reference());

  SweepRow row;
  row.t = t;
  row.n = n;
  row.S_joint = von_neumann_entropy(protocol::reduce(state, joint));
  row.S_marginal = von_neumann_entropy(protocol::reduce(state, marginal));
  row.I_simulated = row.S_marginal - row.S_joint;
  row.I_formula = coherent_information_formula(t);
  return row;
}

std::vector<double> uniform_grid(double t_min, double t_max, int points) {
  if (points < 1) throw Error(ErrorCode::kInvalidArgument, "grid needs at least one point");
  if (points == 1) return {t_min};
  std::vector<double> grid(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    grid[static_cast<std::size_t>(i)] = t_min + (t_max - t_min) * i / (points - 1);
  }
  return grid;
}

std::vector<double> default_grid() { return uniform_grid(0.0, kPi, 101); }

std::vector<SweepRow> sweep_fig_s1(std::span<const double> t_grid, int n) {
  if (t_grid.empty()) throw Error(ErrorCode::kInvalidArgument, "sweep grid is empty");
  std::vector<double> sorted(t_grid.begin(), t_grid.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<SweepRow> rows;
  rows.reserve(sorted.size());
  for (double t : sorted) rows.push_back(coherent_information_simulated(n, t));
  return rows;
}

void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows, int significant_digits) {
  const auto flags = out.flags();
  const auto precision = out.precision();
  out << std::setprecision(significant_digits);
  out << "t,I_formula,I_simulated,S_joint,S_marginal,n\n";
  for (const SweepRow& r : rows) {
    out << r.t << ',' << r.I_formula << ',' << r.I_simulated << ',' << r.S_joint << ',' << r.S_marginal << ','
        << r.n << '\n';
  }
  out.flags(flags);
  out.precision(precision);
}

}  // namespace qclone::analysis
