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
#include <iosfwd>
#include <span>
#include <vector>

#include "qclone/core/density_operator.hpp"

namespace qclone::analysis {

/// lambda_mu(t) = |c_mu(t)|^2: (cos^4 t, sin^2 t cos^2 t, sin^4 t, sin^2 t cos^2 t).
struct LambdaSpectrum {
  std::array<double, 4> lambda{};
  double t = 0.0;

  static LambdaSpectrum at(double t);
  /// -sum lambda log2 lambda with 0 log 0 = 0.
  double entropy_bits() const;
};

/// I(t) = -sum_mu lambda_mu log2 lambda_mu - 1, in bits. Independent of n.
double coherent_information_formula(double t);

struct SweepRow {
  double t = 0.0;
  double I_formula = 0.0;
  double I_simulated = 0.0;
  double S_joint = 0.0;     ///< S(Ref S1 N1..Nn)
  double S_marginal = 0.0;  ///< S(S1 N1..Nn)
  int n = 1;
};

/// Simulates the reference-entangled protocol and evaluates
/// I(Ref > S1 N1..Nn) = S(S1 N1..Nn) - S(Ref S1 N1..Nn).
/// Errors: kInvalidArgument for n < 1, kCapacityExceeded past the register cap.
SweepRow coherent_information_simulated(int n, double t);

/// `points` uniform samples on [t_min, t_max], endpoints included.
std::vector<double> uniform_grid(double t_min, double t_max, int points);

/// 101 points on [0, pi].
std::vector<double> default_grid();

/// One row per grid point, sorted by t. Errors: kInvalidArgument for an empty grid.
std::vector<SweepRow> sweep_fig_s1(std::span<const double> t_grid, int n);

/// Writes `t,I_formula,I_simulated,S_joint,S_marginal,n` plus one line per row.
void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows, int significant_digits = 12);

}  // namespace qclone::analysis
