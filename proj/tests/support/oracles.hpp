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

// Brute-force references for the tests. Nothing here calls the library's kernels:
// operators are built entry by entry and exponentials come from Eigen's MatrixFunctions.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

namespace oracle {

using C = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

inline Mat I2() { return Mat::Identity(2, 2); }
inline Mat X() { Mat m(2, 2); m << 0, 1, 1, 0; return m; }
inline Mat Y() { Mat m(2, 2); m << 0, C(0, -1), C(0, 1), 0; return m; }
inline Mat Z() { Mat m(2, 2); m << 1, 0, 0, -1; return m; }
inline Mat H() { Mat m(2, 2); m << 1, 1, 1, -1; return m / std::sqrt(2.0); }

inline Mat pauli(char p) {
  switch (p) {
    case 'X': return X();
    case 'Y': return Y();
    case 'Z': return Z();
    default: return I2();
  }
}

inline int bit(std::size_t index, int q) { return static_cast<int>((index >> q) & 1U); }

/// Full operator with `factors[q]` on qubit q and identity elsewhere, entry by entry.
inline Mat product_operator(const std::map<int, Mat>& factors, int n) {
  const std::size_t d = std::size_t{1} << n;
  Mat out(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      C v(1.0);
      for (int q = 0; q < n && v != C(0.0); ++q) {
        const auto it = factors.find(q);
        if (it == factors.end()) {
          if (bit(r, q) != bit(c, q)) v = 0.0;
        } else {
          v *= it->second(bit(r, q), bit(c, q));
        }
      }
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = v;
    }
  }
  return out;
}

/// Pauli word over qubits 0..n-1, character q acting on qubit q ("XIZ" = X on 0, Z on 2).
inline Mat pauli_word(const std::string& word) {
  std::map<int, Mat> f;
  for (std::size_t q = 0; q < word.size(); ++q) f[static_cast<int>(q)] = pauli(word[q]);
  return product_operator(f, static_cast<int>(word.size()));
}

/// `local` acting on `targets` (targets[0] = local low bit) inside n qubits.
inline Mat embed(const Mat& local, const std::vector<int>& targets, int n) {
  const std::size_t d = std::size_t{1} << n;
  Mat out = Mat::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  std::size_t mask = 0;
  for (int t : targets) mask |= std::size_t{1} << t;
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      if ((r & ~mask) != (c & ~mask)) continue;
      std::size_t lr = 0;
      std::size_t lc = 0;
      for (std::size_t b = 0; b < targets.size(); ++b) {
        lr |= static_cast<std::size_t>(bit(r, targets[b])) << b;
        lc |= static_cast<std::size_t>(bit(c, targets[b])) << b;
      }
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          local(static_cast<Eigen::Index>(lr), static_cast<Eigen::Index>(lc));
    }
  }
  return out;
}

inline Mat expm_minus_i(const Mat& generator, double t) {
  const Mat a = C(0, -t) * generator;
  return a.exp();
}

/// exp(-i t X^{(x)m}) exp(-i t P^{(x)m}) with P = 'Z' or 'Y', via matrix exponentials.
inline Mat encoder(int n, double t, char p = 'Z') {
  const int m = n + 1;
  return expm_minus_i(pauli_word(std::string(static_cast<std::size_t>(m), 'X')), t) *
         expm_minus_i(pauli_word(std::string(static_cast<std::size_t>(m), p)), t);
}

/// Bell vectors on (first = low bit, second = high bit): phi_mu = (sigma_mu (x) I) phi.
inline Vec bell(int mu) {
  const double h = 1.0 / std::sqrt(2.0);
  Vec v = Vec::Zero(4);
  switch (mu) {
    case 0: v[0] = h; v[3] = h; break;                    // |00> + |11>
    case 1: v[1] = h; v[2] = h; break;                    // |10> + |01>
    case 2: v[1] = C(0, h); v[2] = C(0, -h); break;       // i|1,0> - i|0,1>
    default: v[0] = h; v[3] = -h; break;                  // |00> - |11>
  }
  return v;
}

inline Mat projector(const Vec& v) { return v * v.adjoint(); }

/// sum_mu alpha_mu |phi_mu><phi_mu|_{S_t N_t} (x) prod_{j != t} sigma_mu^T on N_j, on local
/// qubits (S_t, N_1, ..., N_n).
inline Mat decoder(int n, const std::array<C, 4>& alphas, int target) {
  const char names[] = {'I', 'X', 'Y', 'Z'};
  const int m = n + 1;
  Mat out = Mat::Zero(1 << m, 1 << m);
  for (int mu = 0; mu < 4; ++mu) {
    std::map<int, Mat> keys;
    for (int j = 1; j <= n; ++j) {
      if (j != target) keys[j] = pauli(names[mu]).transpose();
    }
    const Mat pair = embed(projector(bell(mu)), {0, target}, m);
    out += alphas[static_cast<std::size_t>(mu)] * pair * product_operator(keys, m);
  }
  return out;
}

inline Vec kron_vec(const Vec& high, const Vec& low) {
  Vec out(high.size() * low.size());
  for (Eigen::Index h = 0; h < high.size(); ++h) {
    for (Eigen::Index l = 0; l < low.size(); ++l) out[h * low.size() + l] = high[h] * low[l];
  }
  return out;
}

/// |psi>_A (x) phi_0 on each (S_i, N_i), layout A, S1, N1, S2, N2, ...
inline Vec initial_state(const Vec& psi, int n) {
  Vec v = psi;
  for (int i = 0; i < n; ++i) v = kron_vec(bell(0), v);
  return v;
}

/// Reduced density matrix on `keep` (ascending order), by explicit summation.
inline Mat reduced(const Vec& psi, std::vector<int> keep, int n) {
  std::sort(keep.begin(), keep.end());
  const std::size_t d = std::size_t{1} << n;
  const std::size_t k = std::size_t{1} << keep.size();
  Mat rho = Mat::Zero(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k));
  std::size_t mask = 0;
  for (int q : keep) mask |= std::size_t{1} << q;
  const auto local = [&](std::size_t idx) {
    std::size_t l = 0;
    for (std::size_t b = 0; b < keep.size(); ++b) l |= static_cast<std::size_t>(bit(idx, keep[b])) << b;
    return l;
  };
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      if ((r & ~mask) != (c & ~mask)) continue;
      rho(static_cast<Eigen::Index>(local(r)), static_cast<Eigen::Index>(local(c))) +=
          psi[static_cast<Eigen::Index>(r)] * std::conj(psi[static_cast<Eigen::Index>(c)]);
    }
  }
  return rho;
}

inline double entropy_bits(const Mat& rho) {
  Eigen::SelfAdjointEigenSolver<Mat> es(rho);
  double s = 0.0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const double p = es.eigenvalues()[i];
    if (p > 1e-14) s -= p * std::log(p) / std::log(2.0);
  }
  return s;
}

inline double trace_norm_half(const Mat& a) {
  Eigen::SelfAdjointEigenSolver<Mat> es(a);
  return es.eigenvalues().cwiseAbs().sum() / 2.0;
}

/// Haar-ish random unitary from the QR decomposition of a complex Gaussian matrix.
inline Mat random_unitary(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Mat a(dim, dim);
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) a(r, c) = C(g(rng), g(rng));
  }
  Eigen::HouseholderQR<Mat> qr(a);
  Mat q = qr.householderQ();
  const Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < dim; ++i) q.col(i) *= std::polar(1.0, std::arg(r(i, i)));
  return q;
}

inline Vec random_qubit(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Vec v(2);
  v << C(g(rng), g(rng)), C(g(rng), g(rng));
  return v / v.norm();
}

inline double max_abs(const Mat& m) { return m.cwiseAbs().maxCoeff(); }

/// min over unimodular phases of max |a - phase b|, with the phase from the overlap.
inline double phase_distance(const Mat& a, const Mat& b) {
  const C overlap = (b.adjoint() * a).trace();
  const C phase = std::abs(overlap) > 0 ? overlap / std::abs(overlap) : C(1.0);
  return max_abs(a - phase * b);
}

}  // namespace oracle
