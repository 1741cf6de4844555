// Copyright 2026 The procfid Authors
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

// Test-only generators and oracles. Nothing here calls into the library's
// eigensolver, so the oracles stay independent of the code they check.

#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "procfid/fidelity.hpp"
#include "procfid/haar.hpp"
#include "procfid/matrix.hpp"

namespace procfid::testing {

inline ComplexMatrix random_matrix(std::size_t rows, std::size_t cols, SplitMix64& rng) {
  ComplexMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.complex_normal();
  return m;
}

inline ComplexMatrix random_hermitian(std::size_t n, SplitMix64& rng) {
  const ComplexMatrix g = random_matrix(n, n, rng);
  return Complex(0.5) * (g + adjoint(g));
}

/// Product of n×rank and rank×n Gaussian factors: rank exactly `rank`.
inline ComplexMatrix rank_deficient(std::size_t n, std::size_t rank, SplitMix64& rng) {
  return random_matrix(n, rank, rng) * random_matrix(rank, n, rng);
}

/// Uniformly random sorted m-subset of {0, ..., n-1}.
inline std::vector<std::size_t> random_indices(std::size_t n, std::size_t m, SplitMix64& rng) {
  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), 0);
  for (std::size_t i = n - 1; i > 0; --i) {
    const std::size_t j = static_cast<std::size_t>(rng() % (i + 1));
    std::swap(all[i], all[j]);
  }
  all.resize(m);
  std::sort(all.begin(), all.end());
  return all;
}

inline double uniform_in(double lo, double hi, SplitMix64& rng) {
  return lo + (hi - lo) * rng.uniform();
}

/// Singular values by one-sided (Hestenes) Jacobi on the columns of c,
/// descending. Works on C directly, so small singular values keep full
/// absolute accuracy.
inline std::vector<double> hestenes_singular_values(ComplexMatrix a) {
  const std::size_t n = a.cols();
  const std::size_t rows = a.rows();
  for (int sweep = 0; sweep < 80; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        double alpha = 0.0;
        double beta = 0.0;
        Complex gamma{};
        for (std::size_t k = 0; k < rows; ++k) {
          alpha += std::norm(a(k, p));
          beta += std::norm(a(k, q));
          gamma += std::conj(a(k, p)) * a(k, q);
        }
        const double mag = std::abs(gamma);
        if (mag == 0.0 || mag <= 1e-16 * std::sqrt(alpha * beta)) continue;
        rotated = true;
        const Complex phase = std::conj(gamma) / mag;
        const double zeta = (beta - alpha) / (2.0 * mag);
        const double t = zeta == 0.0 ? 1.0
                                     : std::copysign(1.0, zeta) /
                                           (std::abs(zeta) + std::hypot(1.0, zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        for (std::size_t k = 0; k < rows; ++k) {
          const Complex ap = a(k, p);
          const Complex aq = a(k, q);
          a(k, p) = c * ap - s * phase * aq;
          a(k, q) = s * ap + c * phase * aq;
        }
      }
    }
    if (!rotated) break;
  }
  std::vector<double> sv(n);
  for (std::size_t j = 0; j < n; ++j) {
    double s = 0.0;
    for (std::size_t k = 0; k < rows; ++k) s += std::norm(a(k, j));
    sv[j] = std::sqrt(s);
  }
  std::sort(sv.rbegin(), sv.rend());
  return sv;
}

inline double sum(const std::vector<double>& v) { return std::accumulate(v.begin(), v.end(), 0.0); }

/// Random PartitionedEvolution: Haar U_f on n levels with a random m-subset.
inline PartitionedEvolution random_partition(std::size_t n, std::size_t m, SplitMix64& rng) {
  ComplexMatrix u = random_unitary(n, rng);
  return PartitionedEvolution(std::move(u), random_indices(n, m, rng));
}

/// Block-diagonal U_f = U_s ⊕ W (scattered onto random indices) with U_s, W Haar.
struct BlockDiagonalCase {
  ComplexMatrix u_s;
  PartitionedEvolution partition;
};

inline BlockDiagonalCase random_block_diagonal(std::size_t n, std::size_t m, SplitMix64& rng) {
  const std::vector<std::size_t> idx = random_indices(n, m, rng);
  ComplexMatrix u_s = random_unitary(m, rng);
  const ComplexMatrix w = random_unitary(n - m, rng);
  // Embed through a throwaway identity partition on the same indices.
  const PartitionedEvolution frame(identity(n), idx);
  ComplexMatrix u_f = frame.embed(u_s, w);
  return {std::move(u_s), PartitionedEvolution(std::move(u_f), idx)};
}

/// Reversal of the first max(p, q) levels; its top-left p×q block holds
/// min(p, q) unit entries.
inline ComplexMatrix saturating_permutation(std::size_t n, std::size_t p, std::size_t q) {
  const std::size_t k = std::max(p, q);
  ComplexMatrix w(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t row = j < k ? k - 1 - j : j;
    w(row, j) = 1.0;
  }
  return w;
}

}  // namespace procfid::testing
