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

#include "procfid/haar.hpp"

#include <cmath>
#include <numbers>

#include "procfid/errors.hpp"

namespace procfid {

namespace {

std::uint64_t mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

}  // namespace

SplitMix64 SplitMix64::substream(std::uint64_t seed, std::uint64_t index) {
  return SplitMix64(mix(seed ^ mix(index + kGolden)));
}

SplitMix64::result_type SplitMix64::operator()() {
  state_ += kGolden;
  return mix(state_);
}

double SplitMix64::uniform() {
  return static_cast<double>(((*this)() >> 11) + 1) * 0x1.0p-53;
}

double SplitMix64::normal() {
  const double u1 = uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Complex SplitMix64::complex_normal() {
  const double u1 = uniform();
  const double u2 = uniform();
  // Both Box–Muller outputs; scaled to unit total variance.
  const double radius = std::sqrt(-std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  return {radius * std::cos(angle), radius * std::sin(angle)};
}

nlohmann::json to_json(const McEstimate& e) {
  return {{"mean", e.mean}, {"std_error", e.std_error}, {"n_samples", e.n_samples}};
}

ComplexVector sample_state(std::size_t n, SplitMix64& rng) {
  if (n == 0) throw ValidationError("sample_state: dimension must be at least 1");
  ComplexVector chi(n);
  for (Complex& z : chi) z = rng.complex_normal();
  const double len = norm2(chi);
  for (Complex& z : chi) z /= len;
  return chi;
}

double f_chi(const ComplexMatrix& u_t, const ComplexMatrix& u, std::span<const Complex> chi,
             const Tolerances& tol) {
  if (!u_t.is_square() || u_t.rows() != u.rows() || u.rows() != u.cols() ||
      chi.size() != u.rows()) {
    throw ValidationError("f_chi: dimension mismatch (" + u_t.shape() + ", " + u.shape() +
                          ", state of length " + std::to_string(chi.size()) + ")");
  }
  const double len = norm2(chi);
  if (std::abs(len - 1.0) > tol.state_norm) {
    throw ValidationError("f_chi: state is not normalized (norm " + std::to_string(len) + ")");
  }
  const ComplexVector a = matvec(u_t, chi);
  const ComplexVector b = matvec(u, chi);
  return std::norm(inner(a, b));
}

McEstimate f_avg_mc(const ComplexMatrix& u_t, const ComplexMatrix& u, const SampleConfig& cfg,
                    const Tolerances& tol) {
  if (!u_t.is_square() || u_t.rows() != u.rows() || u.rows() != u.cols()) {
    throw ValidationError("f_avg_mc: dimension mismatch " + u_t.shape() + " vs " + u.shape());
  }
  if (!is_unitary(u_t, tol.unitary)) throw ValidationError("f_avg_mc: u_t is not unitary");
  if (cfg.n_samples < 2) throw ValidationError("f_avg_mc: need at least 2 samples");

  const ComplexMatrix overlap = adjoint(u_t) * u;
  const std::size_t n = u.rows();
  // Welford accumulation in sample order.
  double mean = 0.0;
  double m2 = 0.0;
  for (std::size_t k = 0; k < cfg.n_samples; ++k) {
    SplitMix64 rng = SplitMix64::substream(cfg.seed, k);
    const ComplexVector chi = sample_state(n, rng);
    const double x = std::norm(inner(chi, matvec(overlap, chi)));
    const double delta = x - mean;
    mean += delta / static_cast<double>(k + 1);
    m2 += delta * (x - mean);
  }
  const double var = m2 / static_cast<double>(cfg.n_samples - 1);
  return {mean, std::sqrt(var / static_cast<double>(cfg.n_samples)), cfg.n_samples};
}

ComplexMatrix random_unitary(std::size_t n, SplitMix64& rng) {
  if (n == 0) throw ValidationError("random_unitary: dimension must be at least 1");
  ComplexMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = rng.complex_normal();

  // Modified Gram–Schmidt with one reorthogonalization pass.
  std::vector<ComplexVector> cols;
  cols.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    ComplexVector v = g.column(j);
    for (int pass = 0; pass < 2; ++pass) {
      for (const ComplexVector& q : cols) {
        const Complex proj = inner(q, v);
        for (std::size_t i = 0; i < n; ++i) v[i] -= proj * q[i];
      }
    }
    const double len = norm2(v);
    for (Complex& z : v) z /= len;
    cols.push_back(std::move(v));
  }
  ComplexMatrix q(n, n);
  for (std::size_t j = 0; j < n; ++j) q.set_column(j, cols[j]);
  return q;
}

double random_search_f2(const TargetGate& target, const PartitionedEvolution& p,
                        std::size_t trials, std::uint64_t seed, const Tolerances& tol) {
  if (!target.is_unitary_mode()) {
    throw ValidationError("random_search_f2 requires a unitary target gate");
  }
  if (trials == 0) throw ValidationError("random_search_f2: need at least one trial");
  const std::size_t k = p.n() - p.m();
  double best = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    SplitMix64 rng = SplitMix64::substream(seed, t);
    const ComplexMatrix l = random_unitary(k, rng);
    const Complex phase = std::polar(1.0, 2.0 * std::numbers::pi * rng.uniform());
    best = std::max(best, f2_prime(p.embed(target.matrix(), phase * l), p, tol));
  }
  return best;
}

}  // namespace procfid
