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

#pragma once

#include <cstdint>
#include <limits>
#include <span>

#include <json.hpp>

#include "procfid/fidelity.hpp"
#include "procfid/matrix.hpp"
#include "procfid/tolerances.hpp"

namespace procfid {

/// SplitMix64 (Steele, Lea & Flood). Satisfies UniformRandomBitGenerator and
/// produces the same stream on every platform.
///
/// Substreams: sample k of a run seeded with `seed` draws from
/// `SplitMix64::substream(seed, k)`, so results do not depend on the order or
/// thread in which samples are evaluated.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  static SplitMix64 substream(std::uint64_t seed, std::uint64_t index);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
  result_type operator()();

  /// Uniform on (0, 1].
  double uniform();
  /// Standard normal via Box–Muller; draws two uniforms per call.
  double normal();
  /// Real and imaginary parts independent N(0, 1/2).
  Complex complex_normal();

 private:
  std::uint64_t state_;
};

struct SampleConfig {
  std::uint64_t seed = 0;
  std::size_t n_samples = 100000;
};

struct McEstimate {
  double mean;
  double std_error;
  std::size_t n_samples;
};

nlohmann::json to_json(const McEstimate& e);

/// Haar-random unit vector in C^n (normalized complex Gaussian).
ComplexVector sample_state(std::size_t n, SplitMix64& rng);

/// |⟨χ| U_t† U |χ⟩|².
double f_chi(const ComplexMatrix& u_t, const ComplexMatrix& u, std::span<const Complex> chi,
             const Tolerances& tol = {});

/// Monte Carlo estimate of the Haar average of f_chi. std_error is the sample
/// standard deviation over √n_samples.
McEstimate f_avg_mc(const ComplexMatrix& u_t, const ComplexMatrix& u, const SampleConfig& cfg,
                    const Tolerances& tol = {});

/// Haar-random n×n unitary: Gram–Schmidt QR of a complex Gaussian matrix.
/// Each column is normalized to a positive R diagonal, which is the phase fix
/// that makes the distribution Haar.
ComplexMatrix random_unitary(std::size_t n, SplitMix64& rng);

/// Best f2_prime over `trials` random completions U_tgt ⊕ e^{iγ}L with L Haar
/// and γ uniform. Trial k uses substream (seed, k).
double random_search_f2(const TargetGate& target, const PartitionedEvolution& p,
                        std::size_t trials, std::uint64_t seed, const Tolerances& tol = {});

}  // namespace procfid
