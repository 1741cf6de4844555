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

#include <array>
#include <cstddef>
#include <ostream>
#include <vector>

#include "procfid/fidelity.hpp"
#include "procfid/matrix.hpp"
#include "procfid/tolerances.hpp"

namespace procfid::qr {

// A three-level phase qubit coupled to a three-level resonator mode.
// Levels are ordered qubit-major: |q, r⟩ has index 3q + r.

enum class UnitConvention {
  angular_2pi,  // frequencies in GHz are multiplied by 2π, time in ns
  raw,          // frequencies used as given
};

struct SystemParams {
  double omega_q = 6.2;  // GHz
  double omega_r = 6.0;  // GHz
  double delta = 0.2;    // GHz, qubit anharmonicity
  double g = 0.030;      // GHz
  UnitConvention units = UnitConvention::angular_2pi;

  /// Throws ValidationError unless all frequencies are positive, g ≥ 0 and
  /// delta < omega_q.
  void validate() const;
};

struct SweepResult {
  std::vector<double> times;  // ns
  std::vector<double> f1_series;
  std::vector<double> f2_series;
  std::vector<double> leakage_series;
};

/// H = H₀ + H_int with
///   H₀ = diag(0, ω_q, 2ω_q − Δ) ⊗ I + I ⊗ diag(0, ω_r, 2ω_r),
///   H_int = g·Y₃ ⊗ Y₃,  Y₃ = [[0, −i, 0], [i, 0, −√2 i], [0, √2 i, 0]].
ComplexMatrix build_hamiltonian(const SystemParams& p);

/// The 3-level quadrature matrix Y₃ above.
ComplexMatrix quadrature3();

/// Indices of |00⟩, |01⟩, |10⟩, |11⟩: {0, 1, 3, 4}.
std::vector<std::size_t> computational_indices();

/// diag(1, 1, 1, −1).
TargetGate cz_target();

/// diag(1, e^{iα}, e^{iβ}, −e^{i(α+β)}) with α = arg d₁ − arg d₀ and
/// β = arg d₂ − arg d₀ for the diagonal entries d_k of u_s. Absorbs the
/// single-qubit phases a CZ pulse accumulates.
TargetGate phase_compensated_cz(const ComplexMatrix& u_s);

/// F₁, F₂ and Tr(U_s U_s†) against the CZ target on a uniform grid of
/// n_points times from t_start to t_end inclusive.
SweepResult sweep(const SystemParams& p, double t_start, double t_end, std::size_t n_points,
                  bool local_phase_compensation, const Tolerances& tol = {});

/// CSV with `#`-prefixed parameter lines, a `t_ns,f1,f2,leakage` header and
/// one row per grid point at 17 significant digits.
void write_csv(std::ostream& out, const SweepResult& result, const SystemParams& p,
               bool local_phase_compensation);

}  // namespace procfid::qr
