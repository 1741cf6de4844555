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

namespace procfid {

/// Every numerical threshold used across the library. Functions take a
/// `const Tolerances&` defaulting to these values.
struct Tolerances {
  /// ‖M†M − I‖_F bound for anything claimed unitary.
  double unitary = 1e-10;
  /// Relative bound on ‖A − A†‖_F / max(1, ‖A‖_F).
  double hermitian = 1e-10;
  /// Jacobi stops once the off-diagonal Frobenius mass is below this
  /// fraction of ‖A‖_F.
  double jacobi_offdiag = 1e-14;
  int jacobi_max_sweeps = 100;
  /// Eigenvalues in [−psd_clamp·λ_max, 0) are roundoff and become 0; anything
  /// lower means the input is not PSD.
  double psd_clamp = 1e-10;
  /// Eigenvalues of a Gram matrix C†C at or below this fraction of λ_max are
  /// indistinguishable from the roundoff of forming the product and are
  /// treated as exact zeros.
  double gram_null = 1e-13;
  /// Row-unitarity check Tr(U_s U_s†) + Tr(A A†) = m across a partition;
  /// widened to √m·unitary when that is larger.
  double partition_trace = 1e-9;
  /// Radicand m(m+1)F₁ − Tr(U_s U_s†) may dip this far below 0 from roundoff.
  double radicand = 1e-12;
  /// Relative bound on |m(m+1)F₁ − Tr(U_s U_s†) − r²|.
  double r_identity = 1e-10;
  /// Agreement between the two algebraic forms of the closed-form F₂.
  double f2_forms = 1e-12;
  /// Slack on the s ≤ m + n bound for general embeddings.
  double s_bound = 1e-9;
  /// Slack on Tr(XX†) ≤ min{p, q}.
  double theorem1 = 1e-10;
  /// Allowed deviation of ‖χ‖ from 1.
  double state_norm = 1e-9;
};

}  // namespace procfid
