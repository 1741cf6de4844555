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

#include <vector>

#include "procfid/matrix.hpp"
#include "procfid/tolerances.hpp"

namespace procfid {

struct HermitianEigenDecomposition {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // columns, orthonormal
};

struct PolarFactors {
  ComplexMatrix unitary_factor;
  ComplexMatrix hermitian_factor;
};

/// Cyclic Jacobi diagonalization of a Hermitian matrix.
///
/// Sweeps the strict upper triangle in row-major order and annihilates each
/// off-diagonal entry with a complex Givens rotation. Stops when the
/// off-diagonal Frobenius mass is at most `tol.jacobi_offdiag · ‖A‖_F`.
/// Throws ValidationError for non-square or non-Hermitian input and
/// NumericalContractError if `tol.jacobi_max_sweeps` is exhausted.
HermitianEigenDecomposition eigh(const ComplexMatrix& a, const Tolerances& tol = {});

/// exp(−i·h·t) via the eigendecomposition of h.
ComplexMatrix expm_i(const ComplexMatrix& h, double t, const Tolerances& tol = {});

/// Principal square root of a Hermitian PSD matrix. Eigenvalues in
/// [−psd_clamp·λ_max, 0) are clamped to zero; anything lower is rejected.
ComplexMatrix sqrtm_psd(const ComplexMatrix& a, const Tolerances& tol = {});

/// C = C_U·C_H with C_H = √(C†C). On the numerical null space of C†C the
/// unitary factor is completed deterministically by Gram–Schmidt over the
/// standard basis.
PolarFactors polar(const ComplexMatrix& c, const Tolerances& tol = {});

/// Singular values of c, descending, as square roots of the eigenvalues of
/// C†C. Eigenvalues at or below `tol.gram_null · λ_max` count as zero.
std::vector<double> singular_values(const ComplexMatrix& c, const Tolerances& tol = {});

/// Tr √(C†C), the sum of singular_values(c).
double nuclear_norm(const ComplexMatrix& c, const Tolerances& tol = {});

}  // namespace procfid
