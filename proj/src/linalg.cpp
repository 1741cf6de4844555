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

#include "procfid/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "procfid/errors.hpp"

namespace procfid {

namespace {

double offdiag_mass(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

// Applies the unitary G acting on coordinates (p, q):
//   G = [[gpp, gpq], [gqp, gqq]]
// as A ← G†·A·G and V ← V·G.
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q, Complex gpp,
            Complex gpq, Complex gqp, Complex gqq) {
  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = akp * gpp + akq * gqp;
    a(k, q) = akp * gpq + akq * gqq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = std::conj(gpp) * apk + std::conj(gqp) * aqk;
    a(q, k) = std::conj(gpq) * apk + std::conj(gqq) * aqk;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = vkp * gpp + vkq * gqp;
    v(k, q) = vkp * gpq + vkq * gqq;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p).imag(0.0);
  a(q, q).imag(0.0);
}

// Removes the components of `u` along the accepted columns, twice over.
void orthogonalize(ComplexVector& u, const std::vector<ComplexVector>& basis) {
  for (int pass = 0; pass < 2; ++pass) {
    for (const ComplexVector& b : basis) {
      const Complex proj = inner(b, u);
      for (std::size_t i = 0; i < u.size(); ++i) u[i] -= proj * b[i];
    }
  }
}

// eigh of C†C with roundoff-level eigenvalues snapped to exact zero.
HermitianEigenDecomposition gram_spectrum(const ComplexMatrix& c, const Tolerances& tol) {
  HermitianEigenDecomposition d = eigh(gram(c), tol);
  const double lmax = std::max(d.eigenvalues.back(), 0.0);
  for (double& l : d.eigenvalues) {
    if (l < -tol.psd_clamp * lmax) {
      throw NumericalContractError("C†C has eigenvalue " + std::to_string(l) +
                                   " below the PSD clamp");
    }
    if (l <= tol.gram_null * lmax) l = 0.0;
  }
  return d;
}

}  // namespace

HermitianEigenDecomposition eigh(const ComplexMatrix& a, const Tolerances& tol) {
  if (!a.is_square()) throw ValidationError("eigh: expected a square matrix, got " + a.shape());
  const double herm = hermiticity_residual(a);
  if (herm > tol.hermitian) {
    std::ostringstream msg;
    msg << "eigh: matrix is not Hermitian (relative residual " << herm << ")";
    throw ValidationError(msg.str());
  }

  const std::size_t n = a.rows();
  // Hermitian part, so the iteration sees an exactly Hermitian matrix.
  ComplexMatrix work = 0.5 * (a + adjoint(a));
  ComplexMatrix vecs = identity(n);
  const double scale = frobenius_norm(work);

  int sweep = 0;
  while (offdiag_mass(work) > tol.jacobi_offdiag * scale) {
    if (++sweep > tol.jacobi_max_sweeps) {
      throw NumericalContractError("eigh: Jacobi did not converge in " +
                                   std::to_string(tol.jacobi_max_sweeps) + " sweeps");
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = work(p, q);
        const double mag = std::abs(apq);
        if (mag == 0.0) continue;
        const Complex phase = std::conj(apq) / mag;  // e^{−iα}
        const double tau = (work(q, q).real() - work(p, p).real()) / (2.0 * mag);
        const double t = tau == 0.0 ? 1.0
                                    : std::copysign(1.0, tau) /
                                          (std::abs(tau) + std::hypot(1.0, tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        rotate(work, vecs, p, q, c, s, -s * phase, c * phase);
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return work(i, i).real() < work(j, j).real();
  });

  HermitianEigenDecomposition out{std::vector<double>(n), ComplexMatrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = work(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = vecs(i, order[k]);
  }
  return out;
}

ComplexMatrix expm_i(const ComplexMatrix& h, double t, const Tolerances& tol) {
  const HermitianEigenDecomposition d = eigh(h, tol);
  const std::size_t n = h.rows();
  ComplexMatrix scaled = d.eigenvectors;
  for (std::size_t k = 0; k < n; ++k) {
    const Complex phase = std::polar(1.0, -d.eigenvalues[k] * t);
    for (std::size_t i = 0; i < n; ++i) scaled(i, k) *= phase;
  }
  return scaled * adjoint(d.eigenvectors);
}

ComplexMatrix sqrtm_psd(const ComplexMatrix& a, const Tolerances& tol) {
  const HermitianEigenDecomposition d = eigh(a, tol);
  const std::size_t n = a.rows();
  const double lmax = std::max(d.eigenvalues.back(), 0.0);
  ComplexMatrix scaled = d.eigenvectors;
  for (std::size_t k = 0; k < n; ++k) {
    double l = d.eigenvalues[k];
    if (l < 0.0) {
      if (l < -tol.psd_clamp * lmax) {
        std::ostringstream msg;
        msg << "sqrtm_psd: matrix is not PSD (eigenvalue " << l << ", largest " << lmax << ")";
        throw ValidationError(msg.str());
      }
      l = 0.0;
    }
    const double root = std::sqrt(l);
    for (std::size_t i = 0; i < n; ++i) scaled(i, k) *= root;
  }
  return scaled * adjoint(d.eigenvectors);
}

PolarFactors polar(const ComplexMatrix& c, const Tolerances& tol) {
  if (!c.is_square()) throw ValidationError("polar: expected a square matrix, got " + c.shape());
  const std::size_t n = c.rows();
  const HermitianEigenDecomposition d = gram_spectrum(c, tol);

  // Left singular vectors for the nonzero part, largest singular value first.
  std::vector<ComplexVector> left(n);
  std::vector<ComplexVector> accepted;
  std::vector<std::size_t> null_cols;
  for (std::size_t rank = n; rank-- > 0;) {
    const double l = d.eigenvalues[rank];
    if (l == 0.0) {
      null_cols.push_back(rank);
      continue;
    }
    ComplexVector u = matvec(c, d.eigenvectors.column(rank));
    const double sigma = std::sqrt(l);
    for (Complex& z : u) z /= sigma;
    orthogonalize(u, accepted);
    const double len = norm2(u);
    if (len < 0.5) {
      null_cols.push_back(rank);
      continue;
    }
    for (Complex& z : u) z /= len;
    left[rank] = u;
    accepted.push_back(std::move(u));
  }

  // Complete on the null space from e_0, e_1, ... in order.
  std::sort(null_cols.begin(), null_cols.end());
  std::size_t next_basis = 0;
  for (std::size_t col : null_cols) {
    for (;; ++next_basis) {
      if (next_basis >= n) throw NumericalContractError("polar: basis completion failed");
      ComplexVector e(n);
      e[next_basis] = 1.0;
      orthogonalize(e, accepted);
      const double len = norm2(e);
      if (len > 1e-3) {
        for (Complex& z : e) z /= len;
        left[col] = e;
        accepted.push_back(std::move(e));
        ++next_basis;
        break;
      }
    }
  }

  ComplexMatrix u_mat(n, n);
  ComplexMatrix scaled = d.eigenvectors;
  for (std::size_t k = 0; k < n; ++k) {
    u_mat.set_column(k, left[k]);
    const double root = std::sqrt(d.eigenvalues[k]);
    for (std::size_t i = 0; i < n; ++i) scaled(i, k) *= root;
  }
  const ComplexMatrix v_adj = adjoint(d.eigenvectors);
  return PolarFactors{u_mat * v_adj, scaled * v_adj};
}

std::vector<double> singular_values(const ComplexMatrix& c, const Tolerances& tol) {
  const HermitianEigenDecomposition d = gram_spectrum(c, tol);
  std::vector<double> out;
  out.reserve(d.eigenvalues.size());
  for (auto it = d.eigenvalues.rbegin(); it != d.eigenvalues.rend(); ++it) {
    out.push_back(std::sqrt(*it));
  }
  return out;
}

double nuclear_norm(const ComplexMatrix& c, const Tolerances& tol) {
  const std::vector<double> sv = singular_values(c, tol);
  return std::accumulate(sv.begin(), sv.end(), 0.0);
}

}  // namespace procfid
