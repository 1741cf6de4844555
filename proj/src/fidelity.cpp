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

#include "procfid/fidelity.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "procfid/errors.hpp"
#include "procfid/linalg.hpp"

namespace procfid {

namespace {

void require_unitary(const ComplexMatrix& m, const Tolerances& tol, const char* what) {
  if (!m.is_square()) {
    throw ValidationError(std::string(what) + ": expected a square matrix, got " + m.shape());
  }
  const double res = unitarity_residual(m);
  if (res > tol.unitary) {
    std::ostringstream msg;
    msg << what << ": matrix is not unitary (||M^dag M - I||_F = " << res << ")";
    throw ValidationError(msg.str());
  }
}

void require_dim(const ComplexMatrix& m, std::size_t dim, const char* what) {
  if (m.rows() != dim || m.cols() != dim) {
    throw ValidationError(std::string(what) + ": expected " + std::to_string(dim) + "x" +
                          std::to_string(dim) + ", got " + m.shape());
  }
}

void require_unitary_mode(const TargetGate& t, const char* what) {
  if (!t.is_unitary_mode()) {
    throw ValidationError(std::string(what) + " requires a unitary target gate");
  }
}

void require_target_matches(const TargetGate& t, const PartitionedEvolution& p) {
  if (t.dim() != p.m()) {
    throw ValidationError("target is " + t.matrix().shape() + " but the subspace has " +
                          std::to_string(p.m()) + " levels");
  }
}

// Tr(X Y†) without forming the product.
Complex trace_xy_adj(const ComplexMatrix& x, const ComplexMatrix& y) {
  Complex s{};
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) s += x(i, j) * std::conj(y(i, j));
  return s;
}

// Tr(X† Y).
Complex trace_adj_xy(const ComplexMatrix& x, const ComplexMatrix& y) {
  return std::conj(trace_xy_adj(x, y));
}

double squared_norm(const ComplexMatrix& x) { return trace_xy_adj(x, x).real(); }

double principal_arg(Complex z) {
  if (z == Complex{}) return 0.0;
  const double a = std::arg(z);
  // + 0.0 turns a −0 from a signed-zero imaginary part into +0.
  return a <= -std::numbers::pi ? std::numbers::pi : a + 0.0;
}

}  // namespace

PartitionedEvolution::PartitionedEvolution(ComplexMatrix u_f,
                                           std::vector<std::size_t> subspace_indices,
                                           const Tolerances& tol)
    : u_f_(std::move(u_f)),
      subspace_(std::move(subspace_indices)),
      blocks_{ComplexMatrix(1, 1), ComplexMatrix(1, 1), ComplexMatrix(1, 1),
              ComplexMatrix(1, 1)} {
  require_unitary(u_f_, tol, "PartitionedEvolution");
  const std::size_t n = u_f_.rows();
  if (subspace_.empty() || subspace_.size() >= n) {
    throw ValidationError("subspace must have between 1 and n-1 = " + std::to_string(n - 1) +
                          " levels, got " + std::to_string(subspace_.size()));
  }
  for (std::size_t k = 0; k < subspace_.size(); ++k) {
    if (subspace_[k] >= n) {
      throw ValidationError("subspace index " + std::to_string(subspace_[k]) +
                            " out of range for n = " + std::to_string(n));
    }
    if (k > 0 && subspace_[k] <= subspace_[k - 1]) {
      throw ValidationError("subspace indices must be sorted and distinct");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::binary_search(subspace_.begin(), subspace_.end(), i)) complement_.push_back(i);
  }
  blocks_ = split(u_f_);

  const double row_sum = squared_norm(blocks_.subspace) + squared_norm(blocks_.upper);
  // |row_sum − m| ≤ √m·‖U U† − I‖_F, so a looser unitarity tolerance
  // loosens this check with it.
  const double allowed =
      std::max(tol.partition_trace, std::sqrt(static_cast<double>(m())) * tol.unitary);
  if (std::abs(row_sum - static_cast<double>(m())) > allowed) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "Tr(U_s U_s^dag) + Tr(A A^dag) = " << row_sum << ", expected " << m();
    throw ValidationError(msg.str());
  }
}

Blocks PartitionedEvolution::split(const ComplexMatrix& full) const {
  require_dim(full, n(), "split");
  return Blocks{full.gather(subspace_, subspace_), full.gather(subspace_, complement_),
                full.gather(complement_, subspace_), full.gather(complement_, complement_)};
}

ComplexMatrix PartitionedEvolution::embed(const ComplexMatrix& sub,
                                          const ComplexMatrix& comp) const {
  require_dim(sub, m(), "embed (subspace block)");
  require_dim(comp, n() - m(), "embed (complement block)");
  ComplexMatrix out(n(), n());
  for (std::size_t i = 0; i < subspace_.size(); ++i)
    for (std::size_t j = 0; j < subspace_.size(); ++j) out(subspace_[i], subspace_[j]) = sub(i, j);
  for (std::size_t i = 0; i < complement_.size(); ++i)
    for (std::size_t j = 0; j < complement_.size(); ++j)
      out(complement_[i], complement_[j]) = comp(i, j);
  return out;
}

TargetGate TargetGate::unitary(ComplexMatrix u, const Tolerances& tol) {
  require_unitary(u, tol, "TargetGate");
  return TargetGate(std::move(u), true);
}

TargetGate TargetGate::general(ComplexMatrix u) {
  if (!u.is_square()) throw ValidationError("TargetGate: expected a square matrix, got " + u.shape());
  return TargetGate(std::move(u), false);
}

nlohmann::json to_json(const FidelityReport& r) {
  return {{"f1", r.f1},       {"f2", r.f2},
          {"s_max", r.s_max}, {"r", r.r},
          {"theta", r.theta}, {"leakage_trace", r.leakage_trace},
          {"f_out_max", r.f_out_max}};
}

double f_avg_trace(const ComplexMatrix& u_t, const ComplexMatrix& u, const Tolerances& tol) {
  require_unitary(u_t, tol, "f_avg_trace");
  require_dim(u, u_t.rows(), "f_avg_trace");
  const double n = static_cast<double>(u.rows());
  const ComplexMatrix overlap = adjoint(u_t) * u;
  return (squared_norm(overlap) + std::norm(trace(overlap))) / (n * (n + 1.0));
}

Complex target_overlap(const TargetGate& target, const PartitionedEvolution& p) {
  require_target_matches(target, p);
  return trace_adj_xy(target.matrix(), p.u_s());
}

double leakage_trace(const PartitionedEvolution& p) { return squared_norm(p.u_s()); }

double f1(const TargetGate& target, const PartitionedEvolution& p) {
  const double m = static_cast<double>(p.m());
  return (leakage_trace(p) + std::norm(target_overlap(target, p))) / (m * (m + 1.0));
}

double s_max(const ComplexMatrix& c, const Tolerances& tol) {
  if (!c.is_square()) throw ValidationError("s_max: expected a square matrix, got " + c.shape());
  return nuclear_norm(c, tol);
}

ComplexMatrix optimal_embedding(const TargetGate& target, const PartitionedEvolution& p,
                                const Tolerances& tol) {
  require_unitary_mode(target, "optimal_embedding");
  const Complex overlap = target_overlap(target, p);
  const ComplexMatrix& c = p.c();

  if (frobenius_norm(c) == 0.0) return p.embed(target.matrix(), identity(c.rows()));

  ComplexMatrix l = polar(c, tol).unitary_factor;
  if (overlap != Complex{}) {
    // Tr((e^{iγ} C_U)† C) = e^{−iγ}·s·e^{iφ₀}; γ = φ₀ − θ lines its phase up with θ.
    const double theta = std::arg(overlap);
    const double phi0 = std::arg(trace_adj_xy(l, c));
    l = std::polar(1.0, phi0 - theta) * l;
  }
  return p.embed(target.matrix(), l);
}

double f2_prime(const ComplexMatrix& v_tgt, const PartitionedEvolution& p,
                const Tolerances& tol) {
  require_dim(v_tgt, p.n(), "f2_prime");
  require_unitary(v_tgt, tol, "f2_prime");
  const double n = static_cast<double>(p.n());
  return (n + std::norm(trace_adj_xy(v_tgt, p.u_f()))) / (n * (n + 1.0));
}

double f2_closed(const TargetGate& target, const PartitionedEvolution& p,
                 const Tolerances& tol) {
  require_unitary_mode(target, "f2_closed");
  const double n = static_cast<double>(p.n());
  const double m = static_cast<double>(p.m());
  const double fid1 = f1(target, p);
  const double leak = leakage_trace(p);
  const double r = std::abs(target_overlap(target, p));
  const double s = s_max(p.c(), tol);

  double radicand = m * (m + 1.0) * fid1 - leak;
  if (radicand < -tol.radicand) {
    std::ostringstream msg;
    msg << "f2_closed: m(m+1)F1 - Tr(U_s U_s^dag) = " << radicand << " is negative";
    throw NumericalContractError(msg.str());
  }
  radicand = std::max(radicand, 0.0);
  const double gap = std::abs(radicand - r * r);
  if (gap > tol.r_identity * std::max(1.0, r * r)) {
    std::ostringstream msg;
    msg << "f2_closed: m(m+1)F1 - Tr(U_s U_s^dag) = " << radicand << " but r^2 = " << r * r;
    throw NumericalContractError(msg.str());
  }

  const double denom = n * (n + 1.0);
  const double from_f1 = (n + s * s + radicand + 2.0 * s * std::sqrt(radicand)) / denom;
  const double from_r = (n + (r + s) * (r + s)) / denom;
  // |√ρ − r| ≤ √|ρ − r²|, so the square root can amplify roundoff in ρ.
  const double allowed = tol.f2_forms + 2.0 * s * std::sqrt(gap) / denom;
  if (std::abs(from_f1 - from_r) > allowed) {
    std::ostringstream msg;
    msg << "f2_closed: closed forms disagree (" << from_f1 << " vs " << from_r << ")";
    throw NumericalContractError(msg.str());
  }
  return from_r;
}

double f_out(const ComplexMatrix& l, const ComplexMatrix& c, const Tolerances& tol) {
  require_dim(l, c.rows(), "f_out");
  require_dim(c, l.rows(), "f_out");
  require_unitary(l, tol, "f_out");
  const double k = static_cast<double>(c.rows());
  return (squared_norm(c) + std::norm(trace_adj_xy(l, c))) / (k * (k + 1.0));
}

double f_out_max(const ComplexMatrix& c, const Tolerances& tol) {
  const double k = static_cast<double>(c.rows());
  const double s = s_max(c, tol);
  return (squared_norm(c) + s * s) / (k * (k + 1.0));
}

Theorem1Result theorem1_check(const ComplexMatrix& w, std::size_t p, std::size_t q,
                              const Tolerances& tol) {
  require_unitary(w, tol, "theorem1_check");
  const std::size_t n = w.rows();
  if (p < 1 || p > n || q < 1 || q > n) {
    throw ValidationError("theorem1_check: block " + std::to_string(p) + "x" + std::to_string(q) +
                          " does not fit in " + w.shape());
  }
  double value = 0.0;
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < q; ++j) value += std::norm(w(i, j));
  const double bound = static_cast<double>(std::min(p, q));
  if (value > bound + tol.theorem1) {
    std::ostringstream msg;
    msg << "theorem1_check: Tr(X X^dag) = " << value << " exceeds min(p, q) = " << bound;
    throw NumericalContractError(msg.str());
  }
  return {value, bound};
}

GeneralOverlap s_general(const ComplexMatrix& v_tgt, const PartitionedEvolution& p,
                         const Tolerances& tol) {
  require_dim(v_tgt, p.n(), "s_general");
  require_unitary(v_tgt, tol, "s_general");
  const Blocks v = p.split(v_tgt);
  const Complex total = trace_adj_xy(v.upper, p.a()) + trace_adj_xy(v.lower, p.b()) +
                        trace_adj_xy(v.complement, p.c());
  const double s = std::abs(total);
  const double bound = static_cast<double>(p.m() + p.n());
  if (s > bound + tol.s_bound) {
    std::ostringstream msg;
    msg << "s_general: s = " << s << " exceeds m + n = " << bound;
    throw NumericalContractError(msg.str());
  }
  return {s, principal_arg(total)};
}

double f2_from_smax(double f1, double leakage_trace, double r, double s_max, std::size_t n,
                    std::size_t m) {
  if (!(m < n)) throw ValidationError("f2_from_smax: need m < n");
  for (double x : {f1, leakage_trace, r, s_max}) {
    if (!std::isfinite(x)) throw ValidationError("f2_from_smax: non-finite input");
  }
  const double nd = static_cast<double>(n);
  const double md = static_cast<double>(m);
  return (nd + md * (md + 1.0) * f1 - leakage_trace + s_max * s_max + 2.0 * r * s_max) /
         (nd * (nd + 1.0));
}

double hill_to_pedersen(double f_h, int n) {
  if (!(f_h >= 0.0 && f_h <= 1.0)) {
    throw ValidationError("hill_to_pedersen: F_H must lie in [0, 1], got " + std::to_string(f_h));
  }
  if (n < 1) throw ValidationError("hill_to_pedersen: n must be at least 1");
  const double nd = static_cast<double>(n);
  return (1.0 + nd * f_h * f_h) / (1.0 + nd);
}

FidelityReport report(const TargetGate& target, const PartitionedEvolution& p,
                      const Tolerances& tol) {
  require_unitary_mode(target, "report");
  const Complex overlap = target_overlap(target, p);
  FidelityReport out{};
  out.f1 = f1(target, p);
  out.f2 = f2_closed(target, p, tol);
  out.s_max = s_max(p.c(), tol);
  out.r = std::abs(overlap);
  out.theta = principal_arg(overlap);
  out.leakage_trace = leakage_trace(p);
  out.f_out_max = f_out_max(p.c(), tol);
  return out;
}

}  // namespace procfid
