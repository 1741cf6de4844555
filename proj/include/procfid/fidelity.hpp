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

#include <cstddef>
#include <span>
#include <vector>

#include <json.hpp>

#include "procfid/matrix.hpp"
#include "procfid/tolerances.hpp"

namespace procfid {

/// The four blocks of an n×n matrix under a subspace/complement split.
struct Blocks {
  ComplexMatrix subspace;    // rows S, cols S      (U_s / U_tgt)
  ComplexMatrix upper;       // rows S, cols S^c    (A / J)
  ComplexMatrix lower;       // rows S^c, cols S    (B / K)
  ComplexMatrix complement;  // rows S^c, cols S^c  (C / L)
};

/// A full n-level unitary evolution together with the m computational levels.
///
/// The computational levels need not be the leading ones: blocks are taken by
/// gathering rows and columns at `subspace_indices` and at their complement,
/// which is the same as first conjugating U_f by the sorting permutation.
class PartitionedEvolution {
 public:
  /// Validates unitarity of u_f, 1 ≤ m < n, sorted distinct in-range indices,
  /// and Tr(U_s U_s†) + Tr(A A†) = m.
  PartitionedEvolution(ComplexMatrix u_f, std::vector<std::size_t> subspace_indices,
                       const Tolerances& tol = {});

  const ComplexMatrix& u_f() const { return u_f_; }
  std::span<const std::size_t> subspace_indices() const { return subspace_; }
  std::span<const std::size_t> complement_indices() const { return complement_; }
  std::size_t n() const { return u_f_.rows(); }
  std::size_t m() const { return subspace_.size(); }

  const ComplexMatrix& u_s() const { return blocks_.subspace; }
  const ComplexMatrix& a() const { return blocks_.upper; }
  const ComplexMatrix& b() const { return blocks_.lower; }
  const ComplexMatrix& c() const { return blocks_.complement; }

  /// Splits any n×n matrix with this partition's index sets.
  Blocks split(const ComplexMatrix& full) const;
  /// Inverse of split for a block-diagonal matrix: places `sub` on the
  /// subspace levels and `comp` on the complement, zeros elsewhere. With
  /// leading indices this is direct_sum(sub, comp).
  ComplexMatrix embed(const ComplexMatrix& sub, const ComplexMatrix& comp) const;

 private:
  ComplexMatrix u_f_;
  std::vector<std::size_t> subspace_;
  std::vector<std::size_t> complement_;
  Blocks blocks_;
};

/// The m-level target operation. Unitary by default; `general` admits any
/// m×m matrix and is accepted only by the evaluation-only operations.
class TargetGate {
 public:
  static TargetGate unitary(ComplexMatrix u, const Tolerances& tol = {});
  static TargetGate general(ComplexMatrix u);

  const ComplexMatrix& matrix() const { return u_; }
  std::size_t dim() const { return u_.rows(); }
  bool is_unitary_mode() const { return unitary_; }

 private:
  TargetGate(ComplexMatrix u, bool unitary) : u_(std::move(u)), unitary_(unitary) {}
  ComplexMatrix u_;
  bool unitary_;
};

struct FidelityReport {
  double f1;
  double f2;
  double s_max;
  double r;      // |Tr(U_tgt† U_s)|
  double theta;  // arg Tr(U_tgt† U_s), in (−π, π]
  double leakage_trace;  // Tr(U_s U_s†)
  double f_out_max;
};

nlohmann::json to_json(const FidelityReport& r);

/// [Tr(U_t† U U† U_t) + |Tr(U_t† U)|²] / [n(n+1)]. u_t must be unitary; u is
/// unrestricted.
double f_avg_trace(const ComplexMatrix& u_t, const ComplexMatrix& u, const Tolerances& tol = {});

/// Tr(U_tgt† U_s).
Complex target_overlap(const TargetGate& target, const PartitionedEvolution& p);

/// Tr(U_s U_s†), the population kept inside the computational subspace.
double leakage_trace(const PartitionedEvolution& p);

/// [Tr(U_s U_s†) + |Tr(U_tgt† U_s)|²] / [m(m+1)].
double f1(const TargetGate& target, const PartitionedEvolution& p);

/// max over unitary L of |Tr(L† C)|, which is Tr √(C†C).
double s_max(const ComplexMatrix& c, const Tolerances& tol = {});

/// The unitary V_tgt = U_tgt ⊕ L_max maximizing |Tr(V_tgt† U_f)| over
/// block-diagonal unitary completions, in the same basis as U_f.
///
/// L_max is the unitary polar factor of C rotated by a global phase so that
/// arg Tr(L_max† C) = arg Tr(U_tgt† U_s); when r = 0 no phase is applied, and
/// when C = 0 the completion is the identity.
ComplexMatrix optimal_embedding(const TargetGate& target, const PartitionedEvolution& p,
                                const Tolerances& tol = {});

/// [n + |Tr(V† U_f)|²] / [n(n+1)]; v_tgt must be unitary.
double f2_prime(const ComplexMatrix& v_tgt, const PartitionedEvolution& p,
                const Tolerances& tol = {});

/// The maximum of f2_prime over unitary completions, in closed form.
///
/// Evaluates [n + s² + ρ + 2s√ρ] / [n(n+1)] with ρ = m(m+1)F₁ − Tr(U_s U_s†)
/// and s = s_max(C), and cross-checks it against [n + (r + s)²] / [n(n+1)].
/// Returns the second form, which does not lose accuracy through √ρ when r
/// is small. Throws NumericalContractError when ρ < −tol.radicand, when ρ
/// differs from r² beyond tol.r_identity, or when the forms disagree.
double f2_closed(const TargetGate& target, const PartitionedEvolution& p,
                 const Tolerances& tol = {});

/// [Tr(C†C) + |Tr(L† C)|²] / [k(k+1)] for k×k blocks; l must be unitary.
double f_out(const ComplexMatrix& l, const ComplexMatrix& c, const Tolerances& tol = {});
/// [Tr(C†C) + (Tr √(C†C))²] / [k(k+1)].
double f_out_max(const ComplexMatrix& c, const Tolerances& tol = {});

struct Theorem1Result {
  double value;  // Tr(X X†) for the top-left p×q block X
  double bound;  // min(p, q)
};

/// Tr(X X†) ≤ min{p, q} for any p×q block X of a unitary W. Throws
/// ValidationError if w is not unitary or p, q ∉ [1, n], and
/// NumericalContractError if the bound is violated.
Theorem1Result theorem1_check(const ComplexMatrix& w, std::size_t p, std::size_t q,
                              const Tolerances& tol = {});

struct GeneralOverlap {
  double s;
  double phi;
};

/// s·e^{iφ} = Tr(J† A + K† B + L† C) for an arbitrary unitary V_tgt split
/// with the partition's index sets. Enforces s ≤ m + n.
GeneralOverlap s_general(const ComplexMatrix& v_tgt, const PartitionedEvolution& p,
                         const Tolerances& tol = {});

/// [n + m(m+1)F₁ − Tr(U_s U_s†) + s_max² + 2·r·s_max] / [n(n+1)].
double f2_from_smax(double f1, double leakage_trace, double r, double s_max, std::size_t n,
                    std::size_t m);

/// (1 + n·F_H²) / (1 + n).
double hill_to_pedersen(double f_h, int n);

FidelityReport report(const TargetGate& target, const PartitionedEvolution& p,
                      const Tolerances& tol = {});

}  // namespace procfid
