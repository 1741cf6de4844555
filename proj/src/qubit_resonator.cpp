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

#include "procfid/qubit_resonator.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "procfid/errors.hpp"
#include "procfid/linalg.hpp"

namespace procfid::qr {

namespace {

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

void SystemParams::validate() const {
  if (!(omega_q > 0.0 && omega_r > 0.0 && delta > 0.0)) {
    throw ValidationError("omega_q, omega_r and delta must be positive");
  }
  if (!(g >= 0.0)) throw ValidationError("coupling g must be non-negative");
  if (!(delta < omega_q)) throw ValidationError("delta must be below omega_q");
}

ComplexMatrix quadrature3() {
  const Complex i{0.0, 1.0};
  const double r2 = std::numbers::sqrt2;
  return ComplexMatrix::from_rows({{0.0, -i, 0.0}, {i, 0.0, -r2 * i}, {0.0, r2 * i, 0.0}});
}

ComplexMatrix build_hamiltonian(const SystemParams& p) {
  p.validate();
  const double scale = p.units == UnitConvention::angular_2pi ? 2.0 * std::numbers::pi : 1.0;
  const ComplexMatrix qubit =
      ComplexMatrix::diagonal({0.0, p.omega_q, 2.0 * p.omega_q - p.delta});
  const ComplexMatrix resonator = ComplexMatrix::diagonal({0.0, p.omega_r, 2.0 * p.omega_r});
  const ComplexMatrix id3 = identity(3);
  const ComplexMatrix y = quadrature3();
  const ComplexMatrix h = kron(qubit, id3) + kron(id3, resonator) + Complex(p.g) * kron(y, y);
  return Complex(scale) * h;
}

std::vector<std::size_t> computational_indices() { return {0, 1, 3, 4}; }

TargetGate cz_target() { return TargetGate::unitary(ComplexMatrix::diagonal({1.0, 1.0, 1.0, -1.0})); }

TargetGate phase_compensated_cz(const ComplexMatrix& u_s) {
  if (u_s.rows() != 4 || u_s.cols() != 4) {
    throw ValidationError("phase_compensated_cz: expected a 4x4 block, got " + u_s.shape());
  }
  const double ref = std::arg(u_s(0, 0));
  const double alpha = std::arg(u_s(1, 1)) - ref;
  const double beta = std::arg(u_s(2, 2)) - ref;
  return TargetGate::unitary(ComplexMatrix::diagonal(
      {1.0, std::polar(1.0, alpha), std::polar(1.0, beta), -std::polar(1.0, alpha + beta)}));
}

SweepResult sweep(const SystemParams& p, double t_start, double t_end, std::size_t n_points,
                  bool local_phase_compensation, const Tolerances& tol) {
  if (!(t_start < t_end)) throw ValidationError("sweep: t_start must be below t_end");
  if (n_points < 2) throw ValidationError("sweep: need at least 2 grid points");

  const ComplexMatrix h = build_hamiltonian(p);
  const std::vector<std::size_t> idx = computational_indices();
  const TargetGate plain = cz_target();

  SweepResult out;
  out.times.reserve(n_points);
  const double step = (t_end - t_start) / static_cast<double>(n_points - 1);
  for (std::size_t k = 0; k < n_points; ++k) {
    const double t = k + 1 == n_points ? t_end : t_start + static_cast<double>(k) * step;
    const PartitionedEvolution part(expm_i(h, t, tol), idx, tol);
    const TargetGate target = local_phase_compensation ? phase_compensated_cz(part.u_s()) : plain;
    out.times.push_back(t);
    out.f1_series.push_back(f1(target, part));
    out.f2_series.push_back(f2_closed(target, part, tol));
    out.leakage_series.push_back(leakage_trace(part));
  }
  return out;
}

void write_csv(std::ostream& out, const SweepResult& result, const SystemParams& p,
               bool local_phase_compensation) {
  out << "# omega_q_ghz=" << fmt17(p.omega_q) << '\n'
      << "# omega_r_ghz=" << fmt17(p.omega_r) << '\n'
      << "# delta_ghz=" << fmt17(p.delta) << '\n'
      << "# g_ghz=" << fmt17(p.g) << '\n'
      << "# units=" << (p.units == UnitConvention::angular_2pi ? "angular" : "raw") << '\n'
      << "# compensate_phases=" << (local_phase_compensation ? "true" : "false") << '\n'
      << "t_ns,f1,f2,leakage\n";
  for (std::size_t k = 0; k < result.times.size(); ++k) {
    out << fmt17(result.times[k]) << ',' << fmt17(result.f1_series[k]) << ','
        << fmt17(result.f2_series[k]) << ',' << fmt17(result.leakage_series[k]) << '\n';
  }
}

}  // namespace procfid::qr
