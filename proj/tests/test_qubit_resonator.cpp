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

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "procfid/errors.hpp"
#include "procfid/linalg.hpp"
#include "procfid/qubit_resonator.hpp"

using namespace procfid;
using namespace procfid::qr;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

SystemParams uncoupled() {
  SystemParams p;
  p.g = 0.0;
  return p;
}

}  // namespace

TEST_SUITE("hamiltonian") {
  TEST_CASE("uncoupled spectrum") {
    const ComplexMatrix h = build_hamiltonian(uncoupled());
    CHECK(h.rows() == 9);
    const double wq = 6.2;
    const double wr = 6.0;
    const double d = 0.2;
    // index 3q + r: qubit level q plus resonator level r.
    const double qubit[3] = {0.0, wq, 2.0 * wq - d};
    const double res[3] = {0.0, wr, 2.0 * wr};
    for (std::size_t i = 0; i < 9; ++i) {
      for (std::size_t j = 0; j < 9; ++j) {
        if (i == j) {
          CHECK(h(i, i).real() == doctest::Approx(kTwoPi * (qubit[i / 3] + res[i % 3])));
          CHECK(h(i, i).imag() == 0.0);
        } else {
          CHECK(h(i, j) == Complex(0.0));
        }
      }
    }
    CHECK(h(4, 4).real() == doctest::Approx(kTwoPi * 12.2).epsilon(1e-15));
    CHECK(h(6, 6).real() == doctest::Approx(kTwoPi * 12.2).epsilon(1e-15));
  }

  TEST_CASE("coupling term") {
    const SystemParams p;
    const ComplexMatrix h_int = build_hamiltonian(p) - build_hamiltonian(uncoupled());
    for (std::size_t i = 0; i < 9; ++i) CHECK(h_int(i, i) == Complex(0.0));
    // The 3-level quadrature has entry moduli 1, 1, √2, √2, so ‖Y‖_F² = 6
    // and ‖Y ⊗ Y‖_F = 6.
    CHECK(frobenius_norm(h_int) == doctest::Approx(kTwoPi * p.g * 6.0).epsilon(1e-12));
    CHECK(frobenius_norm(quadrature3()) == doctest::Approx(std::sqrt(6.0)).epsilon(1e-15));
    CHECK(hermiticity_residual(quadrature3()) == 0.0);
  }

  TEST_CASE("hermitian for random parameters") {
    for (int k = 0; k < 20; ++k) {
      SystemParams p;
      p.omega_q = 4.0 + 0.1 * k;
      p.omega_r = 5.0 + 0.07 * k;
      p.delta = 0.01 * (k + 1);
      p.g = 0.005 * k;
      CHECK(hermiticity_residual(build_hamiltonian(p)) <= 1e-12);
    }
  }

  TEST_CASE("raw units drop the 2 pi") {
    SystemParams raw;
    raw.units = UnitConvention::raw;
    const ComplexMatrix diff = Complex(kTwoPi) * build_hamiltonian(raw) - build_hamiltonian(SystemParams{});
    CHECK(frobenius_norm(diff) <= 1e-12 * frobenius_norm(build_hamiltonian(SystemParams{})));
  }

  TEST_CASE("parameter validation") {
    SystemParams p;
    p.omega_q = 0.0;
    CHECK_THROWS_AS(build_hamiltonian(p), ValidationError);
    p = SystemParams{};
    p.g = -0.01;
    CHECK_THROWS_AS(build_hamiltonian(p), ValidationError);
    p = SystemParams{};
    p.delta = 7.0;
    CHECK_THROWS_AS(build_hamiltonian(p), ValidationError);
    p = SystemParams{};
    p.omega_r = std::nan("");
    CHECK_THROWS_AS(build_hamiltonian(p), ValidationError);
  }
}

TEST_SUITE("subspace and target") {
  TEST_CASE("computational indices") {
    const std::vector<std::size_t> idx = computational_indices();
    CHECK(idx == std::vector<std::size_t>{0, 1, 3, 4});
    const PartitionedEvolution p(identity(9), idx);
    CHECK(p.complement_indices().size() == 5);
  }

  TEST_CASE("controlled-Z") {
    const ComplexMatrix z = cz_target().matrix();
    CHECK(trace(z) == Complex(2.0));
    CHECK(z * z == identity(4));
    CHECK(f1(cz_target(), PartitionedEvolution(identity(9), computational_indices())) ==
          doctest::Approx(0.4).epsilon(1e-15));
  }

  TEST_CASE("phase-compensated target") {
    const Complex a = std::polar(1.0, 0.3);
    const Complex b = std::polar(1.0, -1.1);
    const Complex c = std::polar(1.0, 2.0);
    const ComplexMatrix u_s = ComplexMatrix::diagonal({a, a * b, a * c, a * b * c});
    const ComplexMatrix t = phase_compensated_cz(u_s).matrix();
    CHECK(std::abs(t(0, 0) - 1.0) < 1e-15);
    CHECK(std::abs(t(1, 1) - b) < 1e-14);
    CHECK(std::abs(t(2, 2) - c) < 1e-14);
    CHECK(std::abs(t(3, 3) + b * c) < 1e-14);
    CHECK_THROWS_AS(phase_compensated_cz(identity(3)), ValidationError);
  }
}

TEST_SUITE("sweep") {
  TEST_CASE("first grid point is the identity propagator") {
    const SweepResult r = sweep(SystemParams{}, 0.0, 50.0, 501, false);
    REQUIRE(r.times.size() == 501);
    CHECK(r.times.front() == 0.0);
    CHECK(r.times.back() == 50.0);
    CHECK(r.times[10] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(r.f1_series[0] == doctest::Approx(0.4).epsilon(1e-14));
    CHECK(r.f2_series[0] == doctest::Approx(29.0 / 45.0).epsilon(1e-14));
    CHECK(r.leakage_series[0] == doctest::Approx(4.0).epsilon(1e-14));
  }

  TEST_CASE("default window: dominance and bounds") {
    const SweepResult r = sweep(SystemParams{}, 0.0, 50.0, 501, false);
    for (std::size_t k = 0; k < r.times.size(); ++k) {
      CAPTURE(r.times[k]);
      CHECK(r.f2_series[k] >= r.f1_series[k] - 1e-12);
      CHECK(r.f1_series[k] >= 0.0);
      CHECK(r.f1_series[k] <= 1.0 + 1e-12);
      CHECK(r.f2_series[k] >= 0.0);
      CHECK(r.f2_series[k] <= 1.0 + 1e-12);
      CHECK(r.leakage_series[k] >= 0.0);
      CHECK(r.leakage_series[k] <= 4.0 + 1e-12);
    }
  }

  TEST_CASE("propagators are unitary on the grid") {
    const ComplexMatrix h = build_hamiltonian(SystemParams{});
    for (int k = 0; k <= 500; ++k) {
      REQUIRE(unitarity_residual(expm_i(h, 0.1 * k)) <= 1e-9);
    }
  }

  TEST_CASE("uncoupled block is its own perfect target") {
    const ComplexMatrix h = build_hamiltonian(uncoupled());
    for (int k = 0; k <= 50; ++k) {
      const PartitionedEvolution p(expm_i(h, 0.37 * k), computational_indices());
      CHECK(f1(TargetGate::unitary(p.u_s()), p) == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(p.a().rows() == 4);
      CHECK(frobenius_norm(p.a()) <= 1e-12);
    }
  }

  TEST_CASE("uncoupled with compensation") {
    // diag(1, d1, d2, d1·d2) against diag(1, d1, d2, −d1·d2): r = 2.
    const SweepResult r = sweep(uncoupled(), 0.0, 10.0, 11, true);
    for (std::size_t k = 0; k < r.times.size(); ++k) {
      CHECK(r.f1_series[k] == doctest::Approx(0.4).epsilon(1e-12));
      CHECK(r.leakage_series[k] == doctest::Approx(4.0).epsilon(1e-12));
    }
  }

  TEST_CASE("compensated default sweep stays in bounds") {
    const SweepResult r = sweep(SystemParams{}, 0.0, 50.0, 101, true);
    for (std::size_t k = 0; k < r.times.size(); ++k) {
      CHECK(r.f1_series[k] >= 0.0);
      CHECK(r.f1_series[k] <= 1.0 + 1e-12);
      CHECK(r.f2_series[k] <= 1.0 + 1e-12);
    }
  }

  TEST_CASE("invalid grids") {
    CHECK_THROWS_AS(sweep(SystemParams{}, 5.0, 5.0, 10, false), ValidationError);
    CHECK_THROWS_AS(sweep(SystemParams{}, 5.0, 1.0, 10, false), ValidationError);
    CHECK_THROWS_AS(sweep(SystemParams{}, 0.0, 1.0, 1, false), ValidationError);
  }
}

TEST_SUITE("csv") {
  TEST_CASE("layout and determinism") {
    const SystemParams p;
    std::ostringstream a;
    std::ostringstream b;
    write_csv(a, sweep(p, 0.0, 2.0, 21, false), p, false);
    write_csv(b, sweep(p, 0.0, 2.0, 21, false), p, false);
    CHECK(a.str() == b.str());

    std::istringstream in(a.str());
    std::string line;
    int comments = 0;
    int rows = 0;
    bool header = false;
    while (std::getline(in, line)) {
      if (line.rfind('#', 0) == 0) {
        ++comments;
      } else if (!header) {
        CHECK(line == "t_ns,f1,f2,leakage");
        header = true;
      } else {
        ++rows;
      }
    }
    CHECK(comments == 6);
    CHECK(rows == 21);
    CHECK(a.str().find("# g_ghz=0.029999999999999999\n") != std::string::npos);
    CHECK(a.str().find("t_ns,f1,f2,leakage\n0,0.4000000000000") != std::string::npos);
  }
}
