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

#include "procfid/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "procfid/errors.hpp"
#include "procfid/fidelity.hpp"
#include "procfid/haar.hpp"
#include "procfid/linalg.hpp"
#include "procfid/matrix_json.hpp"
#include "procfid/qubit_resonator.hpp"

namespace procfid::cli {

namespace {

struct Options {
  std::string target;
  std::string evolution;
  std::vector<std::size_t> indices;
  std::uint64_t seed = 0;
  std::size_t samples = 200000;
  double tol = -1.0;
  std::string units = "angular";
  std::string out;
  double t_start = 0.0;
  double t_end = 50.0;
  std::size_t points = 501;
  bool compensate = false;
  std::size_t p = 0;
  std::size_t q = 0;
  qr::SystemParams system;
};

ComplexMatrix load(const std::string& path, const char* flag) {
  if (path.empty()) throw ValidationError(std::string("missing required ") + flag);
  return read_matrix_file(path);
}

std::vector<std::size_t> required_indices(const Options& o) {
  if (o.indices.empty()) throw ValidationError("missing required --indices");
  return o.indices;
}

// Writes the command's output to --out or to the given stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : target_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw ValidationError("cannot open output file " + path);
      target_ = &file_;
    }
  }
  std::ostream& stream() { return *target_; }

 private:
  std::ofstream file_;
  std::ostream* target_;
};

int execute(const std::string& command, const Options& o, std::ostream& out, std::ostream& err) {
  Tolerances tol;
  if (o.tol > 0.0) tol.unitary = o.tol;
  Sink sink(o.out, out);
  std::ostream& os = sink.stream();

  if (command == "favg") {
    const ComplexMatrix u_t = load(o.target, "--target");
    const ComplexMatrix u = load(o.evolution, "--evolution");
    os << nlohmann::json{{"f_avg", f_avg_trace(u_t, u, tol)}}.dump() << '\n';
    return kOk;
  }
  if (command == "f1" || command == "f2" || command == "report") {
    const TargetGate target = TargetGate::unitary(load(o.target, "--target"), tol);
    const PartitionedEvolution part(load(o.evolution, "--evolution"), required_indices(o), tol);
    if (command == "f1") {
      os << nlohmann::json{{"f1", f1(target, part)}}.dump() << '\n';
    } else if (command == "f2") {
      const ComplexMatrix v = optimal_embedding(target, part, tol);
      os << nlohmann::json{{"f2", f2_closed(target, part, tol)},
                           {"f2_prime_at_optimum", f2_prime(v, part, tol)},
                           {"v_tgt", matrix_to_json(v)}}
                .dump()
         << '\n';
    } else {
      os << to_json(report(target, part, tol)).dump() << '\n';
    }
    return kOk;
  }
  if (command == "mc-verify") {
    const ComplexMatrix u_t = load(o.target, "--target");
    const ComplexMatrix u = load(o.evolution, "--evolution");
    const double exact = f_avg_trace(u_t, u, tol);
    const McEstimate est = f_avg_mc(u_t, u, {o.seed, o.samples}, tol);
    const double band = 4.0 * est.std_error;
    // A zero-variance estimator can still differ from the trace formula by
    // roundoff.
    const bool agree = std::abs(est.mean - exact) <= std::max(band, 1e-12);
    os << nlohmann::json{{"f_avg_trace", exact}, {"estimate", to_json(est)}, {"agree", agree}}
              .dump()
       << '\n';
    if (!agree) {
      err << "mc-verify: estimate " << est.mean << " differs from trace formula " << exact
          << " by more than 4 standard errors\n";
      return kNumerical;
    }
    return kOk;
  }
  if (command == "sweep") {
    qr::SystemParams sys = o.system;
    if (o.units == "angular") {
      sys.units = qr::UnitConvention::angular_2pi;
    } else if (o.units == "raw") {
      sys.units = qr::UnitConvention::raw;
    } else {
      throw ValidationError("--units must be angular or raw");
    }
    const qr::SweepResult res = qr::sweep(sys, o.t_start, o.t_end, o.points, o.compensate, tol);
    qr::write_csv(os, res, sys, o.compensate);
    return kOk;
  }
  if (command == "polar") {
    const PolarFactors f = polar(load(o.evolution, "--evolution"), tol);
    os << nlohmann::json{{"unitary_factor", matrix_to_json(f.unitary_factor)},
                         {"hermitian_factor", matrix_to_json(f.hermitian_factor)}}
              .dump()
       << '\n';
    return kOk;
  }
  if (command == "smax") {
    os << nlohmann::json{{"s_max", s_max(load(o.evolution, "--evolution"), tol)}}.dump() << '\n';
    return kOk;
  }
  if (command == "theorem1") {
    const ComplexMatrix w = load(o.evolution, "--evolution");
    const std::size_t n = w.rows();
    if (o.p < 1 || o.q < 1 || o.p > n || o.q > n) {
      throw ValidationError("--p and --q must lie in [1, " + std::to_string(n) + "]");
    }
    // Evaluated without the throwing bound check so a violation is still printed.
    Tolerances loose = tol;
    loose.theorem1 = INFINITY;
    const Theorem1Result r = theorem1_check(w, o.p, o.q, loose);
    const bool holds = r.value <= r.bound + tol.theorem1;
    os << nlohmann::json{{"value", r.value}, {"bound", r.bound}, {"holds", holds}}.dump() << '\n';
    return holds ? kOk : kNumerical;
  }
  throw ValidationError("unknown command " + command);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Process fidelity measures for leaky quantum gates", "procfid"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) { sub->add_option("--out", o.out, "Output path"); };
  auto add_tol = [&](CLI::App* sub) {
    sub->add_option("--tol", o.tol, "Unitarity tolerance for inputs (default 1e-10)");
  };
  auto add_pair = [&](CLI::App* sub) {
    sub->add_option("--target", o.target, "Target matrix JSON")->required();
    sub->add_option("--evolution", o.evolution, "Evolution matrix JSON")->required();
  };
  auto add_indices = [&](CLI::App* sub) {
    sub->add_option("--indices", o.indices, "Computational subspace indices, e.g. 0,1,3,4")
        ->delimiter(',')
        ->required();
  };

  CLI::App* favg = app.add_subcommand("favg", "Trace-formula average fidelity");
  add_pair(favg);
  add_tol(favg);
  add_common(favg);

  for (const char* name : {"f1", "f2", "report"}) {
    CLI::App* sub = app.add_subcommand(name, name == std::string("report")
                                                 ? "Full fidelity report as JSON"
                                                 : "Subspace fidelity measure");
    add_pair(sub);
    add_indices(sub);
    add_tol(sub);
    add_common(sub);
  }

  CLI::App* mc = app.add_subcommand("mc-verify", "Monte Carlo check of the trace formula");
  add_pair(mc);
  mc->add_option("--seed", o.seed, "RNG seed");
  mc->add_option("--samples", o.samples, "Number of Haar samples")->check(CLI::Range(2, 1 << 30));
  add_tol(mc);
  add_common(mc);

  CLI::App* sw = app.add_subcommand("sweep", "Qubit-resonator CZ fidelity sweep as CSV");
  sw->add_option("--t-start", o.t_start, "Start time (ns)");
  sw->add_option("--t-end", o.t_end, "End time (ns)");
  sw->add_option("--points", o.points, "Number of grid points");
  sw->add_flag("--compensate-phases", o.compensate, "Absorb single-qubit phases into the target");
  sw->add_option("--units", o.units, "angular (2*pi*f) or raw");
  sw->add_option("--omega-q", o.system.omega_q, "Qubit frequency (GHz)");
  sw->add_option("--omega-r", o.system.omega_r, "Resonator frequency (GHz)");
  sw->add_option("--delta", o.system.delta, "Qubit anharmonicity (GHz)");
  sw->add_option("--g", o.system.g, "Coupling strength (GHz)");
  add_tol(sw);
  add_common(sw);

  CLI::App* pol = app.add_subcommand("polar", "Polar decomposition of a square matrix");
  pol->add_option("--evolution", o.evolution, "Matrix JSON")->required();
  add_tol(pol);
  add_common(pol);

  CLI::App* sm = app.add_subcommand("smax", "Nuclear norm Tr sqrt(C^dag C)");
  sm->add_option("--evolution", o.evolution, "Matrix JSON")->required();
  add_tol(sm);
  add_common(sm);

  CLI::App* th = app.add_subcommand("theorem1", "Block population bound Tr(XX^dag) <= min(p,q)");
  th->add_option("--evolution", o.evolution, "Unitary matrix JSON")->required();
  th->add_option("--p", o.p, "Block rows")->required();
  th->add_option("--q", o.q, "Block columns")->required();
  add_tol(th);
  add_common(th);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kValidation;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return execute(command, o, out, err);
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << '\n';
    return kValidation;
  } catch (const NumericalContractError& e) {
    err << "numerical contract violated: " << e.what() << '\n';
    return kNumerical;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUnexpected;
  }
}

}  // namespace procfid::cli
