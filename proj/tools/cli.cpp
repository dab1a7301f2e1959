// Copyright 2026 The qscocycle Authors
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

#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "qsc/qsc.hpp"
#include "qsc/random.hpp"

namespace qsc::cli {
namespace {

using Index = Eigen::Index;

struct GlobalConfig {
  double tol = tol::kAlgebraic;
  std::uint64_t seed = 1;
  std::string out_path;
  std::size_t budget = kDefaultStateBudget;
};

// Report goes to --out when given (summary to stdout), else to stdout
// (summary to stderr).
class Emitter {
 public:
  Emitter(const GlobalConfig& config, std::ostream& out, std::ostream& err)
      : path_(config.out_path), out_(out), err_(err) {}

  void report(const std::string& text) {
    if (path_.empty()) {
      out_ << text;
    } else {
      io::write_file(path_, text);
    }
  }
  std::ostream& summary() { return path_.empty() ? err_ : out_; }

 private:
  std::string path_;
  std::ostream& out_;
  std::ostream& err_;
};

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw DomainError(message);
}

CVector first_basis(std::size_t dim) {
  CVector v = CVector::Zero(static_cast<Index>(dim));
  v(0) = 1.0;
  return v;
}

CVector vector_option(const std::string& text, std::size_t dim, const char* name) {
  if (text.empty()) return first_basis(dim);
  CVector v = io::vector_from_json(text);
  if (static_cast<std::size_t>(v.size()) != dim) {
    throw DimensionError(std::string("--") + name + ": expected " + std::to_string(dim) + " entries");
  }
  return v;
}

StepFunction step_option(const std::string& path, std::size_t dim_k) {
  if (path.empty()) return StepFunction::zero(dim_k);
  StepFunction f = io::step_function_from_json(io::read_file(path));
  if (f.dim_k() != dim_k) {
    throw DimensionError("step function \"" + path + "\" takes values in C^" +
                         std::to_string(f.dim_k()) + ", generator has dim_k = " +
                         std::to_string(dim_k));
  }
  return f;
}

BlockGenerator load_generator(const std::string& path) {
  return io::generator_from_json(io::read_file(path));
}

// --- build -------------------------------------------------------------------

struct BuildArgs {
  std::string spec;
};

int cmd_build(const BuildArgs& args, const GlobalConfig& config, Emitter& emit) {
  const Model model = io::model_from_json(io::read_file(args.spec));
  emit.report(io::generator_to_json(model.generator));
  const Classification cls = classify(model.generator, config.tol);
  emit.summary() << "built generator dim_h=" << model.generator.dim_h()
                 << " dim_k=" << model.generator.dim_k() << "\n"
                 << "classification: " << cls.summary() << "\n"
                 << "interior levels: " << model.interior.size() << " of "
                 << model.generator.dim_h() << "\n";
  return kOk;
}

// --- check -------------------------------------------------------------------

struct CheckArgs {
  std::string generator;
  std::size_t samples = 100;
};

int cmd_check(const CheckArgs& args, const GlobalConfig& config, Emitter& emit) {
  const BlockGenerator f = load_generator(args.generator);
  const Classification cls = classify(f, config.tol);
  Rng rng(config.seed);
  double worst_form = -std::numeric_limits<double>::infinity();
  for (std::size_t s = 0; s < args.samples; ++s) {
    const CVector xi = rng.vector(static_cast<Index>(f.full_dim()));
    worst_form = std::max(worst_form, form_defect(f, xi) / xi.squaredNorm());
  }
  std::ostringstream csv;
  csv << "metric,value\n"
      << "operator_defect," << fmt(cls.operator_defect) << "\n"
      << "max_form_defect_ratio," << (args.samples > 0 ? fmt(worst_form) : "nan") << "\n"
      << "c_norm," << fmt(cls.c_norm) << "\n"
      << "c_contraction," << cls.c_contraction << "\n"
      << "c_isometric," << cls.c_isometric << "\n"
      << "c_coisometric," << cls.c_coisometric << "\n"
      << "lk_defect," << fmt(cls.lk_defect) << "\n"
      << "m_defect," << fmt(cls.m_defect) << "\n"
      << "equality_case," << cls.equality_case << "\n"
      << "contractive," << cls.contractive << "\n";
  emit.report(csv.str());
  emit.summary() << cls.summary() << "\n";
  return cls.contractive ? kOk : kViolation;
}

// --- evolve ------------------------------------------------------------------

struct EvolveArgs {
  std::string generator;
  std::string f_path;
  std::string g_path;
  std::string u;
  std::string v;
  double t = 1.0;
  std::size_t grid = 10;
  std::size_t oracle = 0;
};

int cmd_evolve(const EvolveArgs& args, const GlobalConfig&, Emitter& emit) {
  const BlockGenerator gen = load_generator(args.generator);
  const StepFunction f = step_option(args.f_path, gen.dim_k());
  const StepFunction g = step_option(args.g_path, gen.dim_k());
  const CVector u = vector_option(args.u, gen.dim_h(), "u");
  const CVector v = vector_option(args.v, gen.dim_h(), "v");
  require(args.t >= 0.0 && std::isfinite(args.t), "--t must be finite and non-negative");
  require(args.grid >= 1, "--grid must be at least 1");

  const SemigroupFamily family(gen);
  std::ostringstream csv;
  csv << "t,re,im";
  if (args.oracle > 0) csv << ",oracle_re,oracle_im,abs_diff";
  csv << "\n";
  double worst = 0.0;
  for (std::size_t k = 0; k <= args.grid; ++k) {
    const double t = args.t * static_cast<double>(k) / static_cast<double>(args.grid);
    const Complex value = full_matrix_element(family, u, f, v, g, t);
    csv << fmt(t) << "," << fmt(value.real()) << "," << fmt(value.imag());
    if (args.oracle > 0) {
      const Complex approx = oracle_matrix_element(gen, u, f, v, g, t, args.oracle);
      const double diff = std::abs(approx - value);
      worst = std::max(worst, diff);
      csv << "," << fmt(approx.real()) << "," << fmt(approx.imag()) << "," << fmt(diff);
    }
    csv << "\n";
  }
  emit.report(csv.str());
  emit.summary() << "evaluated " << args.grid + 1 << " times on [0, " << args.t << "]";
  if (args.oracle > 0) emit.summary() << "; max |engine - oracle(N=" << args.oracle << ")| = " << worst;
  emit.summary() << "\n";
  return kOk;
}

// --- schur -------------------------------------------------------------------

struct SchurArgs {
  std::string generator;
  std::size_t samples = 1000;
  std::size_t n_max = 3;
};

int cmd_schur(const SchurArgs& args, const GlobalConfig& config, Emitter& emit) {
  const BlockGenerator f = load_generator(args.generator);
  require(args.n_max >= 1, "--n-max must be at least 1");
  const double tolerance = std::max(config.tol, 1e-8);
  const auto reports = screen_family(f, args.n_max, args.samples, config.seed, tolerance);
  std::ostringstream csv;
  write_probe_csv(csv, reports);
  emit.report(csv.str());
  const auto failed = std::count_if(reports.begin(), reports.end(),
                                    [](const ProbeReport& r) { return !r.pass && !r.skipped; });
  const auto skipped = std::count_if(reports.begin(), reports.end(),
                                     [](const ProbeReport& r) { return r.skipped; });
  emit.summary() << reports.size() << " probes, " << failed << " violations, " << skipped
                 << " skipped\n";
  if (!reports.empty()) {
    const ProbeReport& worst = reports.front();
    emit.summary() << "worst probe " << worst.probe_id << ": n=" << worst.n << " t=" << worst.t
                   << " defect=" << worst.defect << "\n";
  }
  return failed == 0 ? kOk : kViolation;
}

// --- tk ----------------------------------------------------------------------

struct TkArgs {
  std::string generator;
  std::vector<int> n_list{10, 100, 1000};
  double horizon = 1.0;
  std::size_t grid = 20;
};

int cmd_tk(const TkArgs& args, const GlobalConfig& config, Emitter& emit) {
  const BlockGenerator f = load_generator(args.generator);
  require(args.horizon > 0.0, "--T must be positive");
  require(args.grid >= 1, "--grid must be at least 1");
  require(!args.n_list.empty(), "--n-list must not be empty");
  const double defect = contractivity_defect(f);
  if (defect > config.tol) {
    emit.summary() << "generator is not contractive (defect " << defect << ")\n";
    return kViolation;
  }
  const ConvergenceReport report =
      trotter_kato_pipeline(f, args.n_list, basis_pairs(f.dim_k()), args.horizon, args.grid, config.tol);
  std::ostringstream csv;
  write_convergence_csv(csv, report);
  emit.report(csv.str());
  for (std::size_t i = 0; i < report.n_list.size(); ++i) {
    emit.summary() << "n=" << report.n_list[i] << " max sup error " << report.max_error[i] << "\n";
  }
  emit.summary() << (report.monotone ? "monotone convergence" : "NOT monotone") << "\n";
  return report.monotone ? kOk : kViolation;
}

// --- coords ------------------------------------------------------------------

struct CoordsArgs {
  std::string generator;
};

int cmd_coords(const CoordsArgs& args, const GlobalConfig& config, Emitter& emit) {
  const BlockGenerator f = load_generator(args.generator);
  const CoordinateMatrix g = coords_from_f(f);
  const BlockGenerator back = generator_from_components(coords_to_f(g));
  const double err = op_norm(back.full() - f.full());
  emit.report(io::coordinates_to_json(g));
  emit.summary() << "round-trip |F' - F| = " << err << "\n";
  return err <= config.tol ? kOk : kViolation;
}

// --- dual --------------------------------------------------------------------

struct DualArgs {
  std::string generator;
  std::size_t probes = 100;
};

int cmd_dual(const DualArgs& args, const GlobalConfig& config, Emitter& emit) {
  const BlockGenerator f = load_generator(args.generator);
  const SemigroupFamily family(f);
  const SemigroupFamily dual = dual_family(f);
  Rng rng(config.seed);
  double worst = 0.0;
  const auto m = static_cast<Index>(f.dim_k());
  for (std::size_t p = 0; p < args.probes; ++p) {
    const CVector c = rng.vector(m, 0.7);
    const CVector d = rng.vector(m, 0.7);
    const double t = rng.uniform(0.0, 2.0);
    worst = std::max(worst, op_norm(dual.q(c, d, t) - family.q(d, c, t).adjoint()));
  }
  emit.report(io::generator_to_json(dual.source()));
  emit.summary() << "max |Q~^{c,d}_t - (Q^{d,c}_t)*| over " << args.probes << " probes = " << worst
                 << "\n";
  return worst <= config.tol ? kOk : kViolation;
}

// --- oracle-norm -------------------------------------------------------------

struct OracleNormArgs {
  std::string generator;
  std::string v;
  std::string g_path;
  double t = 1.0;
  std::size_t steps = 12;
};

int cmd_oracle_norm(const OracleNormArgs& args, const GlobalConfig& config, Emitter& emit) {
  const BlockGenerator f = load_generator(args.generator);
  const CVector v = vector_option(args.v, f.dim_h(), "v");
  const StepFunction g = step_option(args.g_path, f.dim_k());
  require(args.t > 0.0, "--t must be positive");
  require(args.steps >= 1, "--N must be at least 1");
  const StateNorm result = oracle_state_norm(f, v, g, args.t, args.steps, config.budget);
  std::ostringstream csv;
  csv << "N,norm,reference,state_dim\n"
      << args.steps << "," << fmt(result.norm) << "," << fmt(result.reference) << ","
      << result.state_dim << "\n";
  emit.report(csv.str());
  emit.summary() << "|V_N (v x e(g))| = " << result.norm << ", |v| |e(g)| = " << result.reference
                 << "\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"qsc: numerical engine for quantum stochastic contraction cocycles"};
  app.require_subcommand(1);
  GlobalConfig config;
  app.add_option("--tol", config.tol, "Tolerance for contractivity and identity checks")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", config.seed, "Seed for randomized probes");
  app.add_option("--out", config.out_path, "Write the report to this file");
  app.add_option("--budget", config.budget, "Largest toy Fock state dimension")
      ->check(CLI::PositiveNumber);
  app.fallthrough();

  BuildArgs build;
  auto* build_cmd = app.add_subcommand("build", "Build a generator from a model spec");
  build_cmd->add_option("spec", build.spec, "Model spec JSON")->required();

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "Contractivity diagnostics for a generator");
  check_cmd->add_option("generator", check.generator, "Generator JSON")->required();
  check_cmd->add_option("--samples", check.samples, "Random vectors for the form inequality");

  EvolveArgs evolve;
  auto* evolve_cmd = app.add_subcommand("evolve", "Cocycle matrix elements on a time grid");
  evolve_cmd->add_option("generator", evolve.generator, "Generator JSON")->required();
  evolve_cmd->add_option("--f", evolve.f_path, "Step function JSON for the bra (default 0)");
  evolve_cmd->add_option("--g", evolve.g_path, "Step function JSON for the ket (default 0)");
  evolve_cmd->add_option("--u", evolve.u, "h-vector [[re,im],...] for the bra (default e_0)");
  evolve_cmd->add_option("--v", evolve.v, "h-vector [[re,im],...] for the ket (default e_0)");
  evolve_cmd->add_option("--t", evolve.t, "Final time");
  evolve_cmd->add_option("--grid", evolve.grid, "Number of grid intervals");
  evolve_cmd->add_option("--oracle", evolve.oracle, "Also evaluate the toy Fock oracle with N steps");

  SchurArgs schur;
  auto* schur_cmd = app.add_subcommand("schur", "Screen the Schur-product criterion");
  schur_cmd->add_option("generator", schur.generator, "Generator JSON")->required();
  schur_cmd->add_option("--samples", schur.samples, "Random probes");
  schur_cmd->add_option("--n-max", schur.n_max, "Largest c-tuple length");

  TkArgs tk;
  auto* tk_cmd = app.add_subcommand("tk", "Yosida approximants and semigroup convergence");
  tk_cmd->add_option("generator", tk.generator, "Generator JSON")->required();
  tk_cmd->add_option("--n-list", tk.n_list, "Increasing Yosida indices")->delimiter(',');
  tk_cmd->add_option("--T", tk.horizon, "Time horizon");
  tk_cmd->add_option("--grid", tk.grid, "Grid points in (0, T]");

  CoordsArgs coords;
  auto* coords_cmd = app.add_subcommand("coords", "Semigroup-generator coordinates of a generator");
  coords_cmd->add_option("generator", coords.generator, "Generator JSON")->required();

  DualArgs dual;
  auto* dual_cmd = app.add_subcommand("dual", "Dual generator and the adjoint-semigroup check");
  dual_cmd->add_option("generator", dual.generator, "Generator JSON")->required();
  dual_cmd->add_option("--probes", dual.probes, "Random (c, d, t) probes");

  OracleNormArgs onorm;
  auto* onorm_cmd = app.add_subcommand("oracle-norm", "Norm of the toy Fock state V_N (v x e(g))");
  onorm_cmd->add_option("generator", onorm.generator, "Generator JSON")->required();
  onorm_cmd->add_option("--v", onorm.v, "h-vector [[re,im],...] (default e_0)");
  onorm_cmd->add_option("--g", onorm.g_path, "Step function JSON (default 0)");
  onorm_cmd->add_option("--t", onorm.t, "Final time");
  onorm_cmd->add_option("--N", onorm.steps, "Number of slots");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kIoOrParse;
  }

  Emitter emit(config, out, err);
  try {
    if (*build_cmd) return cmd_build(build, config, emit);
    if (*check_cmd) return cmd_check(check, config, emit);
    if (*evolve_cmd) return cmd_evolve(evolve, config, emit);
    if (*schur_cmd) return cmd_schur(schur, config, emit);
    if (*tk_cmd) return cmd_tk(tk, config, emit);
    if (*coords_cmd) return cmd_coords(coords, config, emit);
    if (*dual_cmd) return cmd_dual(dual, config, emit);
    if (*onorm_cmd) return cmd_oracle_norm(onorm, config, emit);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kIoOrParse;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  }
  return kIoOrParse;
}

}  // namespace qsc::cli
