// guardian: command-line front end for the compound / guardian-map library.
//
// Exit codes:
//   0  success (guardian: nonzero f on a stable matrix)
//   1  unreadable or malformed input file
//   2  dimension or parameter violation
//   3  guardian: f vanishes (stability boundary)
//   4  guardian: unstable matrix (f may still vanish)
//   5  verify: at least one property violated

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "guardian/bialternate.hpp"
#include "guardian/compound.hpp"
#include "guardian/io.hpp"
#include "guardian/kron.hpp"
#include "guardian/representations.hpp"
#include "guardian/schlaflian.hpp"
#include "guardian/sweep.hpp"
#include "guardian/verify.hpp"

namespace {

using namespace guardian;

enum ExitCode : int {
  kOk = 0,
  kBadInput = 1,
  kBadParameter = 2,
  kBoundary = 3,
  kUnstable = 4,
  kViolation = 5,
};

struct ComputeArgs {
  std::string map;
  std::size_t k = 0;
  std::size_t p = 0;
  std::string input;
  std::string output;
};

struct GuardianArgs {
  std::string map;
  std::string input;
  double tol = kDefaultOracleTol;
};

struct SweepArgs {
  std::string family;
  std::string map;
  double min = 0.0;
  double max = 0.0;
  int samples = 0;
  bool refine = false;
  double tol = 1e-8;
};

struct VerifyArgs {
  std::string suite;
  std::size_t n = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  std::string inject_fault;
};

GuardianMapKind require_kind(const std::string& name) {
  const auto kind = parse_map_kind(name);
  if (!kind) throw DimensionError("unknown map '" + name + "' (expected kron, add2, schlaflian2 or bialt)");
  return *kind;
}

void emit(const nlohmann::ordered_json& j, const std::string& output) {
  if (output.empty()) {
    std::cout << io::dump(j) << '\n';
    return;
  }
  std::ofstream out(output);
  if (!out) throw io::InputError("cannot write '" + output + "'");
  out << io::dump(j) << '\n';
}

int run_compute(const ComputeArgs& args) {
  const Matrix a = io::read_matrix(args.input);
  auto need = [&](std::size_t v, const char* flag) {
    if (v == 0) throw DimensionError(std::string("--map ") + args.map + " requires " + flag);
    return v;
  };
  Matrix result = [&]() -> Matrix {
    if (args.map == "kron") return kron_sum_self(a);
    if (args.map == "add2") return add_compound(a, 2);
    if (args.map == "addk") return add_compound(a, need(args.k, "--k"));
    if (args.map == "mult") return mult_compound(a, need(args.k, "--k"));
    if (args.map == "schlaflian") return lower_schlaflian(a, need(args.p, "--p"));
    if (args.map == "upper-schlaflian") return upper_schlaflian(a, need(args.p, "--p"));
    if (args.map == "bialt") return bialternate_sum_self(a);
    throw DimensionError("unknown map '" + args.map + "'");
  }();
  emit(io::to_json(result), args.output);
  return kOk;
}

int run_guardian(const GuardianArgs& args) {
  const auto kind = require_kind(args.map);
  const Matrix a = io::read_matrix(args.input);
  if (!(args.tol >= 0.0)) throw DimensionError("--tol must be nonnegative");
  const auto report = guardian_evaluate(kind, a, args.tol);
  emit(io::to_json(report), "");
  switch (report.verdict) {
    case GuardianVerdict::NonzeroStable: return kOk;
    case GuardianVerdict::ZeroBoundary: return kBoundary;
    case GuardianVerdict::NonzeroUnstable:
    case GuardianVerdict::ZeroUnstable: return kUnstable;
  }
  return kOk;
}

int run_sweep(const SweepArgs& args) {
  const auto kind = require_kind(args.map);
  const ParamFamily family = io::read_family(args.family);
  SweepOptions options;
  options.refine = args.refine;
  options.tol = args.tol;
  const auto result = sweep(family, kind, args.min, args.max, args.samples, options);
  emit(io::to_json(result), "");
  return kOk;
}

int run_verify(const VerifyArgs& args) {
  verify::SuiteOptions options;
  options.n = args.n;
  options.trials = args.trials;
  options.seed = args.seed;
  if (!args.inject_fault.empty()) options.inject_fault = args.inject_fault;
  const auto report = verify::run_suite(args.suite, options);
  emit(report.to_json(), "");
  if (!report.pass()) {
    for (const auto& p : report.properties) {
      for (const auto& f : p.failures) {
        std::cerr << "violation: " << f.property << " trial " << f.trial << " seed " << f.seed << " residual "
                  << f.residual << " > " << f.bound << '\n';
      }
    }
    return kViolation;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Compound matrices, guardian maps and Hurwitz-stability boundaries"};
  app.require_subcommand(1);

  ComputeArgs compute_args;
  auto* compute = app.add_subcommand("compute", "Build a structured matrix from an input matrix");
  compute->add_option("--map", compute_args.map, "kron | add2 | addk | mult | schlaflian | upper-schlaflian | bialt")
      ->required();
  compute->add_option("--k", compute_args.k, "Compound order for addk / mult");
  compute->add_option("--p", compute_args.p, "Order for schlaflian / upper-schlaflian");
  compute->add_option("--input", compute_args.input, "Matrix JSON or CSV file, '-' for stdin")->required();
  compute->add_option("--output", compute_args.output, "Write JSON here instead of stdout");

  GuardianArgs guardian_args;
  auto* guardian = app.add_subcommand("guardian", "Evaluate a guardian map on a matrix");
  guardian->add_option("--map", guardian_args.map, "kron | add2 | schlaflian2 | bialt")->required();
  guardian->add_option("--input", guardian_args.input, "Matrix JSON or CSV file, '-' for stdin")->required();
  guardian->add_option("--tol", guardian_args.tol, "Oracle tolerance on the spectral abscissa");

  SweepArgs sweep_args;
  auto* sweep_cmd = app.add_subcommand("sweep", "Locate stability-boundary crossings of A(theta)");
  sweep_cmd->add_option("--family", sweep_args.family, "Family JSON file")->required();
  sweep_cmd->add_option("--map", sweep_args.map, "kron | add2 | schlaflian2 | bialt")->required();
  sweep_cmd->add_option("--min", sweep_args.min, "Lower end of the theta range")->required();
  sweep_cmd->add_option("--max", sweep_args.max, "Upper end of the theta range")->required();
  sweep_cmd->add_option("--samples", sweep_args.samples, "Number of grid points")->required();
  sweep_cmd->add_flag("--refine", sweep_args.refine, "Refine crossings by bisection");
  sweep_cmd->add_option("--tol", sweep_args.tol, "Bisection tolerance on theta");

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Run a seeded randomized property suite");
  verify_cmd->add_option("--suite", verify_args.suite, "prop4 | cauchy-binet | brackets | ode | lemma1 | all")
      ->required();
  verify_cmd->add_option("--n", verify_args.n, "Matrix dimension")->required();
  verify_cmd->add_option("--trials", verify_args.trials, "Random instances per property")->required();
  verify_cmd->add_option("--seed", verify_args.seed, "Random seed")->required();
  verify_cmd->add_option("--inject-fault", verify_args.inject_fault,
                         "Negative control: offset residuals of the named property");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadParameter;
  }

  try {
    if (*compute) return run_compute(compute_args);
    if (*guardian) return run_guardian(guardian_args);
    if (*sweep_cmd) return run_sweep(sweep_args);
    if (*verify_cmd) return run_verify(verify_args);
  } catch (const io::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadParameter;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadParameter;
  }
  return kBadParameter;
}
