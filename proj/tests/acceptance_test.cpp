// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "guardian/bialternate.hpp"
#include "guardian/compound.hpp"
#include "guardian/kron.hpp"
#include "guardian/ode_checks.hpp"
#include "guardian/random.hpp"
#include "guardian/representations.hpp"
#include "guardian/schlaflian.hpp"
#include "guardian/sweep.hpp"
#include "oracles.hpp"
#include "process.hpp"

namespace {

using namespace guardian;
using cd = std::complex<double>;

constexpr std::uint64_t kSeed = 20240601;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Tracks the worst residual/bound ratio over many checks.
class Worst {
 public:
  void add(double residual, double bound) {
    ++count_;
    const double ratio = bound > 0.0 ? residual / bound : (residual == 0.0 ? 0.0 : INFINITY);
    if (!(ratio <= 1.0)) ++failures_;
    if (ratio > worst_ratio_ || count_ == 1) {
      worst_ratio_ = ratio;
      worst_residual_ = residual;
    }
  }
  [[nodiscard]] bool pass() const { return failures_ == 0 && count_ > 0; }
  [[nodiscard]] std::string summary() const {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%d checks, %d failures, worst residual %.3g (%.3g of bound)", count_, failures_,
                  worst_residual_, worst_ratio_);
    return buf;
  }

 private:
  int count_ = 0;
  int failures_ = 0;
  double worst_ratio_ = 0.0;
  double worst_residual_ = 0.0;
};

Outcome from(const Worst& w) { return {w.pass(), w.summary()}; }

Outcome criterion1() {
  Worst real;
  int integer_checks = 0;
  int integer_mismatches = 0;
  for (std::size_t n = 2; n <= 7; ++n) {
    for (int trial = 0; trial < 100; ++trial) {
      auto rng = make_rng(kSeed, 1, n * 1000 + trial);
      real.add(verify_prop4(random_matrix(rng, n, n)), 1e-12);
      const Matrix z = random_integer_matrix(rng, n, n, -9, 9);
      ++integer_checks;
      if (!(bialternate_sum_self(z) == add_compound(z, 2))) ++integer_mismatches;
    }
  }
  std::ostringstream os;
  os << real.summary() << "; integer matrices " << integer_checks - integer_mismatches << "/" << integer_checks
     << " exact";
  return {real.pass() && integer_mismatches == 0, os.str()};
}

std::vector<cd> monomial_values(const std::vector<cd>& eig, std::size_t p, bool product) {
  std::vector<cd> out;
  const MonomialBasis basis(eig.size(), p);
  for (const auto& e : basis.exponents()) {
    cd v = product ? 1.0 : 0.0;
    for (std::size_t i = 0; i < eig.size(); ++i) {
      if (product) {
        for (unsigned r = 0; r < e[i]; ++r) v *= eig[i];
      } else {
        v += static_cast<double>(e[i]) * eig[i];
      }
    }
    out.push_back(v);
  }
  return out;
}

Outcome criterion2() {
  Worst w;
  for (std::size_t n = 2; n <= 6; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      auto rng = make_rng(kSeed, 2, n * 1000 + trial);
      const Matrix a = random_matrix(rng, n, n);
      const double tol = 1e-7 * (1.0 + a.norm1());
      const auto eig = spectrum(a).eigenvalues;
      auto check = [&](const Matrix& m, const std::vector<cd>& expected) {
        w.add(multiset_distance(spectrum(m).eigenvalues, expected), tol);
      };
      for (std::size_t k = 1; k <= std::min<std::size_t>(3, n); ++k) {
        check(mult_compound(a, k), oracle::subset_combinations(eig, k, true));
        check(add_compound(a, k), oracle::subset_combinations(eig, k, false));
      }
      std::vector<cd> sums;
      for (const auto& x : eig)
        for (const auto& y : eig) sums.push_back(x + y);
      check(kron_sum_self(a), sums);
      check(upper_schlaflian(a, 2), monomial_values(eig, 2, true));
      check(lower_schlaflian(a, 2), monomial_values(eig, 2, false));
    }
  }
  return from(w);
}

Outcome criterion3() {
  Worst w;
  for (int trial = 0; trial < 200; ++trial) {
    auto rng = make_rng(kSeed, 3, trial);
    std::uniform_int_distribution<std::size_t> dim(1, 6);
    const std::size_t m = dim(rng), p = dim(rng), q = dim(rng);
    const std::size_t kmax = std::min({m, p, q, std::size_t{3}});
    const Matrix a = random_matrix(rng, m, p);
    const Matrix b = random_matrix(rng, p, q);
    for (std::size_t k = 1; k <= kmax; ++k) {
      const double scale = std::max(1.0, mult_compound(a, k).norm1() * mult_compound(b, k).norm1());
      w.add(cauchy_binet_residual(a, b, k), 1e-10 * scale);
    }
  }
  return from(w);
}

Outcome criterion4() {
  Worst w;
  for (auto kind : kAllGuardianMapKinds) {
    for (int trial = 0; trial < 50; ++trial) {
      auto rng = make_rng(kSeed, 4, static_cast<std::uint64_t>(kind) * 1000 + trial);
      const std::size_t n = 2 + static_cast<std::size_t>(trial % 4);
      const Matrix a = random_matrix(rng, n, n);
      const Matrix b = random_matrix(rng, n, n);
      const double scale = std::max(1.0, apply_rho(kind, a).max_abs() * apply_rho(kind, b).max_abs());
      w.add(bracket_preservation_residual(kind, a, b), 1e-10 * scale);
      w.add(contragradient_bracket_residual(kind, a, b), 1e-10 * scale);
    }
  }
  return from(w);
}

Outcome criterion5() {
  Worst w;
  for (std::size_t p : {2u, 3u}) {
    for (int trial = 0; trial < 50; ++trial) {
      auto rng = make_rng(kSeed, 5, p * 1000 + trial);
      const Matrix a = random_matrix(rng, 3, 3);
      const Matrix b = random_matrix(rng, 3, 3);
      const Matrix ua = upper_schlaflian(a, p);
      const Matrix ub = upper_schlaflian(b, p);
      const double scale = std::max(1.0, ua.max_abs() * ub.max_abs());
      w.add(max_abs_diff(upper_schlaflian(matmul(a, b), p), matmul(ua, ub)), 1e-9 * scale);
    }
  }
  return from(w);
}

Outcome criterion6() {
  Worst flows;
  Worst structure;
  Worst lemma;
  for (std::size_t n = 2; n <= 5; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      auto rng = make_rng(kSeed, 6, n * 1000 + trial);
      const Matrix a = random_matrix(rng, n, n);
      const Matrix xs = random_symmetric(rng, n);
      const Matrix xk = random_skew(rng, n);
      for (double t : {0.3, 0.7, 1.5}) {
        flows.add(check_prop6(a, xs, t), 1e-7);
        flows.add(check_prop7(a, xk, t), 1e-7);
      }
      const Matrix ys = matrix_ode_rk4(a, xs, 2.0, kDefaultRk4Steps);
      const Matrix yk = matrix_ode_rk4(a, xk, 2.0, kDefaultRk4Steps);
      structure.add(asymmetry(ys), 1e-9 * std::max(1.0, ys.max_abs()));
      structure.add(skew_violation(yk), 1e-9 * std::max(1.0, yk.max_abs()));
    }
  }
  for (std::size_t n = 2; n <= 6; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      auto rng = make_rng(kSeed, 7, n * 1000 + trial);
      const Matrix a = random_matrix(rng, n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) lemma.add(check_lemma1(a, i, j), 1e-11);
    }
  }
  return {flows.pass() && structure.pass() && lemma.pass(),
          "flows: " + flows.summary() + "; rk4 structure: " + structure.summary() + "; basis identity: " +
              lemma.summary()};
}

Outcome criterion7() {
  int fn = 0;
  int fp = 0;
  int checks = 0;
  double largest_boundary_pivot = 0.0;
  double smallest_stable_pivot = INFINITY;
  for (int idx = 0; idx < 200; ++idx) {
    auto rng = make_rng(kSeed, 8, idx);
    const std::size_t n = 2 + static_cast<std::size_t>(idx % 6);
    const bool on_boundary = idx >= 100;
    Matrix a = Matrix::identity(1);
    if (on_boundary) {
      std::uniform_real_distribution<double> beta(0.2, 2.0);
      a = random_boundary(rng, n, beta(rng));
    } else {
      a = random_hurwitz_nonnormal(rng, n, 0.1);
    }
    for (auto kind : kAllGuardianMapKinds) {
      ++checks;
      const bool says_boundary = guardian_evaluate(kind, a).verdict == GuardianVerdict::ZeroBoundary;
      if (on_boundary && !says_boundary) ++fn;
      if (!on_boundary && says_boundary) ++fp;
      // Smallest relative pivot of rho(a) and a, compared with the zero threshold.
      const Matrix rho = apply_rho(kind, a);
      const double scale = std::max(a.max_abs(), rho.max_abs());
      const double pivot =
          std::min(LuDecomposition(rho).min_pivot(), LuDecomposition(a).min_pivot()) / scale;
      if (on_boundary) {
        largest_boundary_pivot = std::max(largest_boundary_pivot, pivot);
      } else {
        smallest_stable_pivot = std::min(smallest_stable_pivot, pivot);
      }
    }
  }
  std::ostringstream os;
  os << checks << " evaluations over 200 matrices x 4 maps; false negatives " << fn << ", false positives " << fp
     << "; relative pivots: boundary max " << largest_boundary_pivot << ", stable min " << smallest_stable_pivot
     << " (threshold " << kZeroPivotRelTol << ")";
  return {fn == 0 && fp == 0, os.str()};
}

Outcome criterion8() {
  bool ok = true;
  std::ostringstream os;
  for (double shift : {0.0, 0.3}) {
    const ParamFamily family(Matrix{{-shift, 1}, {-1, -shift}}, Matrix::identity(2));
    double lo = INFINITY;
    double hi = -INFINITY;
    double worst = 0.0;
    for (int samples : {20, 21, 57}) {
      for (auto kind : kAllGuardianMapKinds) {
        const auto r = sweep(family, kind, -1.0, 1.0, samples, {.refine = true, .tol = 1e-8});
        if (r.crossings.size() != 1 || !r.unconfirmed_touches.empty()) {
          ok = false;
          os << to_string(kind) << " samples=" << samples << " found " << r.crossings.size() << " crossings; ";
          continue;
        }
        const auto& c = r.crossings[0];
        if (!c.oracle_confirms || (c.type != CrossingType::GridZero && !c.refined)) ok = false;
        worst = std::max(worst, std::abs(c.theta - shift));
        lo = std::min(lo, c.theta);
        hi = std::max(hi, c.theta);
      }
    }
    if (worst > 1e-8 || hi - lo > 2e-8) ok = false;
    char buf[128];
    std::snprintf(buf, sizeof buf, "root %.1f: max |theta*-root| %.2g, spread across maps %.2g; ", shift, worst,
                  hi - lo);
    os << buf;
  }
  return {ok, os.str()};
}

Outcome criterion9() {
  bool ok = true;
  std::ostringstream os;
  os << "ratios";
  for (int trial = 0; trial < 5; ++trial) {
    auto rng = make_rng(kSeed, 9, trial);
    const Matrix a = random_matrix(rng, 3, 3);
    const Matrix x0 = random_matrix(rng, 3, 3);
    const Matrix exact = matrix_ode_closed_form(a, x0, 1.0);
    const double e1 = max_abs_diff(matrix_ode_rk4(a, x0, 1.0, 20), exact);
    const double e2 = max_abs_diff(matrix_ode_rk4(a, x0, 1.0, 40), exact);
    const double ratio = e1 / e2;
    if (!(ratio >= 12.0 && ratio <= 20.0)) ok = false;
    char buf[32];
    std::snprintf(buf, sizeof buf, " %.2f", ratio);
    os << buf;
  }
  os << " (steps 20 vs 40)";
  return {ok, os.str()};
}

Outcome criterion10() {
  const std::string args = "verify --suite all --n 4 --trials 20 --seed 1";
  const auto a = testing::run_cli(args);
  const auto b = testing::run_cli(args);
  std::ostringstream os;
  os << "exit codes " << a.exit_code << "/" << b.exit_code << ", " << a.out.size() << " bytes, "
     << (a.out == b.out ? "identical" : "different");
  return {a.exit_code == 0 && b.exit_code == 0 && !a.out.empty() && a.out == b.out, os.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"AC1 bialternate sum equals second additive compound", criterion1},
      {"AC2 spectral properties of compounds, Kronecker sum and Schlaflians", criterion2},
      {"AC3 Cauchy-Binet for multiplicative compounds", criterion3},
      {"AC4 bracket preservation, including contragradients", criterion4},
      {"AC5 upper Schlaflian multiplicativity", criterion5},
      {"AC6 symmetric/skew flow reductions and basis identity", criterion6},
      {"AC7 guardian boundary detection on constructed matrices", criterion7},
      {"AC8 sweep crossings agree across maps", criterion8},
      {"AC9 RK4 fourth-order convergence", criterion9},
      {"AC10 CLI determinism", criterion10},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s  %s: %s [%.2fs]\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str(), secs);
    if (!o.pass) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
