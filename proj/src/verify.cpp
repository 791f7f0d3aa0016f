#include "guardian/verify.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <stdexcept>

#include "guardian/bialternate.hpp"
#include "guardian/compound.hpp"
#include "guardian/io.hpp"
#include "guardian/kron.hpp"
#include "guardian/ode_checks.hpp"
#include "guardian/random.hpp"
#include "guardian/representations.hpp"
#include "guardian/schlaflian.hpp"

namespace guardian::verify {

using json = nlohmann::ordered_json;

namespace {

constexpr std::size_t kMaxFailuresPerProperty = 5;

// FNV-1a; keys each property's random stream by name.
std::uint64_t stream_id(const std::string& name) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : name) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

struct Measurement {
  double residual = 0.0;
  double scale = 1.0;
  json instance;
};

// Runs `trials` instances of one property; each trial draws from its own
// generator keyed by (seed, property name, trial) so any failure can be replayed alone.
class PropertyRunner {
 public:
  PropertyRunner(const SuiteOptions& options, std::vector<PropertyResult>& out)
      : options_(options), out_(out) {}

  void run(const std::string& name, double tolerance, const std::function<std::vector<Measurement>(Rng&)>& body) {
    PropertyResult result;
    result.name = name;
    result.tolerance = tolerance;
    const std::uint64_t stream = stream_id(name);
    const double fault = options_.inject_fault && *options_.inject_fault == name ? 1.0 : 0.0;
    for (int trial = 0; trial < options_.trials; ++trial) {
      Rng rng = make_rng(options_.seed, stream, static_cast<std::uint64_t>(trial));
      for (auto& m : body(rng)) {
        m.residual += fault;
        ++result.checks;
        result.max_residual = std::max(result.max_residual, m.residual);
        result.max_scaled = std::max(result.max_scaled, m.residual / m.scale);
        const double bound = tolerance * m.scale;
        if (!(m.residual <= bound) && result.failures.size() < kMaxFailuresPerProperty) {
          result.failures.push_back({name, trial, options_.seed, m.residual, bound, std::move(m.instance)});
        }
      }
    }
    out_.push_back(std::move(result));
  }

 private:
  const SuiteOptions& options_;
  std::vector<PropertyResult>& out_;
};

json matrices(std::initializer_list<std::pair<const char*, const Matrix*>> named) {
  json j = json::object();
  for (const auto& [key, m] : named) j[key] = io::to_json(*m);
  return j;
}

void require_n(const SuiteOptions& o, std::size_t min_n, const std::string& suite) {
  if (o.n < min_n) throw std::invalid_argument("suite '" + suite + "' needs --n >= " + std::to_string(min_n));
}

void prop4_suite(const SuiteOptions& o, std::vector<PropertyResult>& out) {
  require_n(o, 2, "prop4");
  PropertyRunner runner(o, out);
  const std::size_t n = o.n;
  runner.run("prop4-real", 1e-12, [n](Rng& rng) {
    const Matrix a = random_matrix(rng, n, n);
    return std::vector<Measurement>{{verify_prop4(a), 1.0, matrices({{"a", &a}})}};
  });
  runner.run("prop4-integer-exact", 0.0, [n](Rng& rng) {
    const Matrix a = random_integer_matrix(rng, n, n, -9, 9);
    return std::vector<Measurement>{{verify_prop4(a), 1.0, matrices({{"a", &a}})}};
  });
  runner.run("add2-explicit", 1e-12, [n](Rng& rng) {
    const Matrix a = random_matrix(rng, n, n);
    return std::vector<Measurement>{
        {max_abs_diff(add_compound2_explicit(a), add_compound(a, 2)), 1.0, matrices({{"a", &a}})}};
  });
}

void cauchy_binet_suite(const SuiteOptions& o, std::vector<PropertyResult>& out) {
  require_n(o, 1, "cauchy-binet");
  PropertyRunner runner(o, out);
  const std::size_t n = o.n;
  runner.run("cauchy-binet", 1e-10, [n](Rng& rng) {
    const std::size_t m = n + std::uniform_int_distribution<std::size_t>(0, 1)(rng);
    const std::size_t p = std::max<std::size_t>(1, n - std::uniform_int_distribution<std::size_t>(0, 1)(rng));
    const Matrix a = random_matrix(rng, n, m);
    const Matrix b = random_matrix(rng, m, p);
    std::vector<Measurement> ms;
    for (std::size_t k = 1; k <= std::min<std::size_t>({3, n, m, p}); ++k) {
      const double scale = std::max(1.0, mult_compound(a, k).norm1() * mult_compound(b, k).norm1());
      json inst = matrices({{"a", &a}, {"b", &b}});
      inst["k"] = k;
      ms.push_back({cauchy_binet_residual(a, b, k), scale, std::move(inst)});
    }
    return ms;
  });
}

void brackets_suite(const SuiteOptions& o, std::vector<PropertyResult>& out) {
  require_n(o, 2, "brackets");
  PropertyRunner runner(o, out);
  const std::size_t n = o.n;
  for (const auto kind : kAllGuardianMapKinds) {
    runner.run("bracket-" + to_string(kind), 1e-10, [n, kind](Rng& rng) {
      const Matrix a = random_matrix(rng, n, n);
      const Matrix b = random_matrix(rng, n, n);
      const double scale = std::max(1.0, apply_rho(kind, a).norm1() * apply_rho(kind, b).norm1());
      return std::vector<Measurement>{
          {bracket_preservation_residual(kind, a, b), scale, matrices({{"a", &a}, {"b", &b}})}};
    });
    runner.run("contragradient-" + to_string(kind), 1e-10, [n, kind](Rng& rng) {
      const Matrix a = random_matrix(rng, n, n);
      const Matrix b = random_matrix(rng, n, n);
      const double scale = std::max(1.0, apply_rho(kind, a).norm1() * apply_rho(kind, b).norm1());
      return std::vector<Measurement>{
          {contragradient_bracket_residual(kind, a, b), scale, matrices({{"a", &a}, {"b", &b}})}};
    });
  }
  for (const std::size_t p : {2u, 3u}) {
    runner.run("upper-schlaflian-multiplicative-p" + std::to_string(p), 1e-9, [n, p](Rng& rng) {
      const Matrix a = random_matrix(rng, n, n);
      const Matrix b = random_matrix(rng, n, n);
      const Matrix ua = upper_schlaflian(a, p);
      const Matrix ub = upper_schlaflian(b, p);
      const double scale = std::max(1.0, ua.norm1() * ub.norm1());
      return std::vector<Measurement>{
          {max_abs_diff(upper_schlaflian(matmul(a, b), p), matmul(ua, ub)), scale, matrices({{"a", &a}, {"b", &b}})}};
    });
  }
  runner.run("kron-group", 1e-10, [n](Rng& rng) {
    const Matrix g = random_well_conditioned(rng, n);
    const Matrix h = random_well_conditioned(rng, n);
    const Matrix rg = kron_product(g, g);
    const Matrix rh = kron_product(h, h);
    const double scale = std::max(1.0, rg.norm1() * rh.norm1());
    return std::vector<Measurement>{
        {max_abs_diff(kron_product(matmul(g, h), matmul(g, h)), matmul(rg, rh)), scale,
         matrices({{"g", &g}, {"h", &h}})}};
  });
}

void ode_suite(const SuiteOptions& o, std::vector<PropertyResult>& out) {
  require_n(o, 2, "ode");
  PropertyRunner runner(o, out);
  const std::size_t n = o.n;
  constexpr std::array kTimes{0.3, 0.7, 1.5};
  runner.run("prop6-symmetric-flow", 1e-7, [n, kTimes](Rng& rng) {
    const Matrix a = random_matrix(rng, n, n);
    const Matrix x0 = random_symmetric(rng, n);
    std::vector<Measurement> ms;
    for (double t : kTimes) {
      json inst = matrices({{"a", &a}, {"x0", &x0}});
      inst["t"] = t;
      ms.push_back({check_prop6(a, x0, t), 1.0, std::move(inst)});
    }
    return ms;
  });
  runner.run("prop7-skew-flow", 1e-7, [n, kTimes](Rng& rng) {
    const Matrix a = random_matrix(rng, n, n);
    const Matrix x0 = random_skew(rng, n);
    std::vector<Measurement> ms;
    for (double t : kTimes) {
      json inst = matrices({{"a", &a}, {"x0", &x0}});
      inst["t"] = t;
      ms.push_back({check_prop7(a, x0, t), 1.0, std::move(inst)});
    }
    return ms;
  });
  runner.run("rk4-preserves-symmetry", 1e-9, [n](Rng& rng) {
    const Matrix a = random_matrix(rng, n, n);
    const Matrix x0 = random_symmetric(rng, n);
    const Matrix x = matrix_ode_rk4(a, x0, 2.0, kDefaultRk4Steps);
    return std::vector<Measurement>{{asymmetry(x), std::max(1.0, x.max_abs()), matrices({{"a", &a}, {"x0", &x0}})}};
  });
  runner.run("rk4-preserves-skew", 1e-9, [n](Rng& rng) {
    const Matrix a = random_matrix(rng, n, n);
    const Matrix x0 = random_skew(rng, n);
    const Matrix x = matrix_ode_rk4(a, x0, 2.0, kDefaultRk4Steps);
    return std::vector<Measurement>{
        {skew_violation(x), std::max(1.0, x.max_abs()), matrices({{"a", &a}, {"x0", &x0}})}};
  });
  runner.run("vec-dynamics", 1e-10, [n](Rng& rng) {
    const Matrix a = random_matrix(rng, n, n);
    const Matrix x = random_matrix(rng, n, n);
    const Matrix lhs = vec_rows(matmul(a, x) + matmul(x, a.transpose()));
    const Matrix rhs = matmul(kron_sum_self(a), vec_rows(x));
    return std::vector<Measurement>{
        {max_abs_diff(lhs, rhs), std::max(1.0, a.norm1() * x.max_abs()), matrices({{"a", &a}, {"x", &x}})}};
  });
}

void lemma1_suite(const SuiteOptions& o, std::vector<PropertyResult>& out) {
  require_n(o, 2, "lemma1");
  PropertyRunner runner(o, out);
  const std::size_t n = o.n;
  runner.run("lemma1", 1e-11, [n](Rng& rng) {
    const Matrix a = random_matrix(rng, n, n);
    std::vector<Measurement> ms;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        json inst = matrices({{"a", &a}});
        inst["i"] = i + 1;
        inst["j"] = j + 1;
        ms.push_back({check_lemma1(a, i, j), 1.0, std::move(inst)});
      }
    return ms;
  });
}

void dispatch(const std::string& suite, const SuiteOptions& o, std::vector<PropertyResult>& out) {
  if (suite == "prop4") return prop4_suite(o, out);
  if (suite == "cauchy-binet") return cauchy_binet_suite(o, out);
  if (suite == "brackets") return brackets_suite(o, out);
  if (suite == "ode") return ode_suite(o, out);
  if (suite == "lemma1") return lemma1_suite(o, out);
  throw std::invalid_argument("unknown suite '" + suite + "'");
}

}  // namespace

bool SuiteReport::pass() const {
  return std::all_of(properties.begin(), properties.end(), [](const auto& p) { return p.pass(); });
}

json SuiteReport::to_json() const {
  json props = json::array();
  json failures = json::array();
  for (const auto& p : properties) {
    props.push_back(json{{"name", p.name},
                         {"checks", p.checks},
                         {"tolerance", p.tolerance},
                         {"max_residual", p.max_residual},
                         {"max_scaled_residual", p.max_scaled},
                         {"pass", p.pass()}});
    for (const auto& f : p.failures) {
      failures.push_back(json{{"property", f.property},
                              {"trial", f.trial},
                              {"seed", f.seed},
                              {"residual", f.residual},
                              {"bound", f.bound},
                              {"instance", f.instance}});
    }
  }
  return json{{"suite", suite},       {"n", options.n},     {"trials", options.trials},
              {"seed", options.seed}, {"pass", pass()},     {"properties", std::move(props)},
              {"failures", std::move(failures)}};
}

SuiteReport run_suite(const std::string& suite, const SuiteOptions& options) {
  if (options.trials < 1) throw std::invalid_argument("trials must be positive");
  SuiteReport report;
  report.suite = suite;
  report.options = options;
  if (suite == "all") {
    for (const auto& name : kSuiteNames) dispatch(name, options, report.properties);
  } else {
    dispatch(suite, options, report.properties);
  }
  return report;
}

}  // namespace guardian::verify
