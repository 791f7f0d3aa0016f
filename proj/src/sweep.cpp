#include "guardian/sweep.hpp"

#include <cmath>
#include <limits>

namespace guardian {

namespace {

constexpr double kOracleTouchTol = 1e-6;
constexpr int kMaxBisections = 400;

double abscissa(const ParamFamily& family, double theta) { return spectrum(family.at(theta)).max_real(); }

void attach_oracle(const ParamFamily& family, double tol, Crossing& c) {
  c.oracle_max_real = abscissa(family, c.theta);
  c.oracle_max_real_lo = abscissa(family, c.theta - tol);
  c.oracle_max_real_hi = abscissa(family, c.theta + tol);
  c.oracle_confirms = c.oracle_max_real_lo * c.oracle_max_real_hi <= 0.0 ||
                      std::abs(c.oracle_max_real) <= kOracleTouchTol;
}

double trace_of_solve(const LuDecomposition& lu, const Matrix& rhs) {
  const Matrix x = lu.solve(rhs);
  return x.trace();
}

// d/dtheta log|f(theta)|; nullopt when A or rho(A) has an exactly zero pivot.
std::optional<double> log_derivative(const ParamFamily& family, GuardianMapKind kind, double theta) {
  const Matrix a = family.at(theta);
  const Matrix da = family.derivative(theta);
  const LuDecomposition lu_a(a);
  const LuDecomposition lu_rho(apply_rho(kind, a));
  if (lu_a.singular() || lu_rho.singular()) return std::nullopt;
  // rho is linear, so d/dtheta rho(A(theta)) = rho(A'(theta)).
  return trace_of_solve(lu_a, da) + trace_of_solve(lu_rho, apply_rho(kind, da));
}

}  // namespace

ParamFamily::ParamFamily(Matrix base, Matrix dir1, std::optional<Matrix> dir2)
    : base_(std::move(base)), dir1_(std::move(dir1)), dir2_(std::move(dir2)) {
  auto same = [&](const Matrix& m) { return m.is_square() && m.rows() == base_.rows(); };
  if (!base_.is_square() || !same(dir1_) || (dir2_ && !same(*dir2_))) {
    throw DimensionError("ParamFamily: base and directions must be square of equal size");
  }
}

Matrix ParamFamily::at(double theta) const {
  Matrix a = base_ + theta * dir1_;
  if (dir2_) a += (theta * theta) * *dir2_;
  return a;
}

Matrix ParamFamily::derivative(double theta) const {
  Matrix d = dir1_;
  if (dir2_) d += (2.0 * theta) * *dir2_;
  return d;
}

std::string to_string(CrossingType t) {
  switch (t) {
    case CrossingType::SignChange: return "sign_change";
    case CrossingType::GridZero: return "grid_zero";
    case CrossingType::Touch: return "touch";
  }
  return "unknown";
}

GuardianValue family_guardian(const ParamFamily& family, GuardianMapKind kind, double theta) {
  return guardian_determinants(kind, family.at(theta)).f;
}

Crossing refine_crossing(const ParamFamily& family, GuardianMapKind kind, double lo, double hi, double tol,
                         double oracle_tol) {
  if (!(tol > 0.0) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw DimensionError("refine_crossing: need finite bracket and positive tolerance");
  }
  if (lo > hi) std::swap(lo, hi);
  const GuardianValue f_lo = family_guardian(family, kind, lo);
  const GuardianValue f_hi = family_guardian(family, kind, hi);
  Crossing c;
  c.type = CrossingType::SignChange;
  c.refined = true;
  auto finish = [&](double theta, double a, double b) {
    c.theta = theta;
    c.lo = a;
    c.hi = b;
    attach_oracle(family, std::max(tol, oracle_tol), c);
    return c;
  };
  if (f_lo.is_zero()) return finish(lo, lo, lo);
  if (f_hi.is_zero()) return finish(hi, hi, hi);
  if (f_lo.sign == f_hi.sign) {
    throw BracketError("refine_crossing: f has the same sign at both ends of [" + std::to_string(lo) + ", " +
                       std::to_string(hi) + "]");
  }
  int sign_lo = f_lo.sign;
  for (int it = 0; it < kMaxBisections && hi - lo > tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const GuardianValue f_mid = family_guardian(family, kind, mid);
    if (f_mid.is_zero()) return finish(mid, mid, mid);
    if (f_mid.sign == sign_lo) {
      lo = mid;
      sign_lo = f_mid.sign;
    } else {
      hi = mid;
    }
  }
  return finish(0.5 * (lo + hi), lo, hi);
}

std::optional<Crossing> refine_touch(const ParamFamily& family, GuardianMapKind kind, double lo, double hi,
                                     double tol, double oracle_tol) {
  if (lo > hi) std::swap(lo, hi);
  Crossing c;
  c.type = CrossingType::Touch;
  c.refined = true;
  auto finish = [&](double theta, double a, double b) {
    c.theta = theta;
    c.lo = a;
    c.hi = b;
    attach_oracle(family, std::max(tol, oracle_tol), c);
    return c;
  };
  const auto d_lo = log_derivative(family, kind, lo);
  const auto d_hi = log_derivative(family, kind, hi);
  if (!d_lo) return finish(lo, lo, lo);
  if (!d_hi) return finish(hi, hi, hi);
  // |f| decreasing at lo and increasing at hi brackets the minimum.
  if (!(*d_lo < 0.0 && *d_hi > 0.0)) return std::nullopt;
  // Bisect to machine resolution: the zero threshold only fires very close to an even-order root.
  for (int it = 0; it < kMaxBisections; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (family_guardian(family, kind, mid).is_zero()) return finish(mid, mid, mid);
    const auto d_mid = log_derivative(family, kind, mid);
    if (!d_mid) return finish(mid, mid, mid);
    if (*d_mid < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  for (double theta : {lo, hi, 0.5 * (lo + hi)}) {
    if (family_guardian(family, kind, theta).is_zero()) return finish(theta, lo, hi);
  }
  return std::nullopt;
}

SweepResult sweep(const ParamFamily& family, GuardianMapKind kind, double theta_min, double theta_max,
                  int samples, const SweepOptions& options) {
  if (samples < 2) throw DimensionError("sweep: need at least 2 samples");
  if (!(theta_min < theta_max) || !std::isfinite(theta_min) || !std::isfinite(theta_max)) {
    throw DimensionError("sweep: need finite theta_min < theta_max");
  }
  if (options.refine && !(options.tol > 0.0)) throw DimensionError("sweep: tolerance must be positive");

  SweepResult result;
  result.kind = kind;
  result.samples.reserve(samples);
  const double span = theta_max - theta_min;
  for (int i = 0; i < samples; ++i) {
    const double theta = i == samples - 1 ? theta_max : theta_min + span * i / (samples - 1);
    result.samples.push_back({theta, guardian_evaluate(kind, family.at(theta), options.oracle_tol)});
  }

  const auto& s = result.samples;
  auto f = [&](std::size_t i) -> const GuardianValue& { return s[i].report.f_value; };
  const double oracle_width = std::max(options.tol, options.oracle_tol);

  for (std::size_t i = 0; i < s.size();) {
    if (f(i).is_zero()) {
      std::size_t j = i;
      while (j + 1 < s.size() && f(j + 1).is_zero()) ++j;
      Crossing c;
      c.type = CrossingType::GridZero;
      c.lo = s[i].theta;
      c.hi = s[j].theta;
      c.theta = i == j ? s[i].theta : 0.5 * (c.lo + c.hi);
      attach_oracle(family, oracle_width, c);
      result.crossings.push_back(c);
      i = j + 1;
      continue;
    }
    if (i + 1 < s.size() && !f(i + 1).is_zero() && f(i).sign != f(i + 1).sign) {
      if (options.refine) {
        result.crossings.push_back(
            refine_crossing(family, kind, s[i].theta, s[i + 1].theta, options.tol, options.oracle_tol));
      } else {
        Crossing c;
        c.type = CrossingType::SignChange;
        c.lo = s[i].theta;
        c.hi = s[i + 1].theta;
        c.theta = 0.5 * (c.lo + c.hi);
        attach_oracle(family, oracle_width, c);
        result.crossings.push_back(c);
      }
    } else if (i > 0 && i + 1 < s.size() && !f(i - 1).is_zero() && !f(i + 1).is_zero() &&
               f(i - 1).sign == f(i).sign && f(i + 1).sign == f(i).sign &&
               f(i).log_magnitude < f(i - 1).log_magnitude && f(i).log_magnitude < f(i + 1).log_magnitude) {
      std::optional<Crossing> touch;
      if (options.refine) {
        touch = refine_touch(family, kind, s[i - 1].theta, s[i + 1].theta, options.tol, options.oracle_tol);
      }
      if (touch) {
        result.crossings.push_back(*touch);
      } else {
        result.unconfirmed_touches.push_back(s[i].theta);
      }
    }
    ++i;
  }
  return result;
}

}  // namespace guardian
