#include "finortho/quadrature.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <string>

namespace finortho {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// x = exp(pi/2 sinh t) stays inside [1e-300, 1e300] for |t| below this.
constexpr double kHalfLineTMax = 6.77;
// exp(-2|u|) with u = pi/2 sinh t stays representable for |t| below this.
constexpr double kIntervalTMax = 6.1;

// Running signed sum of exp(log) terms, rescaled whenever a larger term shows up.
struct ScaledSum {
  double log_scale = kNegInf;
  double sum = 0.0;
  double abs = 0.0;

  void add(const LogScaled& v) {
    if (v.sign == 0 || !std::isfinite(v.log_abs)) return;
    if (v.log_abs > log_scale) {
      const double f = log_scale == kNegInf ? 0.0 : std::exp(log_scale - v.log_abs);
      sum *= f;
      abs *= f;
      log_scale = v.log_abs;
    }
    const double term = std::exp(v.log_abs - log_scale);
    sum += v.sign * term;
    abs += term;
  }
};

// A node contributes out[i] (already multiplied by the Jacobian) for each integrand.
using NodeFn = std::function<void(double t, std::vector<LogScaled>& out)>;

std::vector<QuadResult> run_levels(std::size_t count, double t_max, const NodeFn& node, const QuadOptions& opt) {
  if (opt.max_level < opt.min_level || opt.min_level < 1)
    throw ParameterError("quadrature levels must satisfy 1 <= min_level <= max_level");
  std::vector<ScaledSum> acc(count);
  std::vector<LogScaled> buf(count);
  std::vector<double> prev_value(count, 0.0), prev_scale(count, kNegInf);
  std::vector<QuadResult> results(count);

  auto visit = [&](double t) {
    std::fill(buf.begin(), buf.end(), LogScaled::zero());
    node(t, buf);
    for (std::size_t i = 0; i < count; ++i) acc[i].add(buf[i]);
  };

  const long k_max = static_cast<long>(std::floor(t_max));
  for (long k = -k_max; k <= k_max; ++k) visit(static_cast<double>(k));
  for (std::size_t i = 0; i < count; ++i) {
    prev_value[i] = acc[i].sum;
    prev_scale[i] = acc[i].log_scale;
  }

  for (int level = 1; level <= opt.max_level; ++level) {
    const double h = std::ldexp(1.0, -level);
    const long steps = static_cast<long>(std::floor(t_max / h));
    for (long k = 1; k <= steps; k += 2) {
      visit(k * h);
      visit(-k * h);
    }
    if (level < opt.min_level) {
      for (std::size_t i = 0; i < count; ++i) {
        prev_value[i] = acc[i].sum * h;
        prev_scale[i] = acc[i].log_scale;
      }
      continue;
    }
    std::vector<double> diffs(count, 0.0);
    for (std::size_t i = 0; i < count; ++i) {
      QuadResult& r = results[i];
      r.level = level;
      if (acc[i].log_scale == kNegInf) {
        r = QuadResult{};
        r.level = level;
        prev_scale[i] = kNegInf;
        continue;
      }
      r.log_scale = acc[i].log_scale;
      r.value = acc[i].sum * h;
      r.l1 = acc[i].abs * h;
      const double previous = prev_scale[i] == kNegInf ? 0.0 : prev_value[i] * std::exp(prev_scale[i] - r.log_scale);
      diffs[i] = std::fabs(r.value - previous);
      r.error = std::max(diffs[i], 10.0 * kEps * r.l1);
      prev_value[i] = r.value;
      prev_scale[i] = r.log_scale;
    }
    bool all_done = true;
    for (std::size_t i = 0; i < count && all_done; ++i) {
      const QuadResult& r = results[i];
      if (diffs[i] <= opt.tol * r.l1) continue;
      if (opt.reference) {
        const LogScaled ref = opt.reference(i, results);
        if (ref.sign != 0 && diffs[i] <= opt.tol * std::exp(ref.log_abs - r.log_scale)) continue;
      }
      all_done = false;
    }
    if (all_done) return results;
  }
  throw ConvergenceError("quadrature did not converge to tol " + std::to_string(opt.tol) + " by level " +
                         std::to_string(opt.max_level));
}

QuadResult unscale(QuadResult r) {
  if (r.log_scale != 0.0 && std::fabs(r.log_scale) < 690.0) {
    const double f = std::exp(r.log_scale);
    r.value *= f;
    r.error *= f;
    r.l1 *= f;
    r.log_scale = 0.0;
  }
  return r;
}

LogScaled beta_scaled(const Rational& x, const Rational& y) {
  return gamma_scaled(x) * gamma_scaled(y) / gamma_scaled(x + y);
}

}  // namespace

int default_max_quad_level() {
  if (const char* env = std::getenv("FINORTHO_MAX_QUAD_LEVEL")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 4 && v <= 20) return static_cast<int>(v);
  }
  return 12;
}

LogScaled QuadResult::scaled_value() const {
  LogScaled v = LogScaled::from_double(value);
  if (v.sign != 0) v.log_abs += log_scale;
  return v;
}

double QuadResult::relative_error() const {
  if (value != 0.0) return error / std::fabs(value);
  return l1 == 0.0 ? 0.0 : error / l1;
}

std::vector<QuadResult> integrate_halfline_batch(std::size_t count, const BatchFn& eval, const QuadOptions& opt) {
  std::vector<LogScaled> vals(count);
  auto node = [&](double t, std::vector<LogScaled>& out) {
    const double u = kHalfPi * std::sinh(t);
    const double x = std::exp(u);
    if (x == 0.0 || !std::isfinite(x)) return;
    const double log_jac = u + std::log(kHalfPi * std::cosh(t));
    std::fill(vals.begin(), vals.end(), LogScaled::zero());
    eval(x, vals);
    for (std::size_t i = 0; i < count; ++i) {
      out[i] = vals[i];
      if (out[i].sign != 0) out[i].log_abs += log_jac;
    }
  };
  return run_levels(count, kHalfLineTMax, node, opt);
}

QuadResult integrate_halfline(const RealFn& f, const QuadOptions& opt) {
  auto eval = [&](double x, std::vector<LogScaled>& out) { out[0] = LogScaled::from_double(f(x)); };
  return unscale(integrate_halfline_batch(1, eval, opt)[0]);
}

QuadResult integrate_line_even(const RealFn& f, const QuadOptions& opt) {
  QuadResult r = integrate_halfline(f, opt);
  r.value *= 2.0;
  r.error *= 2.0;
  r.l1 *= 2.0;
  return r;
}

QuadResult integrate_line(const RealFn& f, const QuadOptions& opt) {
  return integrate_halfline([&](double x) { return f(x) + f(-x); }, opt);
}

QuadResult integrate_interval(const IntervalFn& f, double lo, double hi, const QuadOptions& opt) {
  if (!(hi > lo)) throw ParameterError("integration interval must have hi > lo");
  const double d = 0.5 * (hi - lo);
  auto node = [&](double t, std::vector<LogScaled>& out) {
    const double u = kHalfPi * std::sinh(t);
    const double e = std::exp(-2.0 * std::fabs(u));
    const double near = d * 2.0 * e / (1.0 + e);  // distance to the endpoint on u's side
    const double far = 2.0 * d - near;
    if (near == 0.0) return;
    const double from_lo = u < 0 ? near : far;
    const double to_hi = u < 0 ? far : near;
    const double x = u < 0 ? lo + near : hi - near;
    const double weight = d * kHalfPi * std::cosh(t) * 4.0 * e / ((1.0 + e) * (1.0 + e));
    out[0] = LogScaled::from_double(f(x, from_lo, to_hi) * weight);
  };
  return unscale(run_levels(1, kIntervalTMax, node, opt)[0]);
}

double theta_integral(double expnt, double q, double tol) {
  if (!(expnt > -1.0)) throw DivergenceError("theta integral diverges for exponent <= -1");
  auto f = [&](double theta, double from_lo, double to_hi) {
    // cos(theta) = sin(distance to the nearer endpoint).
    const double cos_theta = std::sin(std::min(from_lo, to_hi));
    if (cos_theta <= 0.0) return 0.0;
    return std::exp(expnt * std::log(cos_theta) + q * theta);
  };
  QuadOptions opt;
  opt.tol = tol;
  return integrate_interval(f, -kHalfPi, kHalfPi, opt).value;
}

double cauchy_cos_moment(long r, double s) {
  if (r < 0) throw ParameterError("cauchy_cos_moment needs r >= 0");
  const std::complex<double> z(1.0 + 0.5 * static_cast<double>(r), 0.5 * s);
  const double log_den = 2.0 * complex_log_gamma(z).real();
  const LogScaled num = real_factorial(static_cast<double>(r));
  return std::exp(std::log(std::numbers::pi) - static_cast<double>(r) * std::numbers::ln2 + num.log_abs - log_den);
}

LogScaled moment_jacobi_type(long j, const Rational& a, const Rational& b, int m) {
  if (j < 0) throw ParameterError("moment index must be nonnegative");
  if (m < 1) throw ParameterError("m must be a positive integer");
  if (j % 2 != 0) return LogScaled::zero();
  const Rational alpha = (Rational(2) * a + Rational(j + 1)) / Rational(2 * m);
  if (alpha.sign() <= 0 || alpha >= -b)
    throw DivergenceError("moment x^" + std::to_string(j) + " of |x|^{2a}(1+x^{2m})^b diverges");
  return LogScaled::from_rational(Rational(1, m)) * beta_scaled(alpha, -b - alpha);
}

LogScaled moment_bessel_type(long j, const Rational& a, int m) {
  if (j < 0) throw ParameterError("moment index must be nonnegative");
  if (m < 1) throw ParameterError("m must be a positive integer");
  if (j % 2 != 0) return LogScaled::zero();
  const Rational e = Rational(2) * a + Rational(j + 1);
  if (e.sign() >= 0)
    throw DivergenceError("moment x^" + std::to_string(j) + " of |x|^{2a}exp(-x^{-2m}) diverges");
  return LogScaled::from_rational(Rational(1, m)) * gamma_scaled(-e / Rational(2 * m));
}

LogScaled weight_moment(const WeightSpec& w, long j) {
  if (j < 0) throw ParameterError("moment index must be nonnegative");
  if (const auto* jt = std::get_if<JacobiType>(&w)) return moment_jacobi_type(j, jt->a, jt->b, jt->m);
  if (const auto* bt = std::get_if<BesselType>(&w)) return moment_bessel_type(j, bt->a, bt->m);
  const std::string which = "moment x^" + std::to_string(j) + " diverges";
  if (const auto* hm = std::get_if<HalfLineM>(&w)) {
    const Rational x = hm->q + Rational(j + 1);
    const Rational y = hm->p - Rational(j + 1);
    if (x.sign() <= 0 || y.sign() <= 0) throw DivergenceError(which);
    return beta_scaled(x, y);
  }
  if (const auto* hn = std::get_if<HalfLineN>(&w)) {
    const Rational g = -hn->p - Rational(j + 1);
    if (g.sign() <= 0) throw DivergenceError(which);
    return gamma_scaled(g);
  }
  Rational c;
  if (const auto* li = std::get_if<LineI>(&w)) {
    c = li->p - Rational(1, 2);
  } else {
    const auto& lj = std::get<LineJ>(w);
    if (!lj.q.is_zero()) throw UnsupportedShapeError("no closed-form moments for the J weight with q != 0");
    c = lj.p;
  }
  if (j % 2 != 0) return LogScaled::zero();
  const Rational x = Rational(j + 1, 2);
  const Rational y = c - x;
  if (y.sign() <= 0) throw DivergenceError(which);
  return beta_scaled(x, y);
}

}  // namespace finortho
