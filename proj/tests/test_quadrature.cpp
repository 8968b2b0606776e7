#include <doctest.h>

#include <cstdlib>
#include <numbers>

#include "finortho/quadrature.hpp"
#include "oracles.hpp"

using namespace finortho;
using oracle::rel;

namespace {
const double pi = std::numbers::pi;
}

TEST_CASE("half-line rule") {
  CHECK(rel(integrate_halfline([](double x) { return std::exp(-x); }).value, 1.0) < 1e-12);
  CHECK(rel(integrate_halfline([](double x) { return std::pow(1 + x, -10.0); }).value, 1.0 / 9) < 1e-12);
  const QuadResult g = integrate_halfline([](double x) { return x == 0 ? 0.0 : std::exp(-5 * std::log(x) - 1 / x); });
  CHECK(rel(g.value, 6.0) < 1e-12);
  CHECK(g.error < 1e-10);
  CHECK(g.relative_error() < 1e-10);
}

TEST_CASE("whole-line rules") {
  CHECK(rel(integrate_line_even([](double x) { return std::exp(-x * x); }).value, std::sqrt(pi)) < 1e-12);
  CHECK(rel(integrate_line_even([](double x) { return x * x * std::exp(-200 * std::log1p(x * x)); }).value,
            oracle::beta(1.5, 198.5)) < 1e-12);
  const QuadResult b = integrate_line_even([](double x) {
    const double ax = std::fabs(x);
    return ax == 0 ? 0.0 : std::exp(-98 * std::log(ax) - std::pow(ax, -4));
  });
  CHECK(rel(b.value, oracle::tgamma(97.0 / 4) / 2) < 1e-12);
  // a non-even integrand folds both half lines
  const QuadResult s = integrate_line([](double x) { return std::exp(-(x - 1) * (x - 1)); });
  CHECK(rel(s.value, std::sqrt(pi)) < 1e-12);
}

TEST_CASE("finite interval rule with endpoint distances") {
  const QuadResult r = integrate_interval([](double, double lo, double) { return 1 / std::sqrt(lo); }, 0.0, 1.0);
  CHECK(rel(r.value, 2.0) < 1e-12);
  const QuadResult c = integrate_interval([](double x, double, double) { return std::sqrt(1 - x * x); }, -1.0, 1.0);
  CHECK(rel(c.value, pi / 2) < 1e-12);
}

TEST_CASE("batched half-line integrals in log form") {
  const auto res = integrate_halfline_batch(3, [](double x, std::vector<LogScaled>& out) {
    out[0] = LogScaled{1, -x};
    out[1] = LogScaled::from_double(x) * LogScaled{1, -x};
    out[2] = LogScaled{1, 800.0 - x};  // e^800, far outside double range
  });
  REQUIRE(res.size() == 3);
  CHECK(rel(res[0].scaled_value(), 1.0) < 1e-12);
  CHECK(rel(res[1].scaled_value(), 1.0) < 1e-12);
  CHECK(res[2].scaled_value().log_abs == doctest::Approx(800.0).epsilon(1e-14));
}

TEST_CASE("error estimate bounds the change under refinement") {
  const std::vector<RealFn> fs = {
      [](double x) { return std::pow(1 + x, -10.0); },
      [](double x) { return x == 0 ? 0.0 : std::exp(-5 * std::log(x) - 1 / x); },
      [](double x) { return std::exp(-x) * std::cos(x); },
  };
  for (const auto& f : fs) {
    const QuadResult coarse = integrate_halfline(f);
    QuadOptions finer;
    finer.min_level = coarse.level + 1;
    finer.max_level = std::max(finer.max_level, finer.min_level);
    const QuadResult fine = integrate_halfline(f, finer);
    CHECK(std::fabs(fine.value - coarse.value) <= coarse.error);
  }
}

TEST_CASE("non-convergence is reported") {
  QuadOptions opt;
  opt.max_level = 6;
  opt.tol = 1e-15;
  CHECK_THROWS_AS(integrate_halfline([](double x) { return std::fabs(std::sin(200 * x)) * std::exp(-x / 50); }, opt),
                  ConvergenceError);
}

TEST_CASE("level cap from the environment") {
  ::setenv("FINORTHO_MAX_QUAD_LEVEL", "8", 1);
  CHECK(default_max_quad_level() == 8);
  ::setenv("FINORTHO_MAX_QUAD_LEVEL", "99", 1);
  CHECK(default_max_quad_level() == 12);
  ::setenv("FINORTHO_MAX_QUAD_LEVEL", "abc", 1);
  CHECK(default_max_quad_level() == 12);
  ::unsetenv("FINORTHO_MAX_QUAD_LEVEL");
  CHECK(default_max_quad_level() == 12);
}

TEST_CASE("theta integral") {
  CHECK(rel(theta_integral(1.0, 0.0), 2.0) < 1e-12);
  CHECK(rel(theta_integral(0.0, 1.0), 2 * std::sinh(pi / 2)) < 1e-12);
  CHECK(rel(theta_integral(3.0, 1.0), cauchy_cos_moment(3, 1.0)) < 1e-10);
  // int cos^{-1/2}: pi Gamma(1/2) / (2^{-1/2} Gamma(3/4)^2)
  const double g34 = oracle::tgamma(0.75);
  CHECK(rel(theta_integral(-0.5, 0.0), pi * std::sqrt(pi) * std::sqrt(2.0) / (g34 * g34)) < 1e-8);
  CHECK_THROWS_AS(theta_integral(-1.0, 0.0), DivergenceError);
}

TEST_CASE("Cauchy cosine moment") {
  CHECK(rel(cauchy_cos_moment(0, 0.0), pi) < 1e-14);
  CHECK(rel(cauchy_cos_moment(2, 0.0), pi / 2) < 1e-14);
  CHECK(rel(cauchy_cos_moment(1, 0.0), 2.0) < 1e-14);
  for (long r = 0; r <= 8; ++r)
    for (double s : {0.0, 0.5, 1.0, 2.0}) {
      CAPTURE(r);
      CAPTURE(s);
      // direct trapezoid-free reference: Boost tanh-sinh on (-pi/2, pi/2)
      boost::math::quadrature::tanh_sinh<double> ts;
      const double ref = ts.integrate([&](double t) { return std::pow(std::cos(t), r) * std::exp(s * t); }, -pi / 2, pi / 2);
      CHECK(rel(cauchy_cos_moment(r, s), ref) < 1e-12);
    }
}

TEST_CASE("closed-form moments") {
  CHECK(rel(moment_jacobi_type(0, Rational(1), Rational(-200), 1), oracle::beta(1.5, 198.5)) < 1e-13);
  CHECK(rel(moment_jacobi_type(2, Rational(0), Rational(-3), 1), pi / 8) < 1e-13);
  CHECK(moment_jacobi_type(3, Rational(0), Rational(-3), 1).is_zero());
  CHECK(rel(moment_jacobi_type(4, Rational(1), Rational(-20), 3),
            oracle::line([](double x) {
              const double ax = std::fabs(x);
              return ax > 1e20 ? 0.0 : std::exp(6 * std::log(ax) - 20 * std::log1p(std::pow(ax, 6)));
            })) < 1e-11);
  CHECK_THROWS_AS(moment_jacobi_type(6, Rational(0), Rational(-3), 1), DivergenceError);
  CHECK(rel(moment_bessel_type(0, Rational(-51), 2), oracle::tgamma(101.0 / 4) / 2) < 1e-13);
  CHECK(rel(moment_bessel_type(4, Rational(-51), 2), oracle::tgamma(97.0 / 4) / 2) < 1e-13);
  CHECK_THROWS_AS(moment_bessel_type(0, Rational(0), 1), DivergenceError);
  CHECK(rel(weight_moment(HalfLineM{Rational(10), Rational(0)}, 0), 1.0 / 9) < 1e-13);
  CHECK(rel(weight_moment(HalfLineN{Rational(-5)}, 0), 6.0) < 1e-13);
  CHECK(rel(weight_moment(LineI{Rational(2)}, 0), 2.0) < 1e-13);
  CHECK(rel(weight_moment(LineI{Rational(3)}, 2), oracle::beta(1.5, 1.0)) < 1e-13);
  CHECK(rel(weight_moment(LineJ{Rational(3), Rational(0)}, 2), oracle::beta(1.5, 1.5)) < 1e-13);
  CHECK_THROWS_AS(weight_moment(LineJ{Rational(3), Rational(1)}, 0), UnsupportedShapeError);
}
