#include <doctest.h>

#include <numbers>

#include "finortho/classical.hpp"
#include "finortho/quadrature.hpp"
#include "oracles.hpp"

using namespace finortho;
using oracle::rel;

namespace {
const double pi = std::numbers::pi;

SparseSymPoly linear(const Rational& c1, const Rational& c0) {
  return SparseSymPoly(SparseSymPoly::Terms{{1, c1}, {0, c0}}).scale(Rational(1));
}

// Weighted square norm of p by Boost quadrature; log_w in closed form.
template <class LogW>
double half_norm(const SparseSymPoly& p, LogW log_w) {
  return oracle::halfline([&](double x) {
    if (x == 0.0) return 0.0;
    return static_cast<double>(oracle::square(p, x) * std::exp(static_cast<long double>(log_w(x))));
  });
}
template <class LogW>
double line_norm(const SparseSymPoly& p, LogW log_w) {
  return oracle::line(
      [&](double x) { return static_cast<double>(oracle::square(p, x) * std::exp(static_cast<long double>(log_w(x)))); });
}
}  // namespace

TEST_CASE("M family members") {
  CHECK(m_poly(0, {Rational(7), Rational(3)}) == SparseSymPoly::constant(Rational(1)));
  CHECK(m_poly(1, {Rational(10), Rational(0)}) == linear(Rational(8), Rational(-1)));
  for (const auto& [p, q] : std::vector<std::pair<Rational, Rational>>{{7, 0}, {Rational(21, 2), Rational(1, 3)}, {30, 5}})
    CHECK(m_poly(1, {p, q}) == linear(p - Rational(2), -(q + Rational(1))));
}

TEST_CASE("M family satisfies its equation exactly") {
  for (const ParamsM& prm : {ParamsM{Rational(10), Rational(0)}, ParamsM{Rational(37, 3), Rational(-1, 2)}}) {
    const SLCoeffs eq = m_equation(prm);
    for (long n = 0; n <= 8; ++n) CHECK(residual(eq, m_poly(n, prm), n).is_zero());
  }
}

TEST_CASE("M norms") {
  CHECK(m_norm(0, {Rational(10), Rational(0)}).to_double() == doctest::Approx(1.0 / 9).epsilon(1e-14));
  CHECK(m_norm(0, {Rational(3), Rational(0)}).to_double() == doctest::Approx(0.5).epsilon(1e-14));
  const double direct = oracle::halfline([](double x) { return (8 * x - 1) * (8 * x - 1) * std::pow(1 + x, -10.0); });
  CHECK(rel(m_norm(1, {Rational(10), Rational(0)}), direct) < 1e-10);
  const ParamsM prm{Rational(12), Rational(1, 2)};
  for (long n = 0; n <= 5; ++n) {
    CAPTURE(n);
    const double q = half_norm(m_poly(n, prm), [](double x) { return 0.5 * std::log(x) - 12.5 * std::log1p(x); });
    CHECK(rel(m_norm(n, prm), q) < 1e-9);
  }
  CHECK(prm.max_index() == 5);
  CHECK_THROWS_AS(m_norm(6, prm), AdmissibilityError);
  CHECK_THROWS_AS(ParamsM({Rational(12), Rational(-1)}).max_index(), ParameterError);
}

TEST_CASE("N family members and norms") {
  CHECK(n_poly(0, {Rational(-7)}) == SparseSymPoly::constant(Rational(1)));
  CHECK(n_poly(1, {Rational(-7)}) == linear(Rational(5), Rational(-1)));
  const SLCoeffs eq = n_equation({Rational(-31, 2)});
  for (long n = 0; n <= 8; ++n) CHECK(residual(eq, n_poly(n, {Rational(-31, 2)}), n).is_zero());
  CHECK(n_norm(0, {Rational(-5)}).to_double() == doctest::Approx(6.0).epsilon(1e-14));
  CHECK(n_norm(0, {Rational(-3)}).to_double() == doctest::Approx(1.0).epsilon(1e-14));
  const ParamsN prm{Rational(-7)};
  const double q = half_norm(n_poly(1, prm), [](double x) { return -7 * std::log(x) - 1 / x; });
  CHECK(rel(n_norm(1, prm), q) < 1e-10);
  CHECK(prm.max_index() == 2);
  CHECK_THROWS_AS(n_norm(3, prm), AdmissibilityError);
}

TEST_CASE("monic generalized Bessel polynomials") {
  CHECK(bessel_monic(0, Rational(3)) == SparseSymPoly::constant(Rational(1)));
  CHECK(bessel_monic(1, Rational(0)) == linear(Rational(1), Rational(1)));
  // classical y_2 = 3x^2 + 3x + 1
  CHECK(bessel_monic(2, Rational(0)) ==
        SparseSymPoly(SparseSymPoly::Terms{{2, Rational(1)}, {1, Rational(1)}, {0, Rational(1, 3)}}));
  CHECK(bessel_monic(5, Rational(7, 2)).leading_coefficient() == Rational(1));
}

TEST_CASE("I family") {
  CHECK(i_poly(0, {Rational(4)}) == SparseSymPoly::constant(Rational(1)));
  CHECK(i_poly(1, {Rational(4)}) == SparseSymPoly::monomial(1, Rational(6)));
  const SparseSymPoly i2 = i_poly(2, {Rational(4)});
  CHECK(i2.parity() == Parity::even);
  for (long n = 0; n <= 6; ++n) CHECK(residual(i_equation({Rational(4)}), i_poly(n, {Rational(4)}), n).is_zero());
  // The weight is (1+x^2)^{-(p-1/2)}: 2 at p = 2, pi at p = 3/2.
  CHECK(i_norm(0, {Rational(2)}).to_double() == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(i_norm(0, {Rational(3, 2)}).to_double() == doctest::Approx(pi).epsilon(1e-13));
  const double q = oracle::line([](double x) { return 36 * x * x * std::pow(1 + x * x, -3.5); });
  CHECK(rel(i_norm(1, {Rational(4)}), q) < 1e-10);
  const ParamsI prm{Rational(15, 2)};
  for (long n = 0; n <= prm.max_index(); ++n) {
    const double qn = line_norm(i_poly(n, prm), [](double x) { return -7.0 * std::log1p(x * x); });
    CHECK(rel(i_norm(n, prm), qn) < 1e-9);
  }
}

TEST_CASE("terminating hypergeometric series") {
  using C = std::complex<double>;
  CHECK(std::abs(hyp2f1_terminating(0, C(2, 1), C(3, -1), C(0.3, 0.2)) - C(1, 0)) < 1e-15);
  const C b(2.5, 1.0), c(-0.5, 3.0), z(0.25, -1.0);
  CHECK(std::abs(hyp2f1_terminating(-1, b, c, z) - (1.0 - b * z / c)) < 1e-14);
  CHECK(std::abs(hyp2f1_terminating(-2, C(1, 0), C(1, 0), C(2, 0)) - C(1, 0)) < 1e-14);
}

TEST_CASE("J family members") {
  CHECK(j_poly(0, {Rational(4), Rational(1)}) == SparseSymPoly::constant(Rational(1)));
  const SparseSymPoly j1 = j_poly(1, {Rational(4), Rational(0)});
  CHECK(j1.parity() == Parity::odd);
  CHECK(j1.degree() == 1);
  CHECK(j_poly(1, {Rational(4), Rational(1)}) == linear(Rational(6), Rational(-1)));
  const SLCoeffs eq = j_equation({Rational(4), Rational(1)});
  for (long n = 0; n <= 3; ++n) CHECK(relative_residual(eq, j_poly(n, {Rational(4), Rational(1)}), n) < 1e-9);
  CHECK_THROWS_AS(j_poly(1, {Rational(1), Rational(0)}), ParameterError);
  CHECK_THROWS_AS(j_poly(2, {Rational(4), Rational(1)}, -1.0), RealnessError);
}

TEST_CASE("J norms") {
  CHECK(j_norm(0, {Rational(3, 2), Rational(0)}) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(rel(j_norm(0, {Rational(5, 2), Rational(1)}), cauchy_cos_moment(3, 1.0)) < 1e-10);
  const ParamsJ prm{Rational(4), Rational(1)};
  for (long n = 0; n <= 3; ++n) {
    CAPTURE(n);
    const double q = line_norm(j_poly(n, prm), [](double x) { return -4 * std::log1p(x * x) + std::atan(x); });
    CHECK(rel(j_norm(n, prm), q) < 1e-8);
  }
  CHECK(prm.max_index() == 3);
  CHECK_THROWS_AS(j_norm(4, prm), AdmissibilityError);
}
