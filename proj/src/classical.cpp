#include "finortho/classical.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "finortho/quadrature.hpp"

namespace finortho {

namespace {

using cplx = std::complex<double>;

SparseSymPoly poly(std::initializer_list<std::pair<const int, Rational>> terms) {
  return SparseSymPoly(SparseSymPoly::Terms(terms));
}

// SLCoeffs with C = 1, D = E = 0 and lambda_n = -n (n + shift), the
// hypergeometric-type shape of the classical equations.
SLCoeffs hypergeometric_equation(SparseSymPoly A, SparseSymPoly B, Rational shift) {
  SLCoeffs eq;
  eq.A = std::move(A);
  eq.B = std::move(B);
  eq.C = SparseSymPoly::constant(Rational(1));
  eq.D = Rational(0);
  eq.E = Rational(0);
  eq.lambda = [shift](long n) { return -Rational(n) * (Rational(n) + shift); };
  return eq;
}

void require_index(long n) {
  if (n < 0) throw ParameterError("polynomial index must be nonnegative");
}

std::string idx(long n) { return std::to_string(n); }

}  // namespace

// ---------------------------------------------------------------- params

long ParamsM::max_index() const {
  if (q <= Rational(-1)) throw ParameterError("M family needs q > -1");
  return std::max(-1L, largest_integer_below((p - Rational(1)) / Rational(2)));
}
bool ParamsM::admissible(long n) const { return n >= 0 && q > Rational(-1) && p > Rational(2 * n + 1); }

long ParamsN::max_index() const { return std::max(-1L, largest_integer_below((-p - Rational(1)) / Rational(2))); }
bool ParamsN::admissible(long n) const { return n >= 0 && p < Rational(-2 * n - 1); }

long ParamsI::max_index() const { return std::max(-1L, largest_integer_below(p - Rational(1))); }
bool ParamsI::admissible(long n) const { return n >= 0 && Rational(n) < p - Rational(1); }

long ParamsJ::max_index() const { return std::max(-1L, largest_integer_below(p - Rational(1, 2))); }
bool ParamsJ::admissible(long n) const { return n >= 0 && Rational(n) < p - Rational(1, 2); }

// ---------------------------------------------------------------- M

SparseSymPoly m_poly(long n, const ParamsM& prm) {
  require_index(n);
  SparseSymPoly::Terms terms;
  const Rational outer = (n % 2 == 0 ? Rational(1) : Rational(-1)) * factorial(n);
  for (long k = 0; k <= n; ++k) {
    const Rational sign = k % 2 == 0 ? Rational(1) : Rational(-1);
    terms.emplace(static_cast<int>(k), outer * sign * gen_binomial(prm.p - Rational(n + 1), k) *
                                           gen_binomial(prm.q + Rational(n), n - k));
  }
  return SparseSymPoly(std::move(terms));
}

LogScaled m_norm(long n, const ParamsM& prm) {
  require_index(n);
  if (!prm.admissible(n))
    throw AdmissibilityError("M norm needs p > 2n+1 and q > -1 (n = " + idx(n) + ", p = " + prm.p.to_string() +
                             ", q = " + prm.q.to_string() + ")");
  const Rational nn(n);
  return real_factorial(nn) * real_factorial(prm.p - nn - Rational(1)) * real_factorial(prm.q + nn) /
         (LogScaled::from_rational(prm.p - Rational(2 * n + 1)) * real_factorial(prm.p + prm.q - nn - Rational(1)));
}

SLCoeffs m_equation(const ParamsM& prm) {
  return hypergeometric_equation(poly({{1, Rational(1)}, {2, Rational(1)}}),
                                 poly({{0, prm.q + Rational(1)}, {1, Rational(2) - prm.p}}), Rational(1) - prm.p);
}

WeightSpec m_weight(const ParamsM& prm) { return HalfLineM{prm.p, prm.q}; }

// ---------------------------------------------------------------- N

SparseSymPoly n_poly(long n, const ParamsN& prm) {
  require_index(n);
  SparseSymPoly::Terms terms;
  const Rational outer = n % 2 == 0 ? Rational(1) : Rational(-1);
  for (long k = 0; k <= n; ++k) {
    const Rational sign = k % 2 == 0 ? Rational(1) : Rational(-1);
    terms.emplace(static_cast<int>(k), outer * sign * factorial(k) * gen_binomial(-prm.p - Rational(n + 1), k) *
                                           gen_binomial(Rational(n), n - k));
  }
  return SparseSymPoly(std::move(terms));
}

LogScaled n_norm(long n, const ParamsN& prm) {
  require_index(n);
  if (!prm.admissible(n))
    throw AdmissibilityError("N norm needs p < -2n-1 (n = " + idx(n) + ", p = " + prm.p.to_string() + ")");
  return real_factorial(Rational(n)) * real_factorial(-prm.p - Rational(n + 1)) /
         LogScaled::from_rational(-(prm.p + Rational(2 * n + 1)));
}

SLCoeffs n_equation(const ParamsN& prm) {
  return hypergeometric_equation(SparseSymPoly::monomial(2), poly({{0, Rational(1)}, {1, Rational(2) + prm.p}}),
                                 Rational(1) + prm.p);
}

WeightSpec n_weight(const ParamsN& prm) { return HalfLineN{prm.p}; }

SparseSymPoly bessel_monic(long n, const Rational& alpha) {
  require_index(n);
  if (alpha.is_integer() && alpha <= Rational(-2))
    throw ParameterError("generalized Bessel polynomials exclude alpha = -2, -3, ... (got " + alpha.to_string() + ")");
  SparseSymPoly::Terms terms;
  for (long k = 0; k <= n; ++k) {
    // 2^{n-k} binom(n,k) Gamma(n+k+alpha+1)/Gamma(2n+alpha+1)
    mpz_class two_pow;
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(n - k));
    const Rational denom = pochhammer(Rational(n + k + 1) + alpha, n - k);
    terms.emplace(static_cast<int>(k), Rational(mpq_class(two_pow)) * gen_binomial(Rational(n), k) / denom);
  }
  return SparseSymPoly(std::move(terms));
}

// ---------------------------------------------------------------- I

SparseSymPoly i_poly(long n, const ParamsI& prm) {
  require_index(n);
  SparseSymPoly::Terms terms;
  const Rational nf = factorial(n);
  for (long k = 0; 2 * k <= n; ++k) {
    const Rational sign = k % 2 == 0 ? Rational(1) : Rational(-1);
    mpz_class two_pow;
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(n - 2 * k));
    terms.emplace(static_cast<int>(n - 2 * k), nf * sign * gen_binomial(prm.p - Rational(1), n - k) *
                                                   gen_binomial(Rational(n - k), k) * Rational(mpq_class(two_pow)));
  }
  return SparseSymPoly(std::move(terms), parity_of_index(n));
}

LogScaled i_norm(long n, const ParamsI& prm) {
  require_index(n);
  if (!prm.admissible(n))
    throw AdmissibilityError("I norm needs n < p-1 (n = " + idx(n) + ", p = " + prm.p.to_string() + ")");
  const Rational& p = prm.p;
  const Rational nn(n);
  LogScaled num = real_factorial(nn);
  num.log_abs += static_cast<double>(2 * n - 1) * std::log(2.0) + 0.5 * std::log(std::numbers::pi);
  num *= gamma_scaled(p) * gamma_scaled(p) * gamma_scaled(Rational(2) * p - Rational(2) * nn);
  const LogScaled den = LogScaled::from_rational(p - nn - Rational(1)) * gamma_scaled(p - nn) *
                        gamma_scaled(p - nn + Rational(1, 2)) * gamma_scaled(Rational(2) * p - nn - Rational(1));
  return num / den;
}

SLCoeffs i_equation(const ParamsI& prm) {
  return hypergeometric_equation(poly({{0, Rational(1)}, {2, Rational(1)}}),
                                 SparseSymPoly::monomial(1, Rational(3) - Rational(2) * prm.p),
                                 Rational(2) - Rational(2) * prm.p);
}

WeightSpec i_weight(const ParamsI& prm) { return LineI{prm.p}; }

// ---------------------------------------------------------------- J

cplx hyp2f1_terminating(long neg_int, cplx b, cplx c, cplx z) {
  if (neg_int > 0) throw ParameterError("hyp2f1_terminating needs a nonpositive integer first parameter");
  cplx term(1.0, 0.0);
  cplx sum = term;
  const double a = static_cast<double>(neg_int);
  for (long k = 0; k < -neg_int; ++k) {
    const cplx ck = c + static_cast<double>(k);
    if (ck == cplx(0.0, 0.0)) throw PoleError("2F1 denominator parameter hits a pole before the series terminates");
    term *= (a + static_cast<double>(k)) * (b + static_cast<double>(k)) / ck * z / static_cast<double>(k + 1);
    sum += term;
  }
  return sum;
}

SparseSymPoly j_poly(long n, const ParamsJ& prm, double realness_tol) {
  require_index(n);
  const double p = prm.p.to_double();
  const double q = prm.q.to_double();
  const Rational c_exact = Rational(2) * prm.p - Rational(2 * n);
  if (c_exact.is_integer() && c_exact.sign() <= 0 && n > 0)
    throw ParameterError("J_" + idx(n) + " needs 2p - 2n outside {0, -1, -2, ...}");

  // (-i)^n (n+1-2p)_n
  cplx prefactor(1.0, 0.0);
  for (long i = 0; i < n; ++i) prefactor *= cplx(0.0, -1.0) * (static_cast<double>(n + 1 + i) - 2.0 * p);

  const cplx b(p - static_cast<double>(n), -q / 2.0);
  const cplx c(c_exact.to_double(), 0.0);
  std::vector<cplx> coeffs(static_cast<std::size_t>(n + 1));
  cplx minus_i_pow(1.0, 0.0);
  double max_abs = 0.0;
  for (long k = 0; k <= n; ++k) {
    const cplx f = hyp2f1_terminating(k - n, b, c, cplx(2.0, 0.0));
    coeffs[k] = prefactor * gen_binomial(Rational(n), k).to_double() * f * minus_i_pow;
    max_abs = std::max(max_abs, std::abs(coeffs[k]));
    minus_i_pow *= cplx(0.0, -1.0);
  }
  SparseSymPoly::Terms terms;
  for (long k = 0; k <= n; ++k) {
    if (std::fabs(coeffs[k].imag()) > realness_tol * max_abs)
      throw RealnessError("J_" + idx(n) + " coefficient of x^" + idx(k) + " has imaginary part " +
                          std::to_string(coeffs[k].imag()));
    terms.emplace(static_cast<int>(k), Rational::from_double(coeffs[k].real()));
  }
  return SparseSymPoly(std::move(terms));
}

double j_norm(long n, const ParamsJ& prm) {
  require_index(n);
  if (!prm.admissible(n))
    throw AdmissibilityError("J norm needs n < p - 1/2 (n = " + idx(n) + ", p = " + prm.p.to_string() + ")");
  const Rational two_p = Rational(2) * prm.p;
  const LogScaled prefactor =
      real_factorial(Rational(n)) * gamma_scaled(two_p - Rational(n)) / gamma_scaled(two_p - Rational(2 * n));
  const Rational expnt = two_p - Rational(2 * n + 2);
  const double q = prm.q.to_double();
  const double theta = theta_integral(expnt.to_double(), q);
  if (expnt.is_integer()) {
    const double cauchy = cauchy_cos_moment(*expnt.to_long(), q);
    if (std::fabs(theta - cauchy) > 1e-9 * std::fabs(cauchy))
      throw ConvergenceError("theta integral disagrees with the Cauchy formula for J norm " + idx(n));
  }
  return prefactor.to_double() * theta;
}

SLCoeffs j_equation(const ParamsJ& prm) {
  return hypergeometric_equation(poly({{0, Rational(1)}, {2, Rational(1)}}),
                                 poly({{0, prm.q}, {1, Rational(2) * (Rational(1) - prm.p)}}),
                                 Rational(1) - Rational(2) * prm.p);
}

WeightSpec j_weight(const ParamsJ& prm) { return LineJ{prm.p, prm.q}; }

}  // namespace finortho
