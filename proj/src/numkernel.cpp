#include "finortho/numkernel.hpp"

#include <array>
#include <cctype>
#include <cmath>
#include <limits>
#include <numbers>

namespace finortho {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfLog2Pi = 0.91893853320467274178032973640562;

// Arguments are shifted up to this point before the asymptotic series is used.
constexpr double kStirlingStart = 15.0;

// B_{2k} / (2k (2k-1)), k = 1..8.
constexpr std::array<double, 8> kStirlingCoeffs = {
    1.0 / 12.0,           -1.0 / 360.0,    1.0 / 1260.0, -1.0 / 1680.0,
    1.0 / 1188.0,         -691.0 / 360360.0, 1.0 / 156.0, -3617.0 / 122400.0,
};

template <typename T>
T stirling_log_gamma(const T& x) {
  const T inv = T(1.0) / x;
  const T inv2 = inv * inv;
  T series = T(kStirlingCoeffs.back());
  for (std::size_t k = kStirlingCoeffs.size() - 1; k-- > 0;) {
    series = series * inv2 + T(kStirlingCoeffs[k]);
  }
  return (x - T(0.5)) * std::log(x) - x + T(kHalfLog2Pi) + series * inv;
}

double log_gamma_positive(double x) {
  double prod = 1.0;
  while (x < kStirlingStart) {
    prod *= x;
    x += 1.0;
  }
  return stirling_log_gamma(x) - std::log(prod);
}

double cos_pi(double x) { return sin_pi(x + 0.5); }

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

double log_abs_mpz(const mpz_class& z) {
  long exponent = 0;
  const double mantissa = mpz_get_d_2exp(&exponent, z.get_mpz_t());
  return std::log(std::fabs(mantissa)) + static_cast<double>(exponent) * std::numbers::ln2;
}

}  // namespace

// ---------------------------------------------------------------- Rational

Rational::Rational(long num, long den) : value_(num, den) {
  if (den == 0) throw ParameterError("rational with zero denominator");
  value_.canonicalize();
}

Rational::Rational(const mpq_class& q) : value_(q) { value_.canonicalize(); }

Rational Rational::from_double(double x) {
  if (!std::isfinite(x)) throw ParameterError("cannot convert a non-finite double to a rational");
  return Rational(mpq_class(x));
}

Rational Rational::parse(std::string_view text) {
  auto fail = [&]() -> ParameterError {
    return ParameterError("malformed rational number '" + std::string(text) + "'");
  };
  std::size_t pos = 0;
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  std::size_t end = text.size();
  while (end > pos && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  std::string_view s = text.substr(pos, end - pos);
  if (s.empty()) throw fail();

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  auto all_digits = [](std::string_view d) {
    if (d.empty()) return false;
    for (char c : d)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };

  mpq_class value;
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const auto num = s.substr(0, slash);
    const auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw fail();
    mpz_class n(std::string(num), 10), d(std::string(den), 10);
    if (d == 0) throw ParameterError("rational with zero denominator: '" + std::string(text) + "'");
    value = mpq_class(n, d);
  } else {
    std::string_view mantissa = s;
    long exponent = 0;
    if (const auto e = s.find_first_of("eE"); e != std::string_view::npos) {
      mantissa = s.substr(0, e);
      std::string_view exp_text = s.substr(e + 1);
      bool exp_negative = false;
      if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
        exp_negative = exp_text.front() == '-';
        exp_text.remove_prefix(1);
      }
      if (!all_digits(exp_text) || exp_text.size() > 6) throw fail();
      exponent = std::stol(std::string(exp_text));
      if (exp_negative) exponent = -exponent;
    }
    std::string digits;
    if (const auto dot = mantissa.find('.'); dot != std::string_view::npos) {
      const auto whole = mantissa.substr(0, dot);
      const auto frac = mantissa.substr(dot + 1);
      if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
          (whole.empty() && frac.empty()))
        throw fail();
      digits = std::string(whole) + std::string(frac);
      exponent -= static_cast<long>(frac.size());
    } else {
      if (!all_digits(mantissa)) throw fail();
      digits = std::string(mantissa);
    }
    mpz_class n(digits, 10);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
    value = exponent < 0 ? mpq_class(n, scale) : mpq_class(n * scale);
  }
  value.canonicalize();
  if (negative) value = -value;
  return Rational(value);
}

std::string Rational::numerator_string() const { return value_.get_num().get_str(); }
std::string Rational::denominator_string() const { return value_.get_den().get_str(); }
std::string Rational::to_string() const {
  return value_.get_den() == 1 ? numerator_string() : numerator_string() + "/" + denominator_string();
}

double Rational::to_double() const { return value_.get_d(); }

long double Rational::to_long_double() const {
  const double head = value_.get_d();
  if (!std::isfinite(head)) return head;
  const mpq_class rest = value_ - mpq_class(head);
  return static_cast<long double>(head) + static_cast<long double>(rest.get_d());
}

bool Rational::is_integer() const { return value_.get_den() == 1; }

std::optional<long> Rational::to_long() const {
  if (!is_integer() || !value_.get_num().fits_slong_p()) return std::nullopt;
  return value_.get_num().get_si();
}

Rational Rational::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return Rational(mpq_class(q));
}

Rational Rational::ceil() const {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return Rational(mpq_class(q));
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw ParameterError("division by zero rational");
  value_ /= o.value_;
  return *this;
}

long largest_integer_below(const Rational& x) {
  const Rational below = x.ceil() - Rational(1);
  const auto v = below.to_long();
  if (!v) throw ParameterError("index bound " + x.to_string() + " does not fit a machine integer");
  return *v;
}

// --------------------------------------------------------------- LogScaled

LogScaled LogScaled::from_double(double x) {
  if (x == 0.0) return zero();
  return {x > 0 ? 1 : -1, std::log(std::fabs(x))};
}

LogScaled LogScaled::from_rational(const Rational& x) {
  if (x.is_zero()) return zero();
  const mpq_class& q = x.raw();
  return {x.sign(), log_abs_mpz(q.get_num()) - log_abs_mpz(q.get_den())};
}

double LogScaled::to_double() const {
  if (sign == 0) return 0.0;
  return sign * std::exp(log_abs);
}

double LogScaled::log10_abs() const {
  if (sign == 0) return -std::numeric_limits<double>::infinity();
  return log_abs / std::numbers::ln10;
}

LogScaled& LogScaled::operator*=(const LogScaled& o) {
  sign *= o.sign;
  log_abs = sign == 0 ? 0.0 : log_abs + o.log_abs;
  return *this;
}

LogScaled& LogScaled::operator/=(const LogScaled& o) {
  if (o.sign == 0) throw PoleError("division of a LogScaled value by zero");
  sign *= o.sign;
  log_abs = sign == 0 ? 0.0 : log_abs - o.log_abs;
  return *this;
}

LogScaled log_add(const LogScaled& a, const LogScaled& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const LogScaled& hi = a.log_abs >= b.log_abs ? a : b;
  const LogScaled& lo = a.log_abs >= b.log_abs ? b : a;
  const double s = hi.sign + lo.sign * std::exp(lo.log_abs - hi.log_abs);
  if (s == 0.0) return LogScaled::zero();
  return {s > 0 ? 1 : -1, hi.log_abs + std::log(std::fabs(s))};
}

double relative_difference(const LogScaled& a, const LogScaled& b) {
  if (b.is_zero()) return std::fabs(a.to_double());
  if (a.is_zero()) return 1.0;
  if (a.sign != b.sign) return 1.0 + std::exp(a.log_abs - b.log_abs);
  return std::fabs(std::expm1(a.log_abs - b.log_abs));
}

// ------------------------------------------------------ exact combinatorics

Rational gen_binomial(const Rational& a, long k) {
  if (k < 0) throw ParameterError("gen_binomial requires k >= 0");
  mpq_class prod(1);
  for (long i = 0; i < k; ++i) {
    prod *= a.raw() - i;
    if (prod == 0) return Rational(0);
  }
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(k));
  prod /= fact;
  return Rational(prod);
}

Rational pochhammer(const Rational& a, long k) {
  if (k < 0) throw ParameterError("pochhammer requires k >= 0");
  mpq_class prod(1);
  for (long i = 0; i < k; ++i) {
    prod *= a.raw() + i;
    if (prod == 0) return Rational(0);
  }
  return Rational(prod);
}

Rational factorial(long k) {
  if (k < 0) throw ParameterError("factorial requires k >= 0");
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(k));
  return Rational(mpq_class(fact));
}

// ----------------------------------------------------------- gamma family

double sin_pi(double x) {
  // Reduce to r in [-1, 1]; x - 2*round(x/2) is exact in binary floating point.
  double r = x - 2.0 * std::round(0.5 * x);
  int sign = 1;
  if (r < 0) {
    r = -r;
    sign = -1;
  }
  if (r > 0.5) r = 1.0 - r;
  if (r == 0.0) return 0.0;
  return sign * std::sin(kPi * r);
}

LogScaled gamma_scaled(double x) {
  if (std::isnan(x)) throw PoleError("gamma of NaN");
  if (is_nonpositive_integer(x)) throw PoleError("gamma pole at " + std::to_string(x));
  if (x > 0.0) return {1, log_gamma_positive(x)};
  const double s = sin_pi(x);
  // Gamma(x) = pi / (sin(pi x) Gamma(1 - x))
  return {s > 0 ? 1 : -1, std::log(kPi) - std::log(std::fabs(s)) - log_gamma_positive(1.0 - x)};
}

LogScaled gamma_scaled(const Rational& x) {
  if (x.is_integer() && x.sign() <= 0) throw PoleError("gamma pole at " + x.to_string());
  return gamma_scaled(x.to_double());
}

LogScaled real_factorial(double z) { return gamma_scaled(z + 1.0); }

LogScaled real_factorial(const Rational& z) {
  if (z.is_integer() && z.sign() < 0) throw PoleError("factorial pole at " + z.to_string());
  return gamma_scaled(z.to_double() + 1.0);
}

std::complex<double> complex_log_gamma(std::complex<double> z) {
  if (z.imag() == 0.0 && is_nonpositive_integer(z.real()))
    throw PoleError("complex gamma pole at " + std::to_string(z.real()));
  if (z.real() < 0.5) {
    // log Gamma(z) = log pi - log sin(pi z) - log Gamma(1 - z)
    const double x = z.real(), y = z.imag();
    const std::complex<double> s(sin_pi(x) * std::cosh(kPi * y), cos_pi(x) * std::sinh(kPi * y));
    return std::log(kPi) - std::log(s) - complex_log_gamma(1.0 - z);
  }
  std::complex<double> prod(1.0, 0.0);
  while (z.real() < kStirlingStart) {
    prod *= z;
    z += 1.0;
  }
  return stirling_log_gamma(z) - std::log(prod);
}

std::complex<double> complex_gamma(std::complex<double> z) { return std::exp(complex_log_gamma(z)); }

}  // namespace finortho
