#ifndef FINORTHO_NUMKERNEL_HPP
#define FINORTHO_NUMKERNEL_HPP

/**
 * @file numkernel.hpp
 * @brief Exact rationals, sign/log scaled reals and the gamma family.
 *
 * Everything here is a pure function on immutable values.
 */

#include <gmpxx.h>

#include <compare>
#include <complex>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "finortho/errors.hpp"

namespace finortho {

/**
 * @brief Arbitrary-precision rational number, always in lowest terms with a
 * positive denominator.
 */
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT: implicit from integers
  Rational(long num, long den);
  explicit Rational(const mpq_class& q);

  /// Exact conversion of a finite double (binary fractions are rational).
  static Rational from_double(double x);

  /**
   * @brief Parse "-51", "1/2", "-0.5", "2.5e-1" exactly.
   *
   * Decimal notation is read as the exact decimal fraction, so "-0.5" is -1/2.
   * Throws ParameterError on malformed input or a zero denominator.
   */
  static Rational parse(std::string_view text);

  const mpq_class& raw() const noexcept { return value_; }
  std::string numerator_string() const;
  std::string denominator_string() const;
  std::string to_string() const;

  double to_double() const;
  long double to_long_double() const;
  int sign() const noexcept { return sgn(value_); }
  bool is_zero() const noexcept { return sgn(value_) == 0; }
  bool is_integer() const;
  /// The value as a machine integer when it is an integer that fits.
  std::optional<long> to_long() const;
  Rational floor() const;
  Rational ceil() const;
  Rational abs() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

 private:
  mpq_class value_{0};
};

/// Largest integer strictly below x (so 397/2 -> 198 and 22 -> 21).
long largest_integer_below(const Rational& x);

/**
 * @brief A real number held as sign and natural log of its magnitude.
 *
 * Products of gamma functions with arguments near 200 overflow double; this
 * form does not. `log_abs` is ignored when `sign == 0`.
 */
struct LogScaled {
  int sign = 0;
  double log_abs = 0.0;

  static LogScaled zero() { return {}; }
  static LogScaled one() { return {1, 0.0}; }
  static LogScaled from_double(double x);
  static LogScaled from_rational(const Rational& x);

  /// Plain double; saturates to +-inf / 0 outside the exponent range.
  double to_double() const;
  double log10_abs() const;
  bool is_zero() const { return sign == 0; }

  LogScaled& operator*=(const LogScaled& o);
  LogScaled& operator/=(const LogScaled& o);
  friend LogScaled operator*(LogScaled a, const LogScaled& b) { return a *= b; }
  friend LogScaled operator/(LogScaled a, const LogScaled& b) { return a /= b; }
};

/// a + b without leaving log form.
LogScaled log_add(const LogScaled& a, const LogScaled& b);

/// Relative difference |a-b|/|b| of two LogScaled values (|a| if b == 0).
double relative_difference(const LogScaled& a, const LogScaled& b);

/// binom(a, k) = (1/k!) prod_{i<k} (a - i).
Rational gen_binomial(const Rational& a, long k);

/// Rising factorial a (a+1) ... (a+k-1); 1 for k = 0.
Rational pochhammer(const Rational& a, long k);

/// k! as an exact integer.
Rational factorial(long k);

/// log|Gamma(x)| and the sign of Gamma(x) for real x; PoleError at 0,-1,-2,...
LogScaled gamma_scaled(double x);

/// Gamma(z+1) = z! as sign + log; PoleError when z is a negative integer.
LogScaled real_factorial(double z);

/// Same as above, but the pole test is exact.
LogScaled real_factorial(const Rational& z);

/// Gamma(x) for a rational argument, with exact pole detection.
LogScaled gamma_scaled(const Rational& x);

/// Gamma(z) for complex z; PoleError at nonpositive integers.
std::complex<double> complex_gamma(std::complex<double> z);

/// log Gamma(z) on the principal-ish branch (continuous in the right half plane).
std::complex<double> complex_log_gamma(std::complex<double> z);

/// sin(pi x) with exact argument reduction.
double sin_pi(double x);

}  // namespace finortho

#endif  // FINORTHO_NUMKERNEL_HPP
