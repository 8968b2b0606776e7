#ifndef FINORTHO_POLYCORE_HPP
#define FINORTHO_POLYCORE_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "finortho/numkernel.hpp"
#include "json.hpp"

namespace finortho {

enum class Parity { even, odd, none };

std::string parity_name(Parity p);
Parity parse_parity(const std::string& name);
/// Parity of an integer index n (even n -> even).
Parity parity_of_index(long n);

/**
 * @brief Sparse polynomial in one variable with exact rational coefficients.
 *
 * Zero coefficients are never stored. The parity is tracked alongside the
 * terms: an even polynomial stores only even exponents, an odd one only odd
 * exponents. The zero polynomial has degree -1.
 */
class SparseSymPoly {
 public:
  using Terms = std::map<int, Rational>;

  SparseSymPoly() = default;
  /// Parity inferred from the terms.
  explicit SparseSymPoly(Terms terms);
  /// Declared parity; throws ParameterError if a term contradicts it.
  SparseSymPoly(Terms terms, Parity declared);

  static SparseSymPoly constant(const Rational& c);
  static SparseSymPoly monomial(int exponent, const Rational& c = Rational(1));

  const Terms& terms() const noexcept { return terms_; }
  Parity parity() const noexcept { return parity_; }
  int degree() const noexcept { return terms_.empty() ? -1 : terms_.rbegin()->first; }
  int lowest_exponent() const noexcept { return terms_.empty() ? -1 : terms_.begin()->first; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  Rational coefficient(int exponent) const;
  Rational leading_coefficient() const;

  double eval(double x) const;
  Rational eval_exact(const Rational& x) const;

  /// d^order/dx^order; order 1 flips a pure parity.
  SparseSymPoly derivative(int order = 1) const;
  SparseSymPoly scale(const Rational& c) const;
  /// Divide by the leading coefficient; the zero polynomial stays zero.
  SparseSymPoly monic() const;

  SparseSymPoly& operator+=(const SparseSymPoly& o);
  SparseSymPoly& operator-=(const SparseSymPoly& o);
  friend SparseSymPoly operator+(SparseSymPoly a, const SparseSymPoly& b) { return a += b; }
  friend SparseSymPoly operator-(SparseSymPoly a, const SparseSymPoly& b) { return a -= b; }
  friend SparseSymPoly operator*(const SparseSymPoly& a, const SparseSymPoly& b);
  friend bool operator==(const SparseSymPoly& a, const SparseSymPoly& b) { return a.terms_ == b.terms_; }

 private:
  SparseSymPoly(Terms terms, Parity propagated, bool /*tag*/);

  Terms terms_;
  Parity parity_ = Parity::none;
};

/// x^prefactor_exponent * base(x^inner_exponent).
SparseSymPoly compose_power(const SparseSymPoly& base, int inner_exponent, int prefactor_exponent);

/**
 * @brief Floating-point snapshot of a polynomial for repeated evaluation.
 *
 * Evaluation runs in long double. `eval_log` returns sign and log magnitude
 * and never overflows: for |x| > 1 it works on x^-deg P(x) as a polynomial in
 * 1/x, for |x| <= 1 on x^-low P(x).
 */
class NumericPoly {
 public:
  NumericPoly() = default;
  explicit NumericPoly(const SparseSymPoly& p);

  long double eval(long double x) const;
  LogScaled eval_log(double x) const;
  int degree() const noexcept { return terms_.empty() ? -1 : terms_.back().first; }
  bool is_zero() const noexcept { return terms_.empty(); }

 private:
  std::vector<std::pair<int, long double>> terms_;  // ascending exponent
};

/// {"parity": ..., "terms": [{"exp": e, "num": "...", "den": "..."}]}, exponents increasing.
nlohmann::json to_json(const SparseSymPoly& p);
/// to_json dumped with keys in schema order (parity, terms; exp, num, den).
std::string to_json_string(const SparseSymPoly& p);
/// Inverse of to_json; validates the schema and the declared parity.
SparseSymPoly poly_from_json(const nlohmann::json& j);
/// Human-readable form such as "395/2 x^2 - 3/2".
std::string to_text(const SparseSymPoly& p);

}  // namespace finortho

#endif  // FINORTHO_POLYCORE_HPP
