#include "finortho/polycore.hpp"

#include <cmath>
#include <sstream>

namespace finortho {

namespace {

Parity infer_parity(const SparseSymPoly::Terms& terms) {
  if (terms.empty()) return Parity::none;
  bool any_even = false, any_odd = false;
  for (const auto& [e, c] : terms) (e % 2 == 0 ? any_even : any_odd) = true;
  if (any_even && any_odd) return Parity::none;
  return any_even ? Parity::even : Parity::odd;
}

bool consistent(const SparseSymPoly::Terms& terms, Parity p) {
  if (p == Parity::none) return true;
  const int want = p == Parity::even ? 0 : 1;
  for (const auto& [e, c] : terms)
    if (e % 2 != want) return false;
  return true;
}

Parity flip(Parity p) {
  switch (p) {
    case Parity::even: return Parity::odd;
    case Parity::odd: return Parity::even;
    default: return Parity::none;
  }
}

void erase_zeros(SparseSymPoly::Terms& terms) {
  std::erase_if(terms, [](const auto& kv) { return kv.second.is_zero(); });
}

long double ipow(long double x, int n) {
  long double result = 1.0L;
  while (n > 0) {
    if (n & 1) result *= x;
    x *= x;
    n >>= 1;
  }
  return result;
}

}  // namespace

std::string parity_name(Parity p) {
  switch (p) {
    case Parity::even: return "even";
    case Parity::odd: return "odd";
    default: return "none";
  }
}

Parity parse_parity(const std::string& name) {
  if (name == "even") return Parity::even;
  if (name == "odd") return Parity::odd;
  if (name == "none") return Parity::none;
  throw ParameterError("unknown parity '" + name + "'");
}

Parity parity_of_index(long n) { return n % 2 == 0 ? Parity::even : Parity::odd; }

SparseSymPoly::SparseSymPoly(Terms terms) : terms_(std::move(terms)) {
  erase_zeros(terms_);
  for (const auto& [e, c] : terms_)
    if (e < 0) throw ParameterError("negative exponent in polynomial");
  parity_ = infer_parity(terms_);
}

SparseSymPoly::SparseSymPoly(Terms terms, Parity declared) : SparseSymPoly(std::move(terms)) {
  if (!consistent(terms_, declared))
    throw ParameterError("polynomial terms contradict declared parity '" + parity_name(declared) + "'");
  if (declared != Parity::none) parity_ = declared;
}

SparseSymPoly::SparseSymPoly(Terms terms, Parity propagated, bool) : terms_(std::move(terms)) {
  erase_zeros(terms_);
  parity_ = (propagated != Parity::none && consistent(terms_, propagated)) ? propagated : infer_parity(terms_);
}

SparseSymPoly SparseSymPoly::constant(const Rational& c) { return SparseSymPoly({{0, c}}, Parity::even); }

SparseSymPoly SparseSymPoly::monomial(int exponent, const Rational& c) {
  return SparseSymPoly({{exponent, c}}, parity_of_index(exponent));
}

Rational SparseSymPoly::coefficient(int exponent) const {
  const auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational SparseSymPoly::leading_coefficient() const {
  return terms_.empty() ? Rational(0) : terms_.rbegin()->second;
}

double SparseSymPoly::eval(double x) const {
  return static_cast<double>(NumericPoly(*this).eval(static_cast<long double>(x)));
}

Rational SparseSymPoly::eval_exact(const Rational& x) const {
  if (terms_.empty()) return Rational(0);
  // Horner over descending exponents with gap powers.
  auto it = terms_.rbegin();
  mpq_class acc = it->second.raw();
  int prev = it->first;
  mpq_class power;
  for (++it; it != terms_.rend(); ++it) {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), x.raw().get_num_mpz_t(), static_cast<unsigned long>(prev - it->first));
    mpz_pow_ui(den.get_mpz_t(), x.raw().get_den_mpz_t(), static_cast<unsigned long>(prev - it->first));
    acc *= mpq_class(num, den);
    acc += it->second.raw();
    prev = it->first;
  }
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), x.raw().get_num_mpz_t(), static_cast<unsigned long>(prev));
  mpz_pow_ui(den.get_mpz_t(), x.raw().get_den_mpz_t(), static_cast<unsigned long>(prev));
  acc *= mpq_class(num, den);
  return Rational(acc);
}

SparseSymPoly SparseSymPoly::derivative(int order) const {
  if (order < 0) throw ParameterError("derivative order must be nonnegative");
  Terms out;
  for (const auto& [e, c] : terms_) {
    if (e < order) continue;
    mpz_class falling(1);
    for (int i = 0; i < order; ++i) falling *= e - i;
    out.emplace(e - order, c * Rational(mpq_class(falling)));
  }
  return SparseSymPoly(std::move(out), order % 2 == 0 ? parity_ : flip(parity_), true);
}

SparseSymPoly SparseSymPoly::scale(const Rational& c) const {
  Terms out;
  if (!c.is_zero())
    for (const auto& [e, v] : terms_) out.emplace(e, v * c);
  return SparseSymPoly(std::move(out), parity_, true);
}

SparseSymPoly SparseSymPoly::monic() const {
  if (terms_.empty()) return *this;
  return scale(Rational(1) / leading_coefficient());
}

SparseSymPoly& SparseSymPoly::operator+=(const SparseSymPoly& o) {
  const Parity propagated = parity_ == o.parity_ ? parity_ : Parity::none;
  for (const auto& [e, c] : o.terms_) terms_[e] += c;
  *this = SparseSymPoly(std::move(terms_), propagated, true);
  return *this;
}

SparseSymPoly& SparseSymPoly::operator-=(const SparseSymPoly& o) {
  const Parity propagated = parity_ == o.parity_ ? parity_ : Parity::none;
  for (const auto& [e, c] : o.terms_) terms_[e] -= c;
  *this = SparseSymPoly(std::move(terms_), propagated, true);
  return *this;
}

SparseSymPoly operator*(const SparseSymPoly& a, const SparseSymPoly& b) {
  SparseSymPoly::Terms out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out[ea + eb] += ca * cb;
  Parity propagated = Parity::none;
  if (a.parity_ != Parity::none && b.parity_ != Parity::none)
    propagated = a.parity_ == b.parity_ ? Parity::even : Parity::odd;
  return SparseSymPoly(std::move(out), propagated, true);
}

SparseSymPoly compose_power(const SparseSymPoly& base, int inner_exponent, int prefactor_exponent) {
  if (inner_exponent < 1) throw ParameterError("compose_power needs a positive inner exponent");
  if (prefactor_exponent < 0) throw ParameterError("compose_power needs a nonnegative prefactor exponent");
  SparseSymPoly::Terms out;
  for (const auto& [e, c] : base.terms()) out.emplace(prefactor_exponent + inner_exponent * e, c);
  return SparseSymPoly(std::move(out));
}

// ------------------------------------------------------------ NumericPoly

NumericPoly::NumericPoly(const SparseSymPoly& p) {
  terms_.reserve(p.term_count());
  for (const auto& [e, c] : p.terms()) terms_.emplace_back(e, c.to_long_double());
}

long double NumericPoly::eval(long double x) const {
  if (terms_.empty()) return 0.0L;
  auto it = terms_.rbegin();
  long double acc = it->second;
  int prev = it->first;
  for (++it; it != terms_.rend(); ++it) {
    acc = acc * ipow(x, prev - it->first) + it->second;
    prev = it->first;
  }
  return acc * ipow(x, prev);
}

LogScaled NumericPoly::eval_log(double xd) const {
  if (terms_.empty()) return LogScaled::zero();
  const long double x = xd;
  const long double ax = std::fabs(x);
  if (ax == 0.0L) {
    if (terms_.front().first != 0) return LogScaled::zero();
    return LogScaled::from_double(static_cast<double>(terms_.front().second));
  }
  const int low = terms_.front().first;
  const int deg = terms_.back().first;
  long double acc;
  int power;  // the result is acc * x^power
  if (ax <= 1.0L) {
    auto it = terms_.rbegin();
    acc = it->second;
    int prev = it->first;
    for (++it; it != terms_.rend(); ++it) {
      acc = acc * ipow(x, prev - it->first) + it->second;
      prev = it->first;
    }
    power = low;
  } else {
    const long double y = 1.0L / x;
    auto it = terms_.begin();
    acc = it->second;
    int prev = it->first;
    for (++it; it != terms_.end(); ++it) {
      acc = acc * ipow(y, it->first - prev) + it->second;
      prev = it->first;
    }
    power = deg;
  }
  if (acc == 0.0L) return LogScaled::zero();
  int sign = acc > 0 ? 1 : -1;
  if (x < 0 && (power % 2 != 0)) sign = -sign;
  return {sign, static_cast<double>(std::log(std::fabs(acc)) + power * std::log(ax))};
}

// ------------------------------------------------------------ serialization

nlohmann::json to_json(const SparseSymPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : p.terms())
    terms.push_back({{"exp", e}, {"num", c.numerator_string()}, {"den", c.denominator_string()}});
  return {{"parity", parity_name(p.parity())}, {"terms", std::move(terms)}};
}

std::string to_json_string(const SparseSymPoly& p) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [e, c] : p.terms()) {
    nlohmann::ordered_json t;
    t["exp"] = e;
    t["num"] = c.numerator_string();
    t["den"] = c.denominator_string();
    terms.push_back(std::move(t));
  }
  nlohmann::ordered_json out;
  out["parity"] = parity_name(p.parity());
  out["terms"] = std::move(terms);
  return out.dump();
}

SparseSymPoly poly_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("parity") || !j.contains("terms") || !j["terms"].is_array())
    throw ParameterError("polynomial JSON needs 'parity' and a 'terms' array");
  const Parity parity = parse_parity(j["parity"].get<std::string>());
  SparseSymPoly::Terms terms;
  int prev = -1;
  for (const auto& t : j["terms"]) {
    const int e = t.at("exp").get<int>();
    if (e <= prev) throw ParameterError("polynomial JSON exponents must be strictly increasing");
    prev = e;
    const Rational num = Rational::parse(t.at("num").get<std::string>());
    const Rational den = Rational::parse(t.at("den").get<std::string>());
    if (den.is_zero()) throw ParameterError("polynomial JSON term with zero denominator");
    terms.emplace(e, num / den);
  }
  return SparseSymPoly(std::move(terms), parity);
}

std::string to_text(const SparseSymPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    const Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == Rational(1);
    if (!unit || e == 0) os << mag;
    if (e > 0) {
      if (!unit) os << " ";
      os << "x";
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

}  // namespace finortho
