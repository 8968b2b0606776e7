#include "finortho/sturm.hpp"

#include <cmath>
#include <limits>

#include "finortho/incomplete.hpp"

namespace finortho {

namespace {

double log1p_power(double ax, int power) {
  // log(1 + ax^power) for ax >= 0 without overflow.
  if (ax <= 1.0) return std::log1p(std::pow(ax, power));
  return power * std::log(ax) + std::log1p(std::pow(ax, -power));
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

bool SLCoeffs::symmetric_form() const {
  const bool c_single = C.term_count() == 1 && C.leading_coefficient().sign() > 0 && C.parity() == Parity::even;
  return A.parity() == Parity::even && (B.is_zero() || B.parity() == Parity::odd) && c_single;
}

SparseSymPoly residual(const SLCoeffs& eq, const SparseSymPoly& y, long n) {
  const Rational lambda = eq.lambda(n);
  const SparseSymPoly potential = eq.C.scale(lambda) + SparseSymPoly::constant(eq.D + Rational(sigma(n)) * eq.E);
  return eq.A * y.derivative(2) + eq.B * y.derivative(1) + potential * y;
}

double relative_residual(const SLCoeffs& eq, const SparseSymPoly& y, long n) {
  const Rational lambda = eq.lambda(n);
  const SparseSymPoly potential = eq.C.scale(lambda) + SparseSymPoly::constant(eq.D + Rational(sigma(n)) * eq.E);
  const SparseSymPoly parts[3] = {eq.A * y.derivative(2), eq.B * y.derivative(1), potential * y};
  std::map<int, double> scale;
  for (const auto& part : parts)
    for (const auto& [e, c] : part.terms()) scale[e] += std::fabs(c.to_double());
  double max_scale = 0.0;
  for (const auto& [e, v] : scale) max_scale = std::max(max_scale, v);
  const SparseSymPoly res = parts[0] + parts[1] + parts[2];
  double max_res = 0.0;
  for (const auto& [e, c] : res.terms()) max_res = std::max(max_res, std::fabs(c.to_double()));
  if (max_scale == 0.0) return max_res == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return max_res / max_scale;
}

// ------------------------------------------------------------------ weights

Support support_of(const WeightSpec& w) {
  return std::visit(overloaded{
                        [](const HalfLineM&) { return Support::half_line; },
                        [](const HalfLineN&) { return Support::half_line; },
                        [](const auto&) { return Support::line; },
                    },
                    w);
}

bool is_even_weight(const WeightSpec& w) {
  return std::visit(overloaded{
                        [](const JacobiType&) { return true; },
                        [](const BesselType&) { return true; },
                        [](const LineI&) { return true; },
                        [](const LineJ& j) { return j.q.is_zero(); },
                        [](const auto&) { return false; },
                    },
                    w);
}

double log_weight(const WeightSpec& w, double x) {
  constexpr double kNegInf = -std::numeric_limits<double>::infinity();
  const double ax = std::fabs(x);
  return std::visit(
      overloaded{
          [&](const JacobiType& j) {
            return j.a.to_double() * 2.0 * std::log(ax) + j.b.to_double() * log1p_power(ax, 2 * j.m);
          },
          [&](const BesselType& b) {
            if (ax == 0.0) return kNegInf;
            return b.a.to_double() * 2.0 * std::log(ax) - std::pow(ax, -2 * b.m);
          },
          [&](const HalfLineM& h) {
            if (x < 0.0) return kNegInf;
            return h.q.to_double() * std::log(x) - (h.p + h.q).to_double() * std::log1p(x);
          },
          [&](const HalfLineN& h) {
            if (x <= 0.0) return kNegInf;
            return h.p.to_double() * std::log(x) - 1.0 / x;
          },
          [&](const LineI& i) { return -(i.p.to_double() - 0.5) * log1p_power(ax, 2); },
          [&](const LineJ& j) { return -j.p.to_double() * log1p_power(ax, 2) + j.q.to_double() * std::atan(x); },
      },
      w);
}

nlohmann::json to_json(const WeightSpec& w) {
  return std::visit(overloaded{
                        [](const JacobiType& j) -> nlohmann::json {
                          return {{"type", "jacobi"}, {"a", j.a.to_string()}, {"b", j.b.to_string()}, {"m", j.m}};
                        },
                        [](const BesselType& b) -> nlohmann::json {
                          return {{"type", "bessel"}, {"a", b.a.to_string()}, {"m", b.m}};
                        },
                        [](const HalfLineM& h) -> nlohmann::json {
                          return {{"type", "halfline_m"}, {"p", h.p.to_string()}, {"q", h.q.to_string()}};
                        },
                        [](const HalfLineN& h) -> nlohmann::json {
                          return {{"type", "halfline_n"}, {"p", h.p.to_string()}};
                        },
                        [](const LineI& i) -> nlohmann::json { return {{"type", "line_i"}, {"p", i.p.to_string()}}; },
                        [](const LineJ& j) -> nlohmann::json {
                          return {{"type", "line_j"}, {"p", j.p.to_string()}, {"q", j.q.to_string()}};
                        },
                    },
                    w);
}

bool operator==(const JacobiType& l, const JacobiType& r) { return l.a == r.a && l.b == r.b && l.m == r.m; }
bool operator==(const BesselType& l, const BesselType& r) { return l.a == r.a && l.m == r.m; }

WeightSpec weight_of(const SLCoeffs& eq) {
  const auto& A = eq.A.terms();
  const auto& B = eq.B.terms();
  auto only_exponents = [&](int e1, int e2) {
    for (const auto& [e, c] : B)
      if (e != e1 && e != e2) return false;
    return true;
  };
  auto c_is_power = [&](int e) { return eq.C == SparseSymPoly::monomial(e); };

  // A = x^2 + x^{2m+2}: B = 2x((a + m b + 1) x^{2m} + a - m + 1).
  if (A.size() == 2 && A.begin()->first == 2 && A.begin()->second == Rational(1) &&
      A.rbegin()->second == Rational(1) && A.rbegin()->first % 2 == 0 && A.rbegin()->first >= 4) {
    const int m = (A.rbegin()->first - 2) / 2;
    if (!only_exponents(1, 2 * m + 1) || !c_is_power(2 * m))
      throw UnsupportedShapeError("B or C does not match A = x^2 (1 + x^2m)");
    const Rational a = eq.B.coefficient(1) / Rational(2) + Rational(m - 1);
    const Rational b = (eq.B.coefficient(2 * m + 1) / Rational(2) - a - Rational(1)) / Rational(m);
    return JacobiType{a, b, m};
  }
  // A = x^{2m+2}: B = 2x((a + 1) x^{2m} + m).
  if (A.size() == 1 && A.begin()->second == Rational(1) && A.begin()->first % 2 == 0 && A.begin()->first >= 4) {
    const int m = (A.begin()->first - 2) / 2;
    if (!only_exponents(1, 2 * m + 1) || !c_is_power(2 * m) || eq.B.coefficient(1) != Rational(2 * m))
      throw UnsupportedShapeError("B or C does not match A = x^{2m+2}");
    const Rational a = eq.B.coefficient(2 * m + 1) / Rational(2) - Rational(1);
    return BesselType{a, m};
  }
  throw UnsupportedShapeError("weight derivation supports only A = x^2(1+x^2m) and A = x^(2m+2), got A = " +
                              to_text(eq.A));
}

// ------------------------------------------------------------ boundary decay

bool boundary_decay_ok(const PhiParams& prm, long n, long k) {
  const long big = std::max(n, k);
  const Rational lhs = Rational(2 * prm.m * big) + Rational(2) * prm.a + Rational(2 * prm.m) * prm.b +
                       Rational(4 * prm.s + 1) +
                       Rational((2 * prm.r - 2 * prm.s - prm.m + 1) * (sigma(n) + sigma(k)));
  return lhs.sign() < 0;
}

bool boundary_decay_ok(const PsiParams& prm, long n, long k) {
  const long big = std::max(n, k);
  const Rational lhs = Rational(2 * prm.m * big) + Rational(2) * prm.a + Rational(4 * prm.s + 1) +
                       Rational((2 * prm.r - 2 * prm.s - prm.m + 1) * (sigma(n) + sigma(k)));
  return lhs.sign() < 0;
}

}  // namespace finortho
