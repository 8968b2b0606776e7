#include "finortho/incomplete.hpp"

#include <algorithm>
#include <string>

#include "finortho/classical.hpp"

namespace finortho {

namespace {

Rational sign_pow(long n) { return n % 2 == 0 ? Rational(1) : Rational(-1); }

void check_shape(int m, int r, int s) {
  if (m < 1) throw ParameterError("m must be a positive integer (got " + std::to_string(m) + ")");
  if (r < 0 || s < 0) throw ParameterError("r and s must be nonnegative integers");
}

void check_index(long n) {
  if (n < 0) throw ParameterError("polynomial index must be nonnegative");
}

bool twice_even(const Rational& a) { return a.is_integer(); }

void validate_conditions(const std::vector<Condition>& conds, ParamMode mode, const std::string& family) {
  for (const auto& c : conds) {
    if (c.holds) continue;
    if (mode == ParamMode::lenient && c.name == "2a even integer") continue;
    throw ParameterError(family + " parameters violate condition " + c.name);
  }
}

// Prefactor exponent of member n: 2s on even indices, 2r+1 on odd ones.
int prefactor_exponent(long n, int r, int s) { return n % 2 == 0 ? 2 * s : 2 * r + 1; }

LogScaled fact(const Rational& z) { return real_factorial(z); }

}  // namespace

// ---------------------------------------------------------------- Phi

std::vector<Condition> PhiParams::conditions() const {
  check_shape(m, r, s);
  const Rational bound = Rational(-2 * m) * b;
  return {
      {"b < 0", b.sign() < 0},
      {"|2a+4s+1| < -2mb", (Rational(2) * a + Rational(4 * s + 1)).abs() < bound},
      {"|2a+4r+3| < -2mb", (Rational(2) * a + Rational(4 * r + 3)).abs() < bound},
      {"2a even integer", twice_even(a)},
  };
}

void PhiParams::validate() const { validate_conditions(conditions(), mode, "Phi"); }

std::pair<Rational, Rational> phi_uv(long n, const PhiParams& prm) {
  check_index(n);
  check_shape(prm.m, prm.r, prm.s);
  const Rational m(prm.m), r(prm.r), s(prm.s);
  const Rational sg = sign_pow(n);
  const Rational u = (m * (Rational(1) - prm.b) - (prm.a + s + r + Rational(1)) + sg * (r - s + Rational(1, 2))) / m;
  const Rational v = (prm.a + s + r - m + Rational(1) + sg * (s - r - Rational(1, 2))) / m;
  return {u, v};
}

SparseSymPoly phi_poly(long n, const PhiParams& prm) {
  const auto [u, v] = phi_uv(n, prm);
  const SparseSymPoly inner = m_poly(n / 2, ParamsM{u, v});
  return compose_power(inner, 2 * prm.m, prefactor_exponent(n, prm.r, prm.s));
}

long phi_degree(long n, const PhiParams& prm) {
  check_index(n);
  return prm.m * n + 2 * prm.s + (2 * prm.r - 2 * prm.s - prm.m + 1) * sigma(n);
}

Rational phi_bound(const PhiParams& prm) {
  check_shape(prm.m, prm.r, prm.s);
  const Rational two_m(2 * prm.m), two_a = Rational(2) * prm.a;
  const Rational c1 = -(two_a + Rational(4 * prm.s + 1)) / two_m - prm.b;
  const Rational c2 = -(two_a + Rational(4 * prm.r + 3)) / two_m - prm.b + Rational(1);
  const Rational c3 = -(prm.a + Rational(prm.s + prm.r + 1)) / Rational(prm.m) - prm.b + Rational(1, 2);
  return std::min({c1, c2, c3});
}

long phi_max_index(const PhiParams& prm) {
  prm.validate();
  return std::max(-1L, largest_integer_below(phi_bound(prm)));
}

bool phi_admissible(const PhiParams& prm, long n, long k) {
  const long top = phi_max_index(prm);
  return n >= 0 && k >= 0 && n <= top && k <= top;
}

LogScaled phi_norm(long n, const PhiParams& prm) {
  check_index(n);
  if (!phi_admissible(prm, n, n))
    throw AdmissibilityError("Phi_" + std::to_string(n) + " lies beyond the finite range (max index " +
                             std::to_string(phi_max_index(prm)) + ")");
  const int sg = sigma(n);
  const Rational m(prm.m), half_n(n, 2);
  const Rational g = (Rational(2) * prm.a + Rational(4 * prm.s + 1)) / Rational(2 * prm.m);
  const Rational theta = Rational(4 * prm.r - 4 * prm.s - prm.m + 2, 2 * prm.m) * Rational(sg);
  const Rational half_even = Rational((n - sg) / 2);
  const LogScaled num = fact(half_even) * fact(-(half_n + prm.b + g + theta)) * fact(half_n - Rational(1) + g + theta);
  const Rational lin = -(m * (Rational(n) + prm.b) + prm.a + Rational(2 * prm.s) + Rational(1, 2) +
                         Rational((2 * prm.r - 2 * prm.s - prm.m + 1) * sg));
  const LogScaled den = LogScaled::from_rational(lin) * fact(-(half_even + prm.b + Rational(1)));
  return num / den;
}

SLCoeffs phi_sl_equation(const PhiParams& prm) {
  check_shape(prm.m, prm.r, prm.s);
  const int m = prm.m, r = prm.r, s = prm.s;
  const Rational a = prm.a, b = prm.b;
  SLCoeffs eq;
  eq.A = SparseSymPoly({{2, Rational(1)}, {2 * m + 2, Rational(1)}}, Parity::even);
  eq.B = SparseSymPoly({{1, Rational(2) * (a - Rational(m) + Rational(1))},
                        {2 * m + 1, Rational(2) * (a + Rational(m) * b + Rational(1))}},
                       Parity::odd);
  eq.C = SparseSymPoly::monomial(2 * m);
  eq.D = Rational(-2 * s) * (Rational(2) * (a + Rational(s - m)) + Rational(1));
  eq.E = Rational(2 * s) * (Rational(2 * s - 2 * m + 1) + Rational(2) * a) -
         Rational(2 * (2 * r + 1)) * (Rational(r - m + 1) + a);
  eq.lambda = [=](long n) {
    const Rational mn(m * n);
    const Rational two_mb = Rational(2 * m) * b, two_a = Rational(2) * a;
    return -(Rational(2 * s) + mn) * (Rational(2 * s) + mn + two_mb + two_a + Rational(1)) -
           Rational(2 * r - 2 * s - m + 1) *
               (Rational(2 * r + 2 * s - m + 2) + two_mb + two_a + Rational(2) * mn) * Rational(sigma(n));
  };
  return eq;
}

WeightSpec phi_weight(const PhiParams& prm) {
  check_shape(prm.m, prm.r, prm.s);
  return JacobiType{prm.a, prm.b, prm.m};
}

// ---------------------------------------------------------------- Psi

std::vector<Condition> PsiParams::conditions() const {
  check_shape(m, r, s);
  const Rational two_a = Rational(2) * a;
  return {
      {"2a+4s+1 < 0", (two_a + Rational(4 * s + 1)).sign() < 0},
      {"2a+4r+3 < 2m", two_a + Rational(4 * r + 3) < Rational(2 * m)},
      {"2(a+s+r+1) < m", Rational(2) * (a + Rational(s + r + 1)) < Rational(m)},
      {"2a even integer", twice_even(a)},
  };
}

void PsiParams::validate() const { validate_conditions(conditions(), mode, "Psi"); }

Rational psi_p_inner(long n, const PsiParams& prm) {
  check_index(n);
  check_shape(prm.m, prm.r, prm.s);
  return (prm.a + Rational(prm.s + prm.r + 1) + sign_pow(n) * (Rational(prm.s - prm.r) - Rational(1, 2))) /
             Rational(prm.m) -
         Rational(1);
}

SparseSymPoly psi_poly(long n, const PsiParams& prm) {
  const SparseSymPoly inner = n_poly(n / 2, ParamsN{psi_p_inner(n, prm)});
  return compose_power(inner, 2 * prm.m, prefactor_exponent(n, prm.r, prm.s));
}

long psi_degree(long n, const PsiParams& prm) {
  check_index(n);
  return prm.m * n + 2 * prm.s + (2 * prm.r - 2 * prm.s - prm.m + 1) * sigma(n);
}

Rational psi_bound(const PsiParams& prm) {
  check_shape(prm.m, prm.r, prm.s);
  const Rational two_m(2 * prm.m), two_a = Rational(2) * prm.a;
  const Rational c1 = -(two_a + Rational(4 * prm.s + 1)) / two_m;
  const Rational c2 = -(two_a + Rational(4 * prm.r + 3)) / two_m + Rational(1);
  const Rational c3 = -(prm.a + Rational(prm.s + prm.r + 1)) / Rational(prm.m) + Rational(1, 2);
  return std::min({c1, c2, c3});
}

long psi_max_index(const PsiParams& prm) {
  prm.validate();
  return std::max(-1L, largest_integer_below(psi_bound(prm)));
}

bool psi_admissible(const PsiParams& prm, long n, long k) {
  const long top = psi_max_index(prm);
  return n >= 0 && k >= 0 && n <= top && k <= top;
}

LogScaled psi_norm(long n, const PsiParams& prm) {
  check_index(n);
  if (!psi_admissible(prm, n, n))
    throw AdmissibilityError("Psi_" + std::to_string(n) + " lies beyond the finite range (max index " +
                             std::to_string(psi_max_index(prm)) + ")");
  const int sg = sigma(n);
  const long mn = static_cast<long>(prm.m) * n;
  const Rational half_even = Rational((n - sg) / 2);
  const Rational arg = -(Rational(2) * prm.a + Rational(4 * prm.s + 1) + Rational(mn)) / Rational(2 * prm.m) +
                       Rational(4 * prm.s - 4 * prm.r + prm.m - 2, 2 * prm.m) * Rational(sg);
  const Rational lin = -(prm.a + Rational(2 * prm.s) + Rational(mn) + Rational(1, 2) +
                         Rational((2 * prm.r - 2 * prm.s - prm.m + 1) * sg));
  return fact(half_even) * fact(arg) / LogScaled::from_rational(lin);
}

SLCoeffs psi_sl_equation(const PsiParams& prm) {
  check_shape(prm.m, prm.r, prm.s);
  const int m = prm.m, r = prm.r, s = prm.s;
  const Rational a = prm.a;
  SLCoeffs eq;
  eq.A = SparseSymPoly::monomial(2 * m + 2);
  eq.B = SparseSymPoly({{1, Rational(2 * m)}, {2 * m + 1, Rational(2) * (a + Rational(1))}}, Parity::odd);
  eq.C = SparseSymPoly::monomial(2 * m);
  eq.D = Rational(-4 * m * s);
  eq.E = Rational(2 * m * (2 * s - 2 * r - 1));
  eq.lambda = [=](long n) {
    const Rational mn(m * n);
    const Rational two_a = Rational(2) * a;
    return -(Rational(2 * s) + mn) * (Rational(2 * s + 1) + mn + two_a) -
           Rational(2 * r - 2 * s - m + 1) * (Rational(2 * r + 2 * s - m + 2) + two_a + Rational(2) * mn) *
               Rational(sigma(n));
  };
  return eq;
}

WeightSpec psi_weight(const PsiParams& prm) {
  check_shape(prm.m, prm.r, prm.s);
  return BesselType{prm.a, prm.m};
}

}  // namespace finortho
