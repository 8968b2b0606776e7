#include <doctest.h>

#include "finortho/incomplete.hpp"
#include "finortho/sturm.hpp"

using namespace finortho;

namespace {
const PhiParams phi_ref{Rational(1), Rational(-200), 1, 0, 0};
const PsiParams psi_ref{Rational(-51), 2, 3, 1};

// Independent statement of the boundary inequality for the pair (n, k).
bool decay_phi(const PhiParams& p, long n, long k) {
  const long big = std::max(n, k);
  const Rational lhs = Rational(2 * p.m * big) + Rational(2) * p.a + Rational(2 * p.m) * p.b + Rational(4 * p.s + 1) +
                       Rational((2 * p.r - 2 * p.s - p.m + 1) * (sigma(n) + sigma(k)));
  return lhs < Rational(0);
}
bool decay_psi(const PsiParams& p, long n, long k) {
  const long big = std::max(n, k);
  const Rational lhs = Rational(2 * p.m * big) + Rational(2) * p.a + Rational(4 * p.s + 1) +
                       Rational((2 * p.r - 2 * p.s - p.m + 1) * (sigma(n) + sigma(k)));
  return lhs < Rational(0);
}
}  // namespace

TEST_CASE("parity index") {
  CHECK(sigma(0) == 0);
  CHECK(sigma(1) == 1);
  CHECK(sigma(2) == 0);
  CHECK(sigma(13) == 1);
}

TEST_CASE("residual vanishes for the family member and not for a wrong candidate") {
  const SLCoeffs eq = phi_sl_equation(phi_ref);
  CHECK(eq.symmetric_form());
  CHECK(residual(eq, phi_poly(2, phi_ref), 2).is_zero());
  CHECK(relative_residual(eq, phi_poly(2, phi_ref), 2) == 0.0);
  const SparseSymPoly wrong = SparseSymPoly::monomial(2 * phi_ref.s + 2);
  CHECK_FALSE(residual(eq, wrong, 0).is_zero());
  CHECK(relative_residual(eq, wrong, 0) > 1e-3);
  CHECK(residual(psi_sl_equation(psi_ref), psi_poly(2, psi_ref), 2).is_zero());
}

TEST_CASE("equation coefficients") {
  const SLCoeffs phi = phi_sl_equation(PhiParams{Rational(2), Rational(-40), 3, 1, 0});
  CHECK(phi.A.terms().size() == 2);
  CHECK(phi.A.coefficient(2) == Rational(1));
  CHECK(phi.A.coefficient(8) == Rational(1));
  CHECK(phi.D.is_zero());
  const SLCoeffs psi = psi_sl_equation(PsiParams{Rational(-20), 1, 2, 2});
  CHECK(psi.E == Rational(-2));
  CHECK(psi_sl_equation(PsiParams{Rational(-20), 1, 2, 0}).D.is_zero());
}

TEST_CASE("weight recovered from the equation") {
  const WeightSpec wphi = weight_of(phi_sl_equation(phi_ref));
  REQUIRE(std::holds_alternative<JacobiType>(wphi));
  CHECK(std::get<JacobiType>(wphi) == JacobiType{Rational(1), Rational(-200), 1});
  const WeightSpec wpsi = weight_of(psi_sl_equation(psi_ref));
  REQUIRE(std::holds_alternative<BesselType>(wpsi));
  CHECK(std::get<BesselType>(wpsi) == BesselType{Rational(-51), 2});

  SLCoeffs bad = phi_sl_equation(phi_ref);
  bad.A = SparseSymPoly::monomial(3);
  CHECK_THROWS_AS(weight_of(bad), UnsupportedShapeError);
}

TEST_CASE("weights in log form") {
  const WeightSpec j = JacobiType{Rational(1), Rational(-200), 1};
  CHECK(log_weight(j, 0.5) == doctest::Approx(2 * std::log(0.5) - 200 * std::log1p(0.25)));
  CHECK(log_weight(j, -0.5) == log_weight(j, 0.5));
  const WeightSpec b = BesselType{Rational(-51), 2};
  CHECK(log_weight(b, 1.3) == doctest::Approx(-102 * std::log(1.3) - std::pow(1.3, -4)));
  CHECK(std::isinf(log_weight(b, 0.0)));
  CHECK(log_weight(HalfLineM{Rational(10), Rational(0)}, 2.0) == doctest::Approx(-10 * std::log(3.0)));
  CHECK(std::isinf(log_weight(HalfLineM{Rational(10), Rational(0)}, -1.0)));
  CHECK(log_weight(HalfLineN{Rational(-5)}, 2.0) == doctest::Approx(-5 * std::log(2.0) - 0.5));
  CHECK(log_weight(LineI{Rational(2)}, 1.0) == doctest::Approx(-1.5 * std::log(2.0)));
  CHECK(log_weight(LineJ{Rational(4), Rational(1)}, 1.0) == doctest::Approx(-4 * std::log(2.0) + std::atan(1.0)));

  CHECK(support_of(j) == Support::line);
  CHECK(support_of(HalfLineN{Rational(-5)}) == Support::half_line);
  CHECK(is_even_weight(j));
  CHECK(is_even_weight(LineJ{Rational(4), Rational(0)}));
  CHECK_FALSE(is_even_weight(LineJ{Rational(4), Rational(1)}));
  CHECK(to_json(b)["type"] == "bessel");
}

TEST_CASE("boundary decay at the worked examples") {
  CHECK(boundary_decay_ok(phi_ref, 198, 198));
  CHECK_FALSE(boundary_decay_ok(phi_ref, 199, 199));
  CHECK(boundary_decay_ok(psi_ref, 22, 21));
}

TEST_CASE("boundary decay agrees with the inequality on a grid") {
  const std::vector<PhiParams> phis = {phi_ref, {Rational(2), Rational(-13), 2, 1, 1}, {Rational(0), Rational(-10), 1}};
  for (const auto& p : phis)
    for (long n = 0; n < 40; ++n)
      for (long k = 0; k <= n; ++k) CHECK(boundary_decay_ok(p, n, k) == decay_phi(p, n, k));
  const std::vector<PsiParams> psis = {psi_ref, {Rational(-20), 1, 0, 0}, {Rational(-30), 3, 2, 1}};
  for (const auto& p : psis)
    for (long n = 0; n < 40; ++n)
      for (long k = 0; k <= n; ++k) CHECK(boundary_decay_ok(p, n, k) == decay_psi(p, n, k));
}
