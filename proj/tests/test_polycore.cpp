#include <doctest.h>

#include "finortho/polycore.hpp"

using namespace finortho;

namespace {
SparseSymPoly poly(std::initializer_list<std::pair<int, Rational>> terms) {
  SparseSymPoly::Terms t;
  for (const auto& [e, c] : terms) t[e] = c;
  return SparseSymPoly(t);
}
const Rational one(1);
}  // namespace

TEST_CASE("evaluation") {
  CHECK(SparseSymPoly::constant(one).eval(7.0) == 1.0);
  const SparseSymPoly m1 = poly({{1, 8}, {0, -1}});
  CHECK(m1.eval(1.0) == 7.0);
  CHECK(m1.eval_exact(Rational(1, 2)) == Rational(3));
  CHECK(SparseSymPoly::monomial(2).eval(-3.0) == 9.0);
}

TEST_CASE("parity is inferred and propagated") {
  CHECK(poly({{2, 1}, {0, 3}}).parity() == Parity::even);
  CHECK(poly({{3, 1}, {1, 3}}).parity() == Parity::odd);
  CHECK(poly({{2, 1}, {1, 3}}).parity() == Parity::none);
  const SparseSymPoly prod = SparseSymPoly::monomial(2) * SparseSymPoly::monomial(3);
  CHECK(prod == SparseSymPoly::monomial(5));
  CHECK(prod.parity() == Parity::odd);
  CHECK(parity_of_index(4) == Parity::even);
  CHECK(parity_of_index(7) == Parity::odd);
  CHECK_THROWS_AS(SparseSymPoly(SparseSymPoly::Terms{{1, one}}, Parity::even), ParameterError);
}

TEST_CASE("derivatives") {
  const SparseSymPoly x4 = SparseSymPoly::monomial(4);
  CHECK(x4.derivative() == SparseSymPoly::monomial(3, Rational(4)));
  CHECK(x4.derivative(2) == SparseSymPoly::monomial(2, Rational(12)));
  CHECK(x4.derivative(5).is_zero());
  const SparseSymPoly phi2 = poly({{2, Rational(395, 2)}, {0, Rational(-3, 2)}});
  CHECK(phi2.derivative() == SparseSymPoly::monomial(1, Rational(395)));
}

TEST_CASE("ring operations") {
  const SparseSymPoly p = poly({{2, 1}, {0, 1}});
  CHECK((p - p).is_zero());
  CHECK((p - p).degree() == -1);
  CHECK((p + p) == p.scale(Rational(2)));
  CHECK(poly({{1, 1}, {0, -1}}).scale(Rational(2)) == poly({{1, 2}, {0, -2}}));
  CHECK(p * p == poly({{4, 1}, {2, 2}, {0, 1}}));
  CHECK(poly({{3, 4}, {1, 2}}).monic() == poly({{3, 1}, {1, Rational(1, 2)}}));
  CHECK(poly({{3, 4}, {1, 2}}).leading_coefficient() == Rational(4));
  CHECK(poly({{3, 4}, {1, 2}}).lowest_exponent() == 1);
  CHECK(poly({{3, 4}, {1, 2}}).coefficient(2).is_zero());
}

TEST_CASE("composition with a power") {
  const SparseSymPoly t_minus_1 = poly({{1, 1}, {0, -1}});
  CHECK(compose_power(t_minus_1, 2, 1) == poly({{3, 1}, {1, -1}}));
  CHECK(compose_power(SparseSymPoly::constant(one), 6, 4) == SparseSymPoly::monomial(4));
  CHECK(compose_power(poly({{1, 8}, {0, -1}}), 2, 0) == poly({{2, 8}, {0, -1}}));
  CHECK(compose_power(t_minus_1, 2, 1).parity() == Parity::odd);
}

TEST_CASE("numeric evaluation in log form") {
  const SparseSymPoly p = poly({{5, Rational(3, 7)}, {3, -2}, {1, Rational(1, 9)}});
  const NumericPoly np(p);
  CHECK(np.degree() == 5);
  for (double x : {-3.5, -1.0, -0.2, 0.0, 0.7, 2.0, 40.0}) {
    CAPTURE(x);
    const double direct = p.eval(x);
    const LogScaled v = np.eval_log(x);
    CHECK(v.to_double() == doctest::Approx(direct).epsilon(1e-13));
    CHECK(static_cast<double>(np.eval(x)) == doctest::Approx(direct).epsilon(1e-13));
  }
  // large arguments stay finite in log form
  const LogScaled big = NumericPoly(SparseSymPoly::monomial(90)).eval_log(1e5);
  CHECK(big.sign == 1);
  CHECK(big.log_abs == doctest::Approx(90 * std::log(1e5)));
}

TEST_CASE("JSON round trip and schema order") {
  const SparseSymPoly p = poly({{6, Rational(93, 4)}, {2, -1}});
  const nlohmann::json j = to_json(p);
  CHECK(j["parity"] == "even");
  CHECK(j["terms"].size() == 2);
  CHECK(poly_from_json(j) == p);
  CHECK(poly_from_json(nlohmann::json::parse(to_json_string(p))) == p);
  CHECK(to_json_string(SparseSymPoly::monomial(1)) ==
        R"({"parity":"odd","terms":[{"exp":1,"num":"1","den":"1"}]})");
  CHECK(to_json_string(SparseSymPoly()) == R"({"parity":"none","terms":[]})");
}

TEST_CASE("JSON validation") {
  auto parse = [](const char* s) { return poly_from_json(nlohmann::json::parse(s)); };
  CHECK_THROWS_AS(parse(R"({"terms":[]})"), ParameterError);
  CHECK_THROWS_AS(parse(R"({"parity":"odd","terms":[{"exp":2,"num":"1","den":"1"}]})"), ParameterError);
  CHECK_THROWS_AS(
      parse(R"({"parity":"none","terms":[{"exp":2,"num":"1","den":"1"},{"exp":1,"num":"1","den":"1"}]})"),
      ParameterError);
  CHECK_THROWS_AS(parse(R"({"parity":"even","terms":[{"exp":0,"num":"1","den":"0"}]})"), ParameterError);
  CHECK(parse(R"({"parity":"none","terms":[{"exp":1,"num":"2","den":"4"},{"exp":2,"num":"-3","den":"1"}]})") ==
        poly({{1, Rational(1, 2)}, {2, -3}}));
}

TEST_CASE("text rendering") {
  CHECK(to_text(poly({{2, Rational(395, 2)}, {0, Rational(-3, 2)}})).find("395/2") != std::string::npos);
  CHECK(to_text(SparseSymPoly()) == "0");
}
