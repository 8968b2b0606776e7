#include <doctest.h>

#include "finortho/family.hpp"

using namespace finortho;
using nlohmann::json;

TEST_CASE("kind names") {
  CHECK(parse_kind("PSI") == FamilyKind::Psi);
  CHECK(parse_kind("phi") == FamilyKind::Phi);
  CHECK(parse_kind("m") == FamilyKind::M);
  CHECK(kind_name(FamilyKind::J) == "J");
  CHECK(kind_name(FamilyKind::Psi) == "psi");
  CHECK_THROWS_AS(parse_kind("bessel"), ParameterError);
}

TEST_CASE("parameter values from JSON") {
  CHECK(rational_from_json(json("-0.5"), "a") == Rational(-1, 2));
  CHECK(rational_from_json(json("1/3"), "a") == Rational(1, 3));
  CHECK(rational_from_json(json(-51), "a") == Rational(-51));
  CHECK(rational_from_json(json(0.25), "a") == Rational(1, 4));
  CHECK_THROWS_AS(rational_from_json(json(true), "a"), ParameterError);
  CHECK_THROWS_AS(rational_from_json(json("x"), "a"), ParameterError);
}

TEST_CASE("construction checks keys") {
  CHECK_THROWS_AS(make_family("M", json{{"p", "10"}}), ParameterError);
  CHECK_THROWS_AS(make_family("N", json{{"p", "-5"}, {"q", "0"}}), ParameterError);
  CHECK_THROWS_AS(make_family("psi", json{{"a", "-51"}, {"mode", "loose"}}), ParameterError);
  CHECK_THROWS_AS(make_family("psi", json{{"a", "-51"}, {"m", "1/2"}}), ParameterError);
  CHECK_THROWS_AS(make_family("phi", json::array()), ParameterError);
}

TEST_CASE("psi family at the worked example") {
  const auto fam = make_family("psi", json{{"a", "-51"}, {"m", 2}, {"r", "3"}, {"s", 1}});
  CHECK(fam->kind() == FamilyKind::Psi);
  CHECK(fam->max_index() == 22);
  CHECK(fam->bound() == Rational(91, 4));
  CHECK(fam->admissible(22));
  CHECK_FALSE(fam->admissible(23));
  CHECK(fam->expected_degree(3) == 11);
  CHECK(fam->parity_by_index());
  CHECK(fam->even_weight());
  CHECK(fam->support() == Support::line);
  CHECK(fam->scope().empty());
  CHECK(fam->parameters()["a"] == "-51");
  const auto chains = fam->chains(5);
  REQUIRE(chains.size() == 2);
  CHECK(chains[0] == std::vector<long>{0, 2, 4});
  CHECK(chains[1] == std::vector<long>{1, 3, 5});
  CHECK(fam->decay_ok(22, 21));
}

TEST_CASE("classical families through the common interface") {
  const auto m = make_family("M", json{{"p", "10"}, {"q", "0"}});
  CHECK(m->max_index() == 4);
  CHECK(m->norm_square(0).to_double() == doctest::Approx(1.0 / 9));
  CHECK(m->support() == Support::half_line);
  CHECK(m->chains(3) == std::vector<std::vector<long>>{{0, 1, 2, 3}});
  CHECK(m->conditions().size() == 1);

  const auto j = make_family("J", json{{"p", "4"}, {"q", "1"}});
  CHECK_FALSE(j->exact_coefficients());
  CHECK_FALSE(j->parity_by_index());
  CHECK_FALSE(j->even_weight());
  const auto j0 = make_family("J", json{{"p", "4"}, {"q", "0"}});
  CHECK(j0->parity_by_index());

  const auto i = make_family("I", json{{"p", "2"}});
  CHECK(i->norm_square(0).to_double() == doctest::Approx(2.0));
}

TEST_CASE("lenient mode widens the parameter range and marks the scope") {
  const json prm{{"a", "1/4"}, {"b", "-30"}};
  const auto strict = make_family("phi", prm);
  CHECK_THROWS_AS(strict->max_index(), ParameterError);
  json lenient = prm;
  lenient["mode"] = "lenient";
  const auto fam = make_family("phi", lenient);
  CHECK(fam->max_index() > 0);
  CHECK(fam->scope() == "outside-strict-conditions");
}

TEST_CASE("inadmissible parameters still construct") {
  const auto fam = make_family("phi", json{{"a", "1"}, {"b", "1"}});
  CHECK_THROWS_AS(fam->max_index(), ParameterError);
  bool any_fails = false;
  for (const auto& c : fam->conditions()) any_fails = any_fails || !c.holds;
  CHECK(any_fails);
}
