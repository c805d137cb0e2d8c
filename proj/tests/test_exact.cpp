#include <doctest.h>

#include <random>

#include "fano/error.hpp"
#include "fano/forms.hpp"
#include "fano/linalg.hpp"
#include "fano/poly.hpp"
#include "generators.hpp"

using namespace fano;
using fano::testing::random_poly;
using fano::testing::random_rational;

namespace {

MultiPoly P(std::string_view s, std::size_t n = 2) { return MultiPoly::parse(s, n); }

}  // namespace

TEST_CASE("rational canonical form") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(3, -6).str() == "-1/2");
  CHECK(Rational(0, 7).str() == "0");
  CHECK(Rational(0, 7).denominator() == 1);
  CHECK(Rational::parse("-10/4").str() == "-5/2");
  CHECK(Rational::parse("12").str() == "12");
  CHECK_THROWS_AS(Rational::parse("1/0"), PreconditionError);
  CHECK_THROWS_AS(Rational::parse("1/-2"), PreconditionError);
  CHECK_THROWS_AS(Rational::parse("x"), PreconditionError);
  CHECK_THROWS_AS(Rational(1, 0), PreconditionError);
  CHECK_THROWS_AS(Rational(1) / Rational(0), PreconditionError);
  CHECK_THROWS_AS(Rational(1, 2).to_long(), InconsistencyError);
}

TEST_CASE("rational print/parse round trip") {
  std::mt19937 rng(11);
  for (int i = 0; i < 100; ++i) {
    std::uniform_int_distribution<long> big(-1000000, 1000000);
    std::uniform_int_distribution<long> den(1, 99999);
    const Rational r(big(rng), den(rng));
    CHECK(Rational::parse(r.str()) == r);
    CHECK(Rational::parse(r.str()).str() == r.str());
  }
}

TEST_CASE("poly_arith examples") {
  const MultiPoly x = MultiPoly::variable(2, 0);
  const MultiPoly y = MultiPoly::variable(2, 1);
  CHECK((x + y) * (x - y) == P("x1^2 - x2^2"));
  CHECK((x * MultiPoly(2)).is_zero());
  CHECK((x + MultiPoly::constant(2, 1)).pow(3) == P("x1^3 + 3 x1^2 + 3 * x1 + 1"));
  CHECK(((x + y) * (x - y)).degree() == 2);
  CHECK_THROWS_AS(x + MultiPoly::variable(3, 0), PreconditionError);
  CHECK_THROWS_AS(x * MultiPoly::variable(3, 0), PreconditionError);
}

TEST_CASE("ring axioms on random samples") {
  std::mt19937 rng(2024);
  for (int i = 0; i < 100; ++i) {
    const auto a = random_poly(rng, 3, 6);
    const auto b = random_poly(rng, 3, 6);
    const auto c = random_poly(rng, 3, 6);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    if (!a.is_zero() && !b.is_zero()) CHECK((a * b).degree() == a.degree() + b.degree());
  }
}

TEST_CASE("exact_divide examples") {
  auto q = exact_divide(P("x1^2 - x2^2"), P("x1 - x2"));
  REQUIRE(std::holds_alternative<MultiPoly>(q));
  CHECK(std::get<MultiPoly>(q) == P("x1 + x2"));

  auto fail = exact_divide(P("x1^2", 1), P("x1 + 1", 1));
  REQUIRE(std::holds_alternative<DivisionFailure>(fail));
  CHECK(std::get<DivisionFailure>(fail).remainder == P("1", 1));

  auto zero = exact_divide(MultiPoly(2), P("x1 + 3 x2"));
  REQUIRE(std::holds_alternative<MultiPoly>(zero));
  CHECK(std::get<MultiPoly>(zero).is_zero());

  CHECK_THROWS_AS(exact_divide(P("x1"), MultiPoly(2)), PreconditionError);
  CHECK_THROWS_AS(divide_or_throw(P("x1^2", 1), P("x1 + 1", 1), "test"), InconsistencyError);
}

TEST_CASE("exact_divide recovers the cofactor") {
  std::mt19937 rng(77);
  for (int i = 0; i < 100; ++i) {
    const auto f = random_poly(rng, 3, 4);
    auto g = random_poly(rng, 3, 3);
    if (g.is_zero()) g = MultiPoly::constant(3, 1);
    auto q = exact_divide(f * g, g);
    REQUIRE(std::holds_alternative<MultiPoly>(q));
    CHECK(std::get<MultiPoly>(q) == f);
  }
}

TEST_CASE("division failure witnesses f = q g + r") {
  std::mt19937 rng(5);
  for (int i = 0; i < 50; ++i) {
    const auto f = random_poly(rng, 2, 5);
    auto g = random_poly(rng, 2, 2);
    if (g.degree() < 1) g = P("x1 + x2 + 1");
    auto res = exact_divide(f, g);
    if (auto* fail = std::get_if<DivisionFailure>(&res)) {
      CHECK(fail->quotient * g + fail->remainder == f);
      CHECK_FALSE(fail->remainder.is_zero());
    }
  }
}

TEST_CASE("polynomial text format") {
  CHECK(P("x1^2 - x2^2").str() == "x1^2 - x2^2");
  CHECK(P("-3/2 * x1 x2^3 + 1").str() == "-3/2 * x1 x2^3 + 1");
  CHECK(P("2*x1*x1 + x2 x1").str() == "2 * x1^2 + x1 x2");
  CHECK(P("0").is_zero());
  CHECK(MultiPoly(2).str() == "0");
  const std::vector<std::string> names{"e", "f", "h"};
  CHECK(MultiPoly::parse("2e - 1/2 h", names).str(names) == "2 * e - 1/2 * h");
  CHECK_THROWS_AS(P("x3"), PreconditionError);
  CHECK_THROWS_AS(P("x1 +"), PreconditionError);
  CHECK_THROWS_AS(P("x1 x2 x1^"), PreconditionError);
}

TEST_CASE("polynomial print/parse round trip") {
  std::mt19937 rng(99);
  for (int i = 0; i < 100; ++i) {
    const auto p = random_poly(rng, 3, 6);
    CHECK(MultiPoly::parse(p.str(), 3) == p);
  }
}

TEST_CASE("substitution and derivatives") {
  const auto p = P("x1^2 x2 + 3 x2");
  const std::vector<MultiPoly> images{P("x1 + x2"), P("2")};
  CHECK(p.substitute(images) == P("2 x1^2 + 4 x1 x2 + 2 x2^2 + 6"));
  CHECK(p.derivative(0) == P("2 x1 x2"));
  CHECK(p.derivative(1) == P("x1^2 + 3"));
  CHECK(p.embedded(4, 1) == MultiPoly::parse("x2^2 x3 + 3 x3", 4));
}

TEST_CASE("binary and bi-forms") {
  const BinaryForm f(2, {1, 0, -1});  // t0^2 - t1^2
  CHECK(f.str() == "t0^2 - t1^2");
  CHECK((f * f).degree() == 4);
  CHECK(BinaryForm::from_poly(f.to_poly(), 2) == f);
  CHECK_THROWS_AS(BinaryForm(2, {1, 2}), PreconditionError);

  const BiForm delta = BiForm::diagonal();
  CHECK(delta.str() == "a d - b c");
  CHECK(BiForm::from_poly(delta.to_poly()) == delta);
  CHECK_THROWS_AS(BiForm::from_poly(MultiPoly::parse("a^2 + c", BiForm::variable_names())), PreconditionError);
}

TEST_CASE("divide_out_with_multiplicity") {
  const BiForm delta = BiForm::diagonal();
  const BiForm u = BiForm::from_poly(MultiPoly::parse("a c + 2 b d", BiForm::variable_names()));

  const auto m2 = divide_out_with_multiplicity(delta * delta * u, delta);
  CHECK(m2.multiplicity == 2);
  CHECK(m2.quotient == u);

  const auto m0 = divide_out_with_multiplicity(u, delta);
  CHECK(m0.multiplicity == 0);
  CHECK(m0.quotient == u);

  CHECK_THROWS_AS(divide_out_with_multiplicity(BiForm(2, 2), delta), PreconditionError);
  CHECK_THROWS_AS(divide_out_with_multiplicity(u, BiForm(1, 1)), PreconditionError);
}

TEST_CASE("exact linear algebra") {
  MatrixQ m(3, 3);
  m << Rational(1), Rational(2), Rational(3), Rational(2), Rational(4), Rational(6), Rational(1), Rational(0),
      Rational(1);
  CHECK(exact_rank(m) == 2);
  const MatrixQ ns = null_space(m);
  REQUIRE(ns.cols() == 1);
  CHECK((m * ns).isZero());
  VectorQ b(3);
  b << Rational(1), Rational(2), Rational(0);
  auto x = solve_exact(m, b);
  REQUIRE(x.has_value());
  CHECK(m * *x == b);
  b(1) = 3;
  CHECK_FALSE(solve_exact(m, b).has_value());
}
