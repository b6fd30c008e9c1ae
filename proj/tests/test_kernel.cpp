#include <catch2/catch_amalgamated.hpp>

#include "test_util.hpp"

using namespace pgcheck;
using pgtest::random_poly;

namespace {

// Independent derivative oracle: term-by-term power rule on the raw map.
Poly derivative_oracle(const Poly& p, size_t i) {
  Poly out(p.vars(), p.laurent());
  for (const auto& [e, c] : p.terms()) {
    if (e[i] == 0) continue;
    Exponents d = e;
    d[i] -= 1;
    out += Poly::monomial(p.vars(), p.laurent(), d, c * Scalar(e[i]));
  }
  return out;
}

}  // namespace

TEST_CASE("gaussian rational scalars") {
  Scalar i = Scalar::i();
  REQUIRE(i * i == Scalar(-1));
  REQUIRE((Scalar(1) + i) * (Scalar(1) - i) == Scalar(2));
  REQUIRE(Scalar(1) / (Scalar(1) + i) == Scalar(1, 2) - Scalar(1, 2) * i);
  REQUIRE(Scalar(2, 4) == Scalar(1, 2));
  REQUIRE(Scalar(-3, -6).str() == "1/2");
  REQUIRE((Scalar(1, 2) + Scalar(1, 3)).str() == "5/6");
  REQUIRE(parse_scalar("3+2*i") == Scalar(3) + Scalar(2) * Scalar::i());
  REQUIRE(parse_scalar("-i") == -Scalar::i());
  REQUIRE(parse_scalar("-7/2") == Scalar(-7, 2));
}

TEST_CASE("parse_expression on the documented examples") {
  SECTION("bracket-table entry") {
    Poly p = parse_poly("x*y - 2*z", {"x", "y", "z"});
    REQUIRE(p.terms().size() == 2);
    REQUIRE(p.terms().at({1, 1, 0}) == Scalar(1));
    REQUIRE(p.terms().at({0, 0, 1}) == Scalar(-2));
  }
  SECTION("zero polynomial") {
    REQUIRE(parse_poly("0", {"x"}).terms().empty());
  }
  SECTION("laurent entry") {
    Poly p = parse_poly("a^2 - a^-2", {"a", "b", "c"}, true);
    REQUIRE(p.terms().size() == 2);
    REQUIRE(p.terms().at({2, 0, 0}) == Scalar(1));
    REQUIRE(p.terms().at({-2, 0, 0}) == Scalar(-1));
  }
}

TEST_CASE("parser errors carry positions") {
  REQUIRE_THROWS_AS(parse_poly("x +* y", {"x", "y"}), ParseError);
  REQUIRE_THROWS_AS(parse_poly("x + q", {"x", "y"}), ParseError);
  REQUIRE_THROWS_AS(parse_poly("1/x", {"x"}), ParseError);       // division by variable
  REQUIRE_THROWS_AS(parse_poly("x^-1", {"x"}), ParseError);      // poly mode
  REQUIRE_THROWS_AS(parse_poly("1/(x-x)", {"x"}, true), ParseError);  // zero divisor
  REQUIRE_THROWS_AS(parse_ratfunc("1/(x-x)", {"x"}), ParseError);
  try {
    parse_poly("x + q*y", {"x", "y"});
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    REQUIRE(e.position == 4);
  }
}

TEST_CASE("polynomial arithmetic examples") {
  std::vector<std::string> xyz = {"x", "y", "z"};
  REQUIRE(parse_poly("x*y - 2*z", xyz).derivative(0) == parse_poly("y", xyz));
  REQUIRE(parse_poly("(x+y)*(x-y)", xyz) == parse_poly("x^2 - y^2", xyz));

  std::vector<std::string> abc = {"a", "b", "c"};
  Poly p = parse_poly("a^2 - a^-2", abc, true);
  REQUIRE(p.derivative(0) == parse_poly("2*a + 2*a^-3", abc, true));
  REQUIRE(p.derivative(0) == derivative_oracle(p, 0));
}

TEST_CASE("ring axioms hold exactly on random polynomials") {
  SplitMix64 rng(2024);
  std::vector<std::string> vars = {"x", "y"};
  for (int k = 0; k < 40; ++k) {
    Poly a = random_poly(vars, rng), b = random_poly(vars, rng), c = random_poly(vars, rng);
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE(a + b == b + a);
    REQUIRE(a * b == b * a);
    REQUIRE(derivative_oracle(a * b, 0) == a.derivative(0) * b + a * b.derivative(0));
  }
}

TEST_CASE("print/parse round trip on canonical forms") {
  SplitMix64 rng(7);
  std::vector<std::string> vars = {"x", "y", "z"};
  for (int k = 0; k < 60; ++k) {
    bool laurent = k % 2 == 0;
    Poly p = random_poly(vars, rng, 2, 3, laurent);
    if (k % 3 == 0) p = p.scaled(Scalar::i()) + random_poly(vars, rng, 1, 1, laurent);
    REQUIRE(parse_poly(p.str(), vars, laurent) == p);
  }
  // rational functions round trip through their canonical print too
  for (int k = 0; k < 20; ++k) {
    Poly num = random_poly(vars, rng);
    Poly den = random_poly(vars, rng);
    if (den.is_zero()) continue;
    RatFunc f(num, den);
    REQUIRE(parse_ratfunc(f.str(), vars) == f);
  }
}

TEST_CASE("rational function equality is an equivalence relation") {
  SplitMix64 rng(99);
  std::vector<std::string> vars = {"x", "y"};
  for (int k = 0; k < 25; ++k) {
    Poly n1 = random_poly(vars, rng), d1 = random_poly(vars, rng);
    Poly n2 = random_poly(vars, rng), d2 = random_poly(vars, rng);
    Poly m = random_poly(vars, rng);
    if (d1.is_zero() || d2.is_zero() || m.is_zero()) continue;
    RatFunc a(n1, d1), b(n2, d2);
    RatFunc a_scaled(n1 * m, d1 * m);
    REQUIRE(a == a);             // reflexive
    REQUIRE(a == a_scaled);      // common factors do not matter
    REQUIRE(a_scaled == a);      // symmetric
    if (a == b) {
      RatFunc b_scaled(n2 * m, d2 * m);
      REQUIRE(a == b_scaled);    // transitive through the scaled representative
    }
    REQUIRE((a - a).is_zero());
    REQUIRE((a * b) == (b * a));
  }
}

TEST_CASE("rational function derivative and constants") {
  std::vector<std::string> v = {"l"};
  RatFunc f = parse_ratfunc("1/l", v);
  REQUIRE(f.derivative(0) == parse_ratfunc("-1/l^2", v));
  REQUIRE(parse_ratfunc("(2*l+2)/(l+1)", v).constant_value() == Scalar(2));
  REQUIRE_FALSE(parse_ratfunc("l/(l+1)", v).is_constant());
}

TEST_CASE("mixed coefficient towers are rejected") {
  Poly a = parse_poly("x", {"x", "y"});
  Poly b = parse_poly("x", {"x", "z"});
  REQUIRE_THROWS_AS(a + b, std::invalid_argument);
  Poly c = parse_poly("x", {"x", "y"}, true);  // laurent mode differs
  REQUIRE_THROWS_AS(a * c, std::invalid_argument);
}

TEST_CASE("linear combination parser") {
  std::vector<std::string> names = {"e", "f", "h"};
  auto v = parse_linear_combo("2*e - h", names);
  REQUIRE(v[0] == Scalar(2));
  REQUIRE(v[1] == Scalar(0));
  REQUIRE(v[2] == Scalar(-1));
  REQUIRE(parse_linear_combo("0", names) == std::vector<Scalar>(3, Scalar(0)));
  REQUIRE_THROWS_AS(parse_linear_combo("e*f", names), ParseError);
}
