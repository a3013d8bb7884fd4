#include "folbott/extforms.hpp"
#include "folbott/ratpoly.hpp"
#include "random_poly.hpp"

#include <doctest.h>

using namespace folbott;
using testutil::random_nonzero_poly;
using testutil::random_poly;

namespace {
Polynomial P(const char* s) { return parse_polynomial(s); }
}  // namespace

TEST_SUITE("ratpoly") {
  TEST_CASE("rational parsing and printing") {
    CHECK(to_string(parse_rational("6/4")) == "3/2");
    CHECK(to_string(parse_rational("-7")) == "-7");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK(pow(Rational(-2, 3), 3) == Rational(-8, 27));
  }

  TEST_CASE("alphabet") {
    CHECK(var_id("x3") == 3);
    CHECK(var_id("b1") == var::b0 + 1);
    CHECK(var_name(var::h) == "h");
    CHECK(var_name(var::y0 + 1) == "y1");
    CHECK_THROWS_AS(var_id("q7"), std::invalid_argument);
    CHECK(is_x_var(var::x2));
    CHECK_FALSE(is_x_var(var::a0));
  }

  TEST_CASE("arithmetic examples") {
    CHECK(P("x0 + x1") * P("x0 - x1") == P("x0^2 - x1^2"));
    Polynomial g0 = P("x0x2 - x1^2/2");
    CHECK(g0 * Rational(3) == P("3x0x2 - (3/2)x1^2"));
    CHECK((P("x0 + x1") * P("x0 - x1")).str() == "x0^2 - x1^2");
  }

  TEST_CASE("substitution examples") {
    CHECK(substitute(P("x0^2"), {{var::x0, P("x0 + x1")}}) == P("x0^2 + 2x0x1 + x1^2"));
    Polynomial lhs = substitute(P("b1 - 4u3"), {{var_id("b1"), P("4u3 + u2s0")}});
    CHECK(lhs == P("u2s0"));
    Bindings at{{var::x0, 1}, {var::x1, 0}, {var::x2, 0}, {var::x3, 1}};
    Polynomial v = substitute(exceptional_f0(), at);
    CHECK(v.is_constant());
    CHECK(v.constant() == 1);
  }

  TEST_CASE("division examples") {
    CHECK(exact_divide(P("x0^2 - x1^2"), P("x0 - x1")) == P("x0 + x1"));
    CHECK(exact_divide(P("x0^2(3x1x3 - 2x2^2)"), P("x0")) == P("x0(3x1x3 - 2x2^2)"));
    CHECK_THROWS_AS(exact_divide(P("x0x1"), P("x2")), NotDivisible);
    auto r = divide(P("x0^2 + 1"), P("x0"));
    CHECK(r.quotient == P("x0"));
    CHECK(r.remainder == P("1"));
  }

  TEST_CASE("coefficients_in examples") {
    auto c = coefficients_in(P("a0x0^3 + a1x0^2x1"), {0, 1, 2, 3});
    REQUIRE(c.size() == 2);
    CHECK(c[0].first == Monomial::of(var::x0, 3));
    CHECK(c[0].second == P("a0"));
    CHECK(c[1].second == P("a1"));
    auto k = coefficients_in(P("5"), {0, 1, 2, 3});
    REQUIRE(k.size() == 1);
    CHECK(k[0].first == Monomial::one());
    CHECK(k[0].second == P("5"));
  }

  TEST_CASE("parser edge cases") {
    CHECK(P("2x1^2x2") == Polynomial(2) * P("x1") * P("x1") * P("x2"));
    CHECK(P("-(x0 - x1)") == P("x1 - x0"));
    CHECK(P("3/2*x0") == P("(3/2)x0"));
    CHECK(P("x0/2") == P("(1/2)x0"));
    CHECK_THROWS_AS(P("x0 +"), ParseError);
    CHECK_THROWS_AS(P("(x0"), ParseError);
    CHECK_THROWS(P("x9"));
  }

  TEST_CASE("derivative and degree") {
    Polynomial p = P("x0^3x1 + 2x1^2");
    CHECK(p.derivative(var::x0) == P("3x0^2x1"));
    CHECK(p.degree_in(var::x1) == 2);
    CHECK(p.leading().first == Monomial::of(var::x0, 3) * Monomial::of(var::x1));
  }

  TEST_CASE("json round trip") {
    Polynomial p = P("3/7x0x2 - 5a1 + 1/3");
    CHECK(polynomial_from_json(to_json(p)) == p);
    auto j = rational_to_json(Rational(-3, 4));
    CHECK(j["num"] == "-3");
    CHECK(j["den"] == "4");
    CHECK(rational_from_json(j) == Rational(-3, 4));
  }

  TEST_CASE("property: ring axioms") {
    std::mt19937 rng(20240601);
    for (int i = 0; i < 200; ++i) {
      Polynomial a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
      CHECK((a * b) * c == a * (b * c));
      CHECK((a + b) + c == a + (b + c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK(a + b == b + a);
      CHECK((a + (-a)).is_zero());
      CHECK(a * Polynomial(1) == a);
    }
  }

  TEST_CASE("property: exact division inverts multiplication") {
    std::mt19937 rng(77);
    for (int i = 0; i < 150; ++i) {
      Polynomial p = random_poly(rng), q = random_nonzero_poly(rng);
      CHECK(exact_divide(p * q, q) == p);
      auto r = divide(p * q + Polynomial(1), q);
      CHECK(r.quotient * q + r.remainder == p * q + Polynomial(1));
    }
  }

  TEST_CASE("property: substitution is a ring homomorphism") {
    std::mt19937 rng(4242);
    for (int i = 0; i < 100; ++i) {
      Polynomial p = random_poly(rng), q = random_poly(rng);
      Bindings b{{var::x0, random_poly(rng, 3, 2)}, {var::s0, random_poly(rng, 3, 1)}};
      CHECK(substitute(p * q, b) == substitute(p, b) * substitute(q, b));
      CHECK(substitute(p + q, b) == substitute(p, b) + substitute(q, b));
    }
  }

  TEST_CASE("property: coefficients_in round trip") {
    std::mt19937 rng(99);
    for (int i = 0; i < 100; ++i) {
      Polynomial p = random_poly(rng, 8, 4);
      Polynomial back;
      for (const auto& [m, c] : coefficients_in(p, {0, 1, 2, 3})) {
        for (VarId v = 4; v < kNumVars; ++v) CHECK(m.exp[static_cast<std::size_t>(v)] == 0);
        for (VarId v = 0; v < 4; ++v) CHECK(c.degree_in(v) == 0);
        back += Polynomial::term(m, 1) * c;
      }
      CHECK(back == p);
    }
  }

  TEST_CASE("property: printing parses back") {
    std::mt19937 rng(5);
    for (int i = 0; i < 100; ++i) {
      Polynomial p = random_poly(rng, 6, 4);
      CHECK(parse_polynomial(p.str()) == p);
    }
  }
}
