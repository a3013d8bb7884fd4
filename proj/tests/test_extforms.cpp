#include "folbott/extforms.hpp"
#include "folbott/resolve.hpp"
#include "random_poly.hpp"

#include <doctest.h>

using namespace folbott;

namespace {
Polynomial P(const char* s) { return parse_polynomial(s); }
OneForm F(const char* s) { return parse_oneform(s); }

// Reference expansion of omega0, with 2g df - 3f dg.
const char* kOmega0Reference =
    "(x1x2^2 - 2x1^2x3 + x0x2x3)dx0 + x0(3x1x3 - 2x2^2)dx1 + x0(x1x2 - 3x0x3)dx2 + x0(2x0x2 - x1^2)dx3";
}  // namespace

TEST_SUITE("extforms") {
  TEST_CASE("differential examples") {
    CHECK(differential(P("x0x2")) == F("x2dx0 + x0dx2"));
    CHECK(differential(exceptional_g0()) == F("x2dx0 - x1dx1 + x0dx2"));
    CHECK(differential(P("7")).is_zero());
  }

  TEST_CASE("build_omega examples") {
    OneForm w0 = omega0();
    CHECK(w0 == -F(kOmega0Reference));
    CHECK(build_omega(P("x0^3"), P("x0^2"), P("x0")).is_zero());
    CHECK(build_omega(P("x0^2x2"), P("x0x1"), P("x0")) == F("-x0x1x2dx0 + 3x0^2x2dx1 - 2x0^2x1dx2"));
  }

  TEST_CASE("singular locus coefficients") {
    auto A = singular_locus_coeffs(omega0());
    OneForm ref = F(kOmega0Reference);
    for (int i = 0; i < 4; ++i) CHECK(A[static_cast<std::size_t>(i)] == -ref.A[static_cast<std::size_t>(i)]);
    for (const auto& c : singular_locus_coeffs(OneForm{})) CHECK(c.is_zero());
    auto u = singular_locus_coeffs(F("dx0"));
    CHECK(u[0] == Polynomial(1));
    CHECK(u[1].is_zero());
  }

  TEST_CASE("omega0 is projective and integrable") {
    OneForm w = omega0();
    CHECK(euler_contraction(w).is_zero());
    for (const auto& c : wedge_d(w)) CHECK(c.is_zero());
    // A non-integrable form: x0 dx1 - x1 dx0 + x2 dx3 has w ^ dw != 0.
    bool any = false;
    for (const auto& c : wedge_d(F("x0dx1 - x1dx0 + x2dx3"))) any = any || !c.is_zero();
    CHECK(any);
  }

  TEST_CASE("singular curves of omega0") {
    auto A = singular_locus_coeffs(omega0());
    std::vector<Polynomial> polys(A.begin(), A.end());
    auto curves = omega0_test_curves();
    REQUIRE(curves.size() == 4);
    for (const auto& c : curves) {
      CAPTURE(c.name);
      // The parametrization must satisfy its ideal before it is trusted.
      CHECK(vanishes_on_parametrization(c.ideal, c.param));
      CHECK(vanishes_on_parametrization(polys, c.param) == c.in_singular_locus);
    }
  }

  TEST_CASE("generic line exhibits a nonzero coefficient") {
    auto A = singular_locus_coeffs(omega0());
    Bindings line{{var::x0, P("y0")}, {var::x1, P("y1")}, {var::x2, 0}, {var::x3, 0}};
    for (int i = 0; i < 3; ++i) CHECK(substitute(A[static_cast<std::size_t>(i)], line).is_zero());
    CHECK(substitute(A[3], line) == P("y0y1^2"));
  }

  TEST_CASE("property: build_omega is projective and scales bilinearly") {
    std::mt19937 rng(31337);
    std::uniform_int_distribution<int> c(-5, 5);
    auto rand_form = [&](int deg) {
      // Homogeneous in x0..x3 of degree `deg`.
      Polynomial p;
      std::vector<VarId> xs{0, 1, 2, 3};
      for (int t = 0; t < 4; ++t) {
        Monomial m;
        for (int k = 0; k < deg; ++k) m = m * Monomial::of(xs[static_cast<std::size_t>(rng() % 4)]);
        p += Polynomial::term(m, Rational(c(rng)));
      }
      return p;
    };
    for (int i = 0; i < 40; ++i) {
      Polynomial f = rand_form(3), g = rand_form(2);
      OneForm w = build_omega(f, g, Polynomial(1));
      CHECK(euler_contraction(w).is_zero());
      Rational l(c(rng) + 7, 3), m(c(rng) - 7, 2);
      l.canonicalize();
      m.canonicalize();
      CHECK(build_omega(f * l, g * m, Polynomial(1)) == w * Polynomial(l * m));
    }
  }

  TEST_CASE("property: Table 1 fixed pairs give integrable forms") {
    for (const auto& r : table1_rows()) {
      CAPTURE(r.id());
      OneForm w = compute_table1(r);
      CHECK(euler_contraction(w).is_zero());
      for (const auto& c : wedge_d(w)) CHECK(c.is_zero());
    }
  }

  TEST_CASE("one-form printing and parsing") {
    OneForm w = F("(2s5-3)(x1^3dx0 - x0x1^2dx1)");
    CHECK(parse_oneform(w.str()) == w);
    CHECK(F("x0^2x1dx0 - x0^3dx1").str() == "x0^2x1dx0 - x0^3dx1");
    CHECK(proportionality(F("x1dx0"), F("-3x1dx0")) == Rational(-3));
    CHECK_FALSE(proportionality(F("x1dx0"), F("x1dx0 + x0dx1")).has_value());
    CHECK_FALSE(proportionality(OneForm{}, OneForm{}).has_value());
  }
}
