#pragma once

#include "folbott/ratpoly.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace folbott {

struct OneForm {
  std::array<Polynomial, 4> A;  // coefficients of dx0..dx3

  bool is_zero() const;
  bool operator==(const OneForm& o) const { return A == o.A; }
  bool operator!=(const OneForm& o) const { return !(*this == o); }
  OneForm operator+(const OneForm& o) const;
  OneForm operator-(const OneForm& o) const;
  OneForm operator-() const;
  OneForm operator*(const Polynomial& p) const;

  // Compact style: "x0^2x1dx0 - x0^3dx1"; multi-term coefficients are expanded.
  std::string str() const;
};

// Parses the printer's output, and products like "(2s5-3)(x1^3dx0 - x0x1^2dx1)".
OneForm parse_oneform(std::string_view text);

OneForm differential(const Polynomial& p);

// (3f dg - 2g df) / h, coefficientwise exact.
OneForm build_omega(const Polynomial& f, const Polynomial& g, const Polynomial& h);

std::array<Polynomial, 4> singular_locus_coeffs(const OneForm& w);

// Sum A_i x_i.
Polynomial euler_contraction(const OneForm& w);

// Coefficients of w ^ dw on dx0dx1dx2, dx0dx1dx3, dx0dx2dx3, dx1dx2dx3.
std::array<Polynomial, 4> wedge_d(const OneForm& w);

bool vanishes_on_parametrization(const std::vector<Polynomial>& polys, const Bindings& param);

OneForm substitute(const OneForm& w, const Bindings& b);
OneForm exact_divide(const OneForm& w, const Polynomial& q);

// Some lambda != 0 with b == lambda * a. Zero forms are never proportional.
std::optional<Rational> proportionality(const OneForm& a, const OneForm& b);

nlohmann::json to_json(const OneForm& w);

}  // namespace folbott

namespace folbott {

// f0 = x0^2x3 - x0x1x2 + x1^3/3, g0 = x0x2 - x1^2/2.
Polynomial exceptional_f0();
Polynomial exceptional_g0();
// build_omega(f0, g0, x0).
OneForm omega0();

// A curve given by a parametrization in (y0, y1) and the ideal it should satisfy.
struct ParametrizedCurve {
  std::string name;
  Bindings param;                   // x_i -> forms in y0, y1
  std::vector<Polynomial> ideal;    // generators that must vanish on `param`
  bool in_singular_locus = true;    // expected outcome
};

// The line x0=x1=0, the conic x0 = x2^2-2x1x3 = 0, the twisted cubic, and a
// line that is not in the singular locus.
std::vector<ParametrizedCurve> omega0_test_curves();

}  // namespace folbott
