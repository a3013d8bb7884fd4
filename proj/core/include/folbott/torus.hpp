#pragma once

#include "folbott/ratpoly.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace folbott {

using WeightVector = std::array<long, 4>;

inline constexpr WeightVector kDefaultWeights{0, 1, 5, 25};

// Linear form sum c_i w_i. In the fixed-point catalog w_i stands for the
// weight carried by x_i; a flag then relabels the w's.
struct EigenWeight {
  std::array<int, 4> c{};

  static EigenWeight of(int i) {
    EigenWeight e;
    e.c[i] = 1;
    return e;
  }

  EigenWeight operator+(const EigenWeight& o) const;
  EigenWeight operator-(const EigenWeight& o) const;
  EigenWeight operator-() const;
  EigenWeight operator*(int k) const;
  bool operator==(const EigenWeight& o) const { return c == o.c; }
  bool operator!=(const EigenWeight& o) const { return c != o.c; }
  bool operator<(const EigenWeight& o) const { return c < o.c; }
  bool is_zero() const { return c == std::array<int, 4>{}; }

  Integer evaluate(const WeightVector& w) const;
  // As a polynomial in the w-variables (or x-variables when `in_x`).
  Polynomial as_polynomial(bool in_x = false) const;
  std::string str() const;  // "w1 - w0", "0"
};

// Reads "2x1 - x0 - x2", "w3-w1" or a ratio of monomials such as "x0^2x2/x1^3".
EigenWeight parse_eigenweight(std::string_view text);

// Sorted multiset helpers.
std::vector<EigenWeight> sorted(std::vector<EigenWeight> v);
bool same_multiset(const std::vector<EigenWeight>& a, const std::vector<EigenWeight>& b);

struct WeightValidation {
  bool ok = true;
  std::vector<std::string> collisions;  // human readable
};

WeightValidation check_weights(const WeightVector& w);
bool validate_weights(const WeightVector& w);

// Weight of an x-monomial; throws for non-x variables.
EigenWeight monomial_weight(const Monomial& m);
EigenWeight chart_local_weight(const EigenWeight& global, const EigenWeight& chart);

class DivByZeroWeight : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// a + b h with h^2 = 0.
struct DualClass {
  Rational a;
  Rational b;

  DualClass() = default;
  DualClass(Rational a_, Rational b_ = 0) : a(std::move(a_)), b(std::move(b_)) {}  // NOLINT

  DualClass operator+(const DualClass& o) const { return {a + o.a, b + o.b}; }
  DualClass operator-(const DualClass& o) const { return {a - o.a, b - o.b}; }
  DualClass operator*(const DualClass& o) const { return {a * o.a, a * o.b + b * o.a}; }
  bool operator==(const DualClass& o) const { return a == o.a && b == o.b; }
  DualClass inverse() const;
  DualClass pow(unsigned e) const;
  std::string str() const;
};

// x_i carries w_{perm[i]}. Listed as (i;j;k;m) = (perm[0];perm[1];perm[2];perm[3]):
// point {x_i=x_j=x_k=0} on line {x_i=x_j=0} in plane {x_i=0}.
struct Flag {
  std::array<int, 4> perm{0, 1, 2, 3};

  bool operator==(const Flag& o) const { return perm == o.perm; }
  EigenWeight apply(const EigenWeight& e) const;
  std::string str() const;  // "(0;1;2;3)"
};

// All 24 flags, lexicographic in the permutation, identity first.
std::vector<Flag> enumerate_fixed_flags(const WeightVector& w);

std::array<EigenWeight, 6> flag_tangent_class(const Flag& flag);
Integer flag_tangent_product(const Flag& flag, const WeightVector& w);

// Comma separated; throws std::invalid_argument on malformed input.
WeightVector parse_weights(const std::string& text);

}  // namespace folbott
