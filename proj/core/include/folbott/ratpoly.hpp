#pragma once

#include "folbott/rational.hpp"

#include <nlohmann/json.hpp>

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace folbott {

// Fixed, closed alphabet. The order here is the lex order of the term order.
//   x0..x3 a0..a6 b0..b3 u1..u3 s0..s5 t0..t4 v0..v4 z0..z5 w0..w3 h y0..y3
inline constexpr int kNumVars = 49;
using VarId = int;

namespace var {
inline constexpr VarId x0 = 0, x1 = 1, x2 = 2, x3 = 3;
inline constexpr VarId a0 = 4;   // a0..a6
inline constexpr VarId b0 = 11;  // b0..b3
inline constexpr VarId u1 = 15;  // u1..u3
inline constexpr VarId s0 = 18;  // s0..s5
inline constexpr VarId t0 = 24;  // t0..t4
inline constexpr VarId v0 = 29;  // v0..v4
inline constexpr VarId z0 = 34;  // z0..z5
inline constexpr VarId w0 = 40;  // w0..w3
inline constexpr VarId h = 44;
inline constexpr VarId y0 = 45;  // y0..y3
}  // namespace var

const std::string& var_name(VarId v);
// Throws std::invalid_argument for names outside the alphabet.
VarId var_id(std::string_view name);
bool is_x_var(VarId v);

class NotDivisible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Monomial {
  std::array<std::uint16_t, kNumVars> exp{};
  std::uint32_t deg = 0;

  static Monomial one() { return {}; }
  static Monomial of(VarId v, unsigned e = 1);

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& o) const;
  // Caller guarantees divisibility.
  Monomial operator/(const Monomial& o) const;
  bool operator==(const Monomial& o) const { return exp == o.exp; }
  std::string str() const;  // "x0^2*x1", "1" for the unit
};

// Graded lex, larger monomials first.
struct GrlexDesc {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational, GrlexDesc>;

  Polynomial() = default;
  Polynomial(const Rational& c);  // NOLINT(implicit)
  Polynomial(long c) : Polynomial(Rational(c)) {}  // NOLINT(implicit)
  Polynomial(int c) : Polynomial(Rational(c)) {}   // NOLINT(implicit)

  static Polynomial variable(VarId v);
  static Polynomial term(const Monomial& m, const Rational& c);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Constant coefficient (0 if absent).
  Rational constant() const;
  std::size_t size() const { return terms_.size(); }
  const std::pair<const Monomial, Rational>& leading() const;
  unsigned degree_in(VarId v) const;
  bool uses(VarId v) const;
  std::vector<VarId> variables() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;
  bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  Polynomial pow(unsigned e) const;
  Polynomial derivative(VarId v) const;

  std::string str() const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  Terms terms_;
};

Polynomial scale(const Polynomial& p, const Rational& c);

using Bindings = std::map<VarId, Polynomial>;

// Simultaneous substitution, fully expanded.
Polynomial substitute(const Polynomial& p, const Bindings& b);

struct DivisionResult {
  Polynomial quotient;
  Polynomial remainder;
};

// Long division by one divisor in grlex order.
DivisionResult divide(const Polynomial& p, const Polynomial& q);
// Throws NotDivisible when the remainder is nonzero.
Polynomial exact_divide(const Polynomial& p, const Polynomial& q);

// p = sum m_i * c_i, with m_i a monomial in `vars` and c_i free of `vars`.
std::vector<std::pair<Monomial, Polynomial>> coefficients_in(const Polynomial& p,
                                                             const std::vector<VarId>& vars);

// Accepts "+ - * / ^ ( )", rational literals and juxtaposition: "2x1^2x2 - (3/2)b1".
Polynomial parse_polynomial(std::string_view text);

// Shared by the 1-form parser: dx0..dx3 are accepted as formal symbols.
struct ParsedExpr {
  Polynomial scalar;
  std::array<Polynomial, 4> dx;
  bool has_dx = false;
};
ParsedExpr parse_expression(std::string_view text, bool allow_dx);

nlohmann::json rational_to_json(const Rational& r);
Rational rational_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::json& j);

}  // namespace folbott
