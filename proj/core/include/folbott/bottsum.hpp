#pragma once

#include "folbott/fixlocus.hpp"
#include "folbott/torus.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace folbott {

inline constexpr int kNumSlots = 30;

class ZeroDenominator : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// c0 + sum_{i=1..30} c_i d_i
struct LinearForm {
  Rational constant;
  std::array<Rational, kNumSlots> d{};  // d[0] is the coefficient of d1

  LinearForm() = default;
  LinearForm(Rational c) : constant(std::move(c)) {}  // NOLINT

  LinearForm operator+(const LinearForm& o) const;
  LinearForm operator-(const LinearForm& o) const;
  LinearForm operator-() const;
  LinearForm operator*(const Rational& k) const;
  LinearForm& operator+=(const LinearForm& o);
  bool operator==(const LinearForm& o) const { return constant == o.constant && d == o.d; }
  bool is_constant() const;
  const Rational& coeff(int slot) const { return d.at(static_cast<std::size_t>(slot - 1)); }

  std::string str() const;
  nlohmann::json to_json() const;
};

// -(wfiber)^p / prod(tangent); p = 13 also divides by the flag tangent product.
Rational point_contribution(const FixedPointRecord& rec, const Flag& flag, const WeightVector& w, int power);

// h-coefficient of -(wfiber)^p (w - d h)/w^2 where w + d h = prod(weight_i + d_i h).
LinearForm line_contribution(const FixedLineRecord& rec, const Flag& flag, const WeightVector& w, int power);

// h-coefficient of numerator / prod(normals).
Rational line_integral(const DualClass& numerator, const std::vector<DualClass>& normals);

// Sum of all contributions over one flag (records already relabelled by the flag).
LinearForm flag_contribution(const Flag& flag, const WeightVector& w, int power);

// The per-flag partial sum in the convention of the relation table: the
// contributions without their leading minus, i.e. -flag_contribution.
LinearForm raw_flag_sum(const Flag& flag, const WeightVector& w, int power);

// power 7: the standard flag only (fiber degree). power 13: all 24 flags.
// `jobs` workers; the fold order is fixed so the result does not depend on it.
LinearForm total_degree_form(const WeightVector& w, int power, unsigned jobs = 1);

struct NamedValue {
  std::string name;
  Rational value;
};

struct ThreePlanesResult {
  std::vector<NamedValue> contributions;
  Rational total;
};

ThreePlanesResult three_planes_demo();

}  // namespace folbott
