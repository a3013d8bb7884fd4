#pragma once

#include "folbott/bottsum.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace folbott {

class InconsistentSystem : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ResidualUnknowns : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FlagSum {
  Flag flag;
  LinearForm sum;  // raw per-flag sum, power 7
};

struct RelationSystem {
  std::vector<FlagSum> sums;           // 24, standard flag first
  std::vector<LinearForm> equations;   // S(flag_i) - S(flag_0) = 0, 23 of them
};

// Each row means row == 0. Rows are in reduced echelon form over d1 < ... < d30.
struct RelationSet {
  std::vector<LinearForm> rows;
  std::vector<int> pivots;  // 1-based slot of each row's pivot
  int rank() const { return static_cast<int>(rows.size()); }
};

RelationSystem build_system(const WeightVector& w, unsigned jobs = 1);
RelationSet solve_relations(const std::vector<LinearForm>& equations);

// Reduces expr modulo the relations; throws ResidualUnknowns if any d survives.
Rational substitute_relations(const LinearForm& expr, const RelationSet& rels);
LinearForm reduce(const LinearForm& expr, const RelationSet& rels);

// Row-space equality of two sets of affine relations.
bool same_row_space(const std::vector<LinearForm>& a, const std::vector<LinearForm>& b);

// Integer row with gcd 1 and positive leading coefficient.
LinearForm primitive(const LinearForm& row);
// "2d1 + d2 + 2d4 + 2 = 0", or "d27 = -2" for single-unknown rows.
std::string relation_str(const LinearForm& row);

// Reads "2d1+d2+2d4+2=0" or "d27=-2".
LinearForm parse_relation(const std::string& text);

// Twists a_1..a_{N-1} of the normal bundle of a fixed line in P^N against
// the twists b_i of its strict transform after blowing up an m-dimensional
// linear subspace through one of its points.
struct NormalTwistEquation {
  int v = 0;
  std::vector<Integer> coeff;  // common coefficient of a_i and b_i
  Integer constant;            // sum coeff_i a_i = sum coeff_i b_i + constant
  std::string str() const;
};

struct NormalTwistResult {
  int N = 0, m = 0;
  std::vector<NormalTwistEquation> equations;
  bool unique = false;
  std::vector<Rational> shift;  // b_i - a_i
  bool matches_expected = false;  // shift_i = 0 for i <= m, -1 otherwise
};

NormalTwistResult normal_twist_check(int N, int m);

}  // namespace folbott
