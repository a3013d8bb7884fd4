// One PASS/FAIL line per acceptance criterion. Exit status is the number of failures.

#include "folbott/bottsum.hpp"
#include "folbott/extforms.hpp"
#include "folbott/fixlocus.hpp"
#include "folbott/relations.hpp"
#include "folbott/resolve.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

using namespace folbott;

namespace {

// All comparisons are exact; only wall-clock budgets need numbers.
constexpr double kComponentBudgetSec = 60.0;
constexpr double kFiberBudgetSec = 5.0;
constexpr double kSmallBudgetSec = 1.0;

const Integer kComponentDegree = 168208;
const Integer kFiberDegree = 21;
const WeightVector kExtraWeights[] = {{0, 1, 7, 37}, {1, 2, 9, 41}};

struct Outcome {
  bool ok = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Rational degree(const WeightVector& w, int power, unsigned jobs = 1) {
  RelationSet rels = solve_relations(build_system(w, jobs).equations);
  return substitute_relations(total_degree_form(w, power, jobs), rels);
}

// Mirrors `folbott component-degree` output.
std::string component_output(unsigned jobs) {
  return to_string(degree(kDefaultWeights, 13, jobs)) + "\n" + total_degree_form(kDefaultWeights, 13, jobs).to_json().dump();
}

Outcome c1() {
  auto t0 = std::chrono::steady_clock::now();
  Rational d = degree(kDefaultWeights, 13);
  double s = seconds_since(t0);
  return {d == Rational(kComponentDegree) && s < kComponentBudgetSec, "got " + to_string(d) + " in " + std::to_string(s) + " s"};
}

Outcome c2() {
  auto t0 = std::chrono::steady_clock::now();
  Rational d = degree(kDefaultWeights, 7);
  double s = seconds_since(t0);
  return {d == Rational(kFiberDegree) && s < kFiberBudgetSec, "got " + to_string(d) + " in " + std::to_string(s) + " s"};
}

Outcome c3() {
  std::string detail;
  bool ok = true;
  for (const auto& w : kExtraWeights) {
    if (!validate_weights(w)) return {false, "weights rejected by validation"};
    Rational f = degree(w, 7), c = degree(w, 13);
    ok = ok && f == Rational(kFiberDegree) && c == Rational(kComponentDegree);
    detail += "(" + std::to_string(w[0]) + "," + std::to_string(w[1]) + "," + std::to_string(w[2]) + "," +
              std::to_string(w[3]) + "): " + to_string(f) + ", " + to_string(c) + "  ";
  }
  return {ok, detail};
}

Outcome c4() {
  static const char* reference[] = {
      "2d1+d2+2d4+2=0", "d3=1",  "d5=0",  "d6=0",  "2d7-2d10-d26-2d30+1=0", "d8+d12=0", "d9+d30+1=0", "d11=0",
      "d13+d14+d18+2=0", "d15=1", "d16=0", "d17=0", "d19+d21-d24+2=0", "d20+d22=0", "d23=0",
      "2d25+d26+2d28+2d30+1=0", "d27=-2", "d29=0"};
  std::vector<LinearForm> want;
  for (const char* s : reference) want.push_back(parse_relation(s));
  RelationSet rels = solve_relations(build_system(kDefaultWeights).equations);
  bool ok = rels.rank() == 18 && same_row_space(rels.rows, want);
  return {ok, "rank " + std::to_string(rels.rank()) + (ok ? ", row space equal" : ", row space differs")};
}

Outcome c5() {
  LinearForm s = raw_flag_sum(Flag{}, kDefaultWeights, 7);
  bool ok = s.constant == Rational(49642909, 3974400) && s.coeff(1) == Rational(-729, 320);
  return {ok, "constant " + to_string(s.constant) + ", d1 " + to_string(s.coeff(1))};
}

Outcome c6() {
  std::size_t pts = 0, lines = 0;
  bool per_flag = true;
  for (const auto& f : enumerate_fixed_flags(kDefaultWeights)) {
    Catalog c = build_catalog(f);
    per_flag = per_flag && c.points.size() == 72 && c.lines.size() == 5;
    pts += c.points.size();
    lines += c.lines.size();
  }
  return {per_flag && pts == 1728 && lines == 120, std::to_string(pts) + " points, " + std::to_string(lines) + " lines"};
}

Outcome c7() {
  int match = 0, zero = 0, documented = 0, bad = 0;
  std::string which;
  for (const auto& e : cross_check_tables()) {
    switch (e.status) {
      case CheckStatus::Match: ++match; break;
      case CheckStatus::ZeroAsExpected: ++zero; break;
      case CheckStatus::DocumentedMismatch: ++documented; which += " " + e.id; break;
      case CheckStatus::Mismatch: ++bad; which += " !" + e.id; break;
    }
  }
  std::ostringstream os;
  os << match << " match, " << zero << " zero, " << documented << " documented," << which;
  return {bad == 0 && documented == 1, os.str()};
}

Outcome c8() {
  auto t0 = std::chrono::steady_clock::now();
  OneForm ref = parse_oneform(
      "(x1x2^2 - 2x1^2x3 + x0x2x3)dx0 + x0(3x1x3 - 2x2^2)dx1 + x0(x1x2 - 3x0x3)dx2 + x0(2x0x2 - x1^2)dx3");
  OneForm w = omega0();
  bool ok = w == ref || w == -ref;
  ok = ok && euler_contraction(w).is_zero();
  for (const auto& c : wedge_d(w)) ok = ok && c.is_zero();
  auto A = singular_locus_coeffs(w);
  std::vector<Polynomial> polys(A.begin(), A.end());
  int curves = 0;
  for (const auto& c : omega0_test_curves()) {
    if (!c.in_singular_locus) continue;
    ok = ok && vanishes_on_parametrization(c.ideal, c.param) && vanishes_on_parametrization(polys, c.param);
    ++curves;
  }
  double s = seconds_since(t0);
  return {ok && curves == 3 && s < kSmallBudgetSec, std::to_string(curves) + " curves in " + std::to_string(s) + " s"};
}

Outcome c9() {
  auto t0 = std::chrono::steady_clock::now();
  ThreePlanesResult r = three_planes_demo();
  double s = seconds_since(t0);
  std::vector<Rational> want{-8, Rational(-27, 4), Rational(27, 2), Rational(1, 2), Rational(7, 4)};
  bool ok = r.contributions.size() == want.size() && r.total == 1 && s < kSmallBudgetSec;
  std::string detail;
  for (std::size_t i = 0; ok && i < want.size(); ++i) {
    ok = r.contributions[i].value == want[i];
  }
  for (const auto& c : r.contributions) detail += c.name + "=" + to_string(c.value) + " ";
  return {ok, detail + "total=" + to_string(r.total)};
}

Outcome c10() {
  auto t0 = std::chrono::steady_clock::now();
  NormalTwistResult a = normal_twist_check(4, 1);
  NormalTwistResult b = normal_twist_check(5, 2);
  double s = seconds_since(t0);
  bool eq = a.equations.size() == 3 && a.equations[0].str() == "6a1 + 3a2 + 2a3 = 6b1 + 3b2 + 2b3 + 5";
  bool ok = eq && a.unique && a.matches_expected && b.unique && b.matches_expected && s < kSmallBudgetSec;
  return {ok, a.equations.empty() ? "no equations" : a.equations[0].str()};
}

Outcome c11() {
  int n = 0;
  std::string failed;
  for (const auto& e : divisibility_ledger()) {
    ++n;
    if (!e.divisible) failed += " NotDivisible(" + e.chart + ", " + e.stage + ")";
  }
  return {failed.empty() && n > 0, std::to_string(n) + " stage divisions" + failed};
}

Outcome c12() {
  std::string one = component_output(1);
  bool ok = component_output(4) == one && component_output(8) == one;
  return {ok, ok ? "jobs 1/4/8 byte-identical" : "output differs across worker counts"};
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"component degree 168208", c1},      {"fiber degree 21", c2},
      {"weight independence", c3},          {"relation system rank 18", c4},
      {"per-flag partial sum", c5},         {"fixed-locus census", c6},
      {"table cross-check", c7},            {"omega0 verification", c8},
      {"three-planes demo", c9},            {"normal-twist proposition", c10},
      {"divisibility ledger", c11},         {"determinism", c12}};
  int failures = 0, i = 0;
  for (const auto& [name, fn] : criteria) {
    ++i;
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.ok) ++failures;
    std::printf("%s %2d %s: %s\n", o.ok ? "PASS" : "FAIL", i, name, o.detail.c_str());
  }
  std::fflush(stdout);
  return failures;
}
