#include "folbott/torus.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace folbott;

namespace {
EigenWeight W(const char* s) { return parse_eigenweight(s); }
EigenWeight x(int i) { return EigenWeight::of(i); }
}  // namespace

TEST_SUITE("torus") {
  TEST_CASE("weight validation") {
    CHECK(validate_weights({0, 1, 5, 25}));
    CHECK_FALSE(validate_weights({0, 1, 2, 3}));
    CHECK_FALSE(validate_weights({1, 1, 5, 25}));
    auto v = check_weights({0, 1, 2, 3});
    CHECK_FALSE(v.ok);
    CHECK(std::any_of(v.collisions.begin(), v.collisions.end(),
                      [](const std::string& s) { return s.find("w0+w3 = w1+w2") != std::string::npos; }));
    CHECK(validate_weights({0, 1, 7, 37}));
    CHECK(validate_weights({1, 2, 9, 41}));
  }

  TEST_CASE("weight parsing") {
    CHECK(parse_weights("0,1,5,25") == WeightVector{0, 1, 5, 25});
    CHECK(parse_weights(" 1, 2 ,9,41") == WeightVector{1, 2, 9, 41});
    CHECK_THROWS_AS(parse_weights("0,1,5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_weights("0,1,5,x"), std::invalid_argument);
  }

  TEST_CASE("monomial weights") {
    CHECK(monomial_weight(Monomial::of(var::x0) * Monomial::of(var::x1)) == x(0) + x(1));
    CHECK(monomial_weight(Monomial::of(var::x1, 3)) == x(1) * 3);
    CHECK(monomial_weight(Monomial::one()).is_zero());
    CHECK_THROWS(monomial_weight(Monomial::of(var::a0)));
  }

  TEST_CASE("chart local weights") {
    EigenWeight b1 = x(0) + x(1), b3 = x(1) * 2;
    CHECK(chart_local_weight(b1, b3) == x(0) - x(1));
    CHECK(chart_local_weight(W("x0^2x2/x1^3"), W("x0x2/x1^2")) == x(0) - x(1));
    CHECK(chart_local_weight(b1, b1).is_zero());
  }

  TEST_CASE("eigenweight parsing") {
    CHECK(W("2x1 - x0 - x2") == x(1) * 2 - x(0) - x(2));
    CHECK(W("w3-w1") == x(3) - x(1));
    CHECK(W("1").is_zero());
    CHECK(W("x0^2x2/x1^3") == x(0) * 2 + x(2) - x(1) * 3);
    CHECK((x(3) - x(1)).str() == "-w1 + w3");
  }

  TEST_CASE("dual numbers") {
    DualClass a(2, 3), b(2, -3);
    CHECK(a * b == DualClass(4, 0));
    // (1+h)^3 (2+h) / 4
    DualClass q = DualClass(1, 1).pow(3) * DualClass(2, 1) * DualClass(Rational(1, 4));
    CHECK(q.b == Rational(7, 4));
    CHECK_THROWS_AS(DualClass(0, 1).inverse(), DivByZeroWeight);
  }

  TEST_CASE("property: dual class ring") {
    std::mt19937 rng(8);
    std::uniform_int_distribution<int> d(-20, 20);
    for (int i = 0; i < 200; ++i) {
      DualClass a(d(rng), d(rng)), b(d(rng), d(rng)), c(d(rng), d(rng));
      CHECK(a * b == b * a);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * DualClass(a.a, -a.b) == DualClass(a.a * a.a, 0));
      if (a.a != 0) CHECK(a * a.inverse() == DualClass(1));
    }
  }

  TEST_CASE("fixed flags") {
    auto flags = enumerate_fixed_flags(kDefaultWeights);
    CHECK(flags.size() == 24);
    CHECK(flags.front() == Flag{});
    std::set<std::array<int, 4>> seen;
    for (const auto& f : flags) {
      auto s = f.perm;
      std::sort(s.begin(), s.end());
      CHECK(s == std::array<int, 4>{0, 1, 2, 3});
      seen.insert(f.perm);
    }
    CHECK(seen.size() == 24);
    CHECK(std::is_sorted(flags.begin(), flags.end(), [](const Flag& a, const Flag& b) { return a.perm < b.perm; }));
  }

  TEST_CASE("flag tangent class") {
    auto t = flag_tangent_class(Flag{});
    std::vector<EigenWeight> got(t.begin(), t.end());
    CHECK(same_multiset(got, {x(1) - x(0), x(2) - x(0), x(3) - x(0), x(2) - x(1), x(3) - x(1), x(3) - x(2)}));
    // 1*5*25*4*24*20
    long oracle = (1 - 0) * (5 - 0) * (25 - 0) * (5 - 1) * (25 - 1) * (25 - 5);
    CHECK(oracle == 240000);
    CHECK(flag_tangent_product(Flag{}, kDefaultWeights) == oracle);
    for (const auto& f : enumerate_fixed_flags(kDefaultWeights)) CHECK(flag_tangent_class(f).size() == 6);
  }

  TEST_CASE("property: flag tangent class is permutation equivariant") {
    for (const auto& f : enumerate_fixed_flags(kDefaultWeights)) {
      auto base = flag_tangent_class(Flag{});
      std::vector<EigenWeight> permuted;
      for (const auto& e : base) permuted.push_back(f.apply(e));
      auto t = flag_tangent_class(f);
      CHECK(same_multiset(permuted, std::vector<EigenWeight>(t.begin(), t.end())));
    }
  }

  TEST_CASE("property: induced line weights are the pair sums") {
    // Pluecker coordinate p_ij has weight w_i + w_j; validation keeps them distinct.
    for (WeightVector w : {WeightVector{0, 1, 5, 25}, WeightVector{0, 1, 7, 37}, WeightVector{1, 2, 9, 41}}) {
      std::set<long> sums;
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) sums.insert((x(i) + x(j)).evaluate(w).get_si());
      CHECK(sums.size() == 6);
    }
  }
}
