#include <cstdlib>
#include <numeric>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include <cusp/models.hpp>
#include <cusp/oracle.hpp>
#include <cusp/semigroup.hpp>
#include <cusp/staircase.hpp>

using namespace cusp;

namespace {

BigradedComplex torus_complex(long long p, long long q) {
  return staircase_to_complex(staircase_from_semigroup(torus_knot_semigroup(p, q)));
}

// S^k as a complex; k = 0 is the rank-one trivial complex.
BigradedComplex basic_complex(long long k) {
  if (k == 0) {
    BigradedComplex one;
    one.gradings = {{0, 0}};
    return one;
  }
  return staircase_to_complex(basic_staircase(k));
}

// level assignment for exactness: number of odd-position tensor factors
std::vector<long long> parity_levels(const std::vector<int>& sizes) {
  std::vector<long long> out = {0};
  for (int n : sizes) {
    std::vector<long long> next;
    next.reserve(out.size() * static_cast<size_t>(n));
    for (long long l : out)
      for (int j = 0; j < n; ++j) next.push_back(l + (j % 2));
    out = std::move(next);
  }
  return out;
}

}  // namespace

TEST_CASE("level subcomplex of the trefoil at s=0 and s=2") {
  BigradedComplex t = torus_complex(2, 3);
  GradedUComplex a0 = a_s_subcomplex(t, 0);
  REQUIRE(a0.gradings == std::vector<long long>{-4, -2, -4});
  REQUIRE(a0.diff.at({1, 0}) == 0);
  REQUIRE(a0.diff.at({1, 2}) == 0);
  // s above the top level leaves gr_w untouched
  GradedUComplex a2 = a_s_subcomplex(t, 2);
  REQUIRE(a2.gradings == std::vector<long long>{0, -2, -4});
  REQUIRE(a2.diff.at({1, 0}) == 1);
  REQUIRE(a2.diff.at({1, 2}) == 0);
}

TEST_CASE("d_invariant worked examples") {
  BigradedComplex one;
  one.gradings = {{0, 0}};
  REQUIRE(d_invariant(a_s_subcomplex(one, 0)) == 0);
  REQUIRE(d_invariant(a_s_subcomplex(torus_complex(2, 3), 0)) == -4);
  REQUIRE(v_s_oracle(torus_complex(2, 3), 0) == Rational(1));
}

TEST_CASE("oracle V_s equals the staircase formula for torus knots") {
  for (long long p = 2; p * (p + 1) <= 60; ++p)
    for (long long q = p + 1; p * q <= 60; ++q) {
      if (std::gcd(p, q) != 1) continue;
      Staircase st = staircase_from_semigroup(torus_knot_semigroup(p, q));
      BigradedComplex c = staircase_to_complex(st);
      long long g = (p - 1) * (q - 1) / 2;
      for (long long s = -g; s <= g; ++s)
        REQUIRE(v_s_oracle(c, s) == Rational(v_s_positive({st}, s)));
    }
}

TEST_CASE("oracle V_s equals the product formula on tensor products") {
  const std::vector<std::vector<std::pair<long long, long long>>> products = {
      {{2, 3}, {2, 3}}, {{2, 3}, {4, 5}}, {{2, 5}, {3, 4}}};
  for (const auto& prod : products) {
    std::vector<Staircase> factors;
    BigradedComplex c;
    c.gradings = {{0, 0}};
    long long g = 0;
    for (auto [p, q] : prod) {
      factors.push_back(staircase_from_semigroup(torus_knot_semigroup(p, q)));
      c = tensor(c, torus_complex(p, q));
      g += (p - 1) * (q - 1) / 2;
    }
    for (long long s = -g - 1; s <= g + 1; ++s)
      REQUIRE(v_s_oracle(c, s) == Rational(v_s_positive(factors, s)));
  }
}

TEST_CASE("tensor powers of basic staircases are locally equivalent to one") {
  for (long long k = -2; k <= 2; ++k)
    for (long long l = -2; l <= 2; ++l) {
      BigradedComplex prod = tensor(basic_complex(k), basic_complex(l));
      BigradedComplex merged = basic_complex(k + l);
      for (long long s = -(std::llabs(k) + std::llabs(l));
           s <= std::llabs(k) + std::llabs(l); ++s) {
        CAPTURE(k, l, s);
        REQUIRE(v_s_oracle(prod, s) == v_s_oracle(merged, s));
      }
    }
}

TEST_CASE("mixed bound is a lower bound, exact against one positive staircase") {
  for (auto [p, q] : {std::pair<long long, long long>{2, 3}, {4, 5}}) {
    Staircase st = staircase_from_semigroup(torus_knot_semigroup(p, q));
    BigradedComplex pc = staircase_to_complex(st);
    long long g = (p - 1) * (q - 1) / 2;
    for (long long n = 1; n <= 2; ++n) {
      BigradedComplex neg = staircase_to_complex(basic_staircase(-n));
      BigradedComplex mixed = tensor(neg, pc);
      for (long long s = -g - n; s <= g + n; ++s) {
        Rational oracle = v_s_oracle(mixed, s);
        long long bound = v_s_mixed_bound(zero_level_set(basic_staircase(-n)),
                                          zero_level_product({st}), s);
        REQUIRE(Rational(bound) <= oracle);
        REQUIRE(oracle == Rational(v_s_with_negative_basics({st}, n, s)));
      }
    }
  }
}

TEST_CASE("frozen values for the headline mixed product") {
  // -T(2,3) # T(6,7) # T(4,5): the bound from the 0-level sets is 6, while
  // the true V_0 computed from the 231-generator complex is 7.
  BigradedComplex neg = staircase_to_complex(
      dualize(staircase_from_semigroup(torus_knot_semigroup(2, 3))));
  BigradedComplex prod = tensor(neg, tensor(torus_complex(6, 7), torus_complex(4, 5)));
  REQUIRE(prod.size() == 231);
  REQUIRE(v_s_oracle(prod, 0) == Rational(7));
  REQUIRE(v_s_oracle(prod, -1) == Rational(7));
  REQUIRE(v_s_oracle(prod, 1) == Rational(6));
  REQUIRE(v_s_oracle(prod, -2) == Rational(8));
  REQUIRE(v_s_oracle(prod, 2) == Rational(6));
  GradedGeneratorSet n0 =
      zero_level_set(dualize(staircase_from_semigroup(torus_knot_semigroup(2, 3))));
  GradedGeneratorSet p0 = zero_level_product(
      {staircase_from_semigroup(torus_knot_semigroup(6, 7)),
       staircase_from_semigroup(torus_knot_semigroup(4, 5))});
  REQUIRE(v_s_mixed_bound(n0, p0, 0) == 6);
}

TEST_CASE("top/bottom oracle with no actions reduces to V_s") {
  BigradedComplex c = torus_complex(4, 5);
  for (long long s = -3; s <= 3; ++s) {
    auto [vt, vb] = v_top_bot_oracle(c, {}, s);
    REQUIRE(vt == v_s_oracle(c, s));
    REQUIRE(vb == v_s_oracle(c, s));
  }
}

TEST_CASE("top/bottom oracle on the stored models") {
  SplitTowerModel hopf = knotified_t2_2n(1);
  auto [t1, b1] = v_top_bot_oracle(hopf.full_model, hopf.actions, 0);
  REQUIRE(t1 == Rational(3, 4));
  REQUIRE(b1 == Rational(1, 4));

  SplitTowerModel k2 = knotified_t2_2n(2);
  auto [t2, b2] = v_top_bot_oracle(k2.full_model, k2.actions, 0);
  REQUIRE(t2 == Rational(3, 4));
  REQUIRE(b2 == Rational(5, 4));

  SplitTowerModel borr = borromean_model();
  auto [tb, bb] = v_top_bot_oracle(borr.full_model, borr.actions, 0);
  REQUIRE(tb == Rational(1, 2));
  REQUIRE(bb == Rational(1, 2));
}

TEST_CASE("exactness of staircase products") {
  // single positive staircases are exact
  for (auto [p, q] : {std::pair<long long, long long>{2, 3}, {4, 5}, {6, 7}}) {
    BigradedComplex c = torus_complex(p, q);
    REQUIRE(exactness_check(c, parity_levels({c.size()})));
  }
  // products of two positive staircases are exact
  BigradedComplex t23 = torus_complex(2, 3), t25 = torus_complex(2, 5);
  BigradedComplex two = tensor(t23, t25);
  REQUIRE(exactness_check(two, parity_levels({t23.size(), t25.size()})));
  BigradedComplex t34 = torus_complex(3, 4), t27 = torus_complex(2, 7);
  BigradedComplex big = tensor(t34, t27);
  REQUIRE(exactness_check(big, parity_levels({t34.size(), t27.size()})));
  // the triple product of trefoils fails exactness
  BigradedComplex cube = tensor(tensor(t23, t23), t23);
  REQUIRE_FALSE(exactness_check(cube, parity_levels({3, 3, 3})));
}

TEST_CASE("exactness preconditions") {
  BigradedComplex t23 = torus_complex(2, 3);
  REQUIRE_THROWS_AS(exactness_check(t23, {0, 1}), Error);
  // levels compatible in count but not decreasing by one under the arrows
  REQUIRE_THROWS_AS(exactness_check(t23, {0, 1, 2}), Error);
}

TEST_CASE("generator cap is enforced and overridable") {
  BigradedComplex big = tensor(torus_complex(6, 7), torus_complex(4, 5));
  setenv("CUSPCHECK_GENERATOR_CAP", "10", 1);
  REQUIRE_THROWS_AS(a_s_subcomplex(big, 0), CapExceeded);
  setenv("CUSPCHECK_GENERATOR_CAP", "100", 1);
  REQUIRE_NOTHROW(a_s_subcomplex(big, 0));
  unsetenv("CUSPCHECK_GENERATOR_CAP");
  REQUIRE_NOTHROW(a_s_subcomplex(big, 0));
}
