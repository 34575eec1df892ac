#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include <cusp/complex.hpp>
#include <cusp/semigroup.hpp>
#include <cusp/staircase.hpp>

using namespace cusp;

namespace {

BigradedComplex torus_complex(long long p, long long q) {
  return staircase_to_complex(staircase_from_semigroup(torus_knot_semigroup(p, q)));
}

}  // namespace

TEST_CASE("entry insertion cancels over F2") {
  EntryMap m;
  add_entry(m, 0, 1, 2, 3);
  REQUIRE(m.size() == 1);
  add_entry(m, 0, 1, 2, 3);
  REQUIRE(m.empty());
  add_entry(m, 0, 1, 1, 0);
  add_entry(m, 0, 1, 0, 1);
  REQUIRE(m.at({0, 1}).size() == 2);
}

TEST_CASE("staircase complexes validate for both signs and shifts") {
  for (auto [p, q] : {std::pair<long long, long long>{2, 3}, {4, 5}, {6, 7}, {3, 8}}) {
    Staircase st = staircase_from_semigroup(torus_knot_semigroup(p, q));
    REQUIRE_NOTHROW(validate_bigraded(staircase_to_complex(st)));
    REQUIRE_NOTHROW(validate_bigraded(staircase_to_complex(dualize(st))));
    REQUIRE_NOTHROW(validate_bigraded(staircase_to_complex(st, 6, -2)));
    REQUIRE_NOTHROW(validate_bigraded(staircase_to_complex(shifted(st, -4, 4))));
  }
  for (long long n : {-3LL, -1LL, 1LL, 3LL})
    REQUIRE_NOTHROW(validate_bigraded(staircase_to_complex(basic_staircase(n))));
}

TEST_CASE("trefoil and dual trefoil complexes have the expected arrows") {
  BigradedComplex c = torus_complex(2, 3);
  REQUIRE(c.size() == 3);
  REQUIRE(c.diff.size() == 2);
  REQUIRE(c.diff.at({1, 0}) == MonomialSum{{1, 0}});
  REQUIRE(c.diff.at({1, 2}) == MonomialSum{{0, 1}});

  BigradedComplex d = staircase_to_complex(
      dualize(staircase_from_semigroup(torus_knot_semigroup(2, 3))));
  REQUIRE(d.diff.size() == 2);
  REQUIRE(d.diff.at({0, 1}) == MonomialSum{{1, 0}});
  REQUIRE(d.diff.at({2, 1}) == MonomialSum{{0, 1}});
}

TEST_CASE("validator rejects inhomogeneous and non-square-zero differentials") {
  BigradedComplex bad;
  bad.gradings = {{0, 0}, {-2, -2}};
  add_entry(bad.diff, 0, 1, 1, 0);  // U-power breaks the (-1,-1) bidegree
  REQUIRE_THROWS_AS(validate_bigraded(bad), Error);

  BigradedComplex chain;
  chain.gradings = {{0, 0}, {-2, -2}, {-4, -4}};
  add_entry(chain.diff, 0, 1, 0, 0);
  add_entry(chain.diff, 1, 2, 0, 0);  // d^2(gen 0) = gen 2 != 0
  REQUIRE_THROWS_AS(validate_bigraded(chain), Error);

  BigradedComplex negexp;
  negexp.gradings = {{0, 0}, {2, -6}};
  add_entry(negexp.diff, 0, 1, -1, 1);
  REQUIRE_THROWS_AS(validate_bigraded(negexp), Error);
}

TEST_CASE("tensor products multiply ranks and add gradings") {
  BigradedComplex a = torus_complex(6, 7);
  BigradedComplex b = torus_complex(4, 5);
  BigradedComplex t = tensor(a, b);
  REQUIRE(t.size() == 77);
  REQUIRE_NOTHROW(validate_bigraded(t));
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < b.size(); ++j) {
      const auto& g = t.gradings[static_cast<size_t>(i * b.size() + j)];
      REQUIRE(g[0] == a.gradings[static_cast<size_t>(i)][0] +
                          b.gradings[static_cast<size_t>(j)][0]);
      REQUIRE(g[1] == a.gradings[static_cast<size_t>(i)][1] +
                          b.gradings[static_cast<size_t>(j)][1]);
    }
  // tensoring with a rank-one complex changes nothing
  BigradedComplex one;
  one.gradings = {{0, 0}};
  BigradedComplex same = tensor(a, one);
  REQUIRE(same.gradings == a.gradings);
  REQUIRE(same.diff == a.diff);
}

TEST_CASE("tensor combines labels with a separator") {
  BigradedComplex a = torus_complex(2, 3);
  a.labels = {"p", "q", "r"};
  BigradedComplex b;
  b.gradings = {{0, 0}};
  b.labels = {"u"};
  BigradedComplex t = tensor(a, b);
  REQUIRE(t.labels == std::vector<std::string>{"p*u", "q*u", "r*u"});
  b.labels.clear();
  REQUIRE(tensor(a, b).labels.empty());
}

TEST_CASE("dualizing a complex is an involution and stays valid") {
  BigradedComplex t = tensor(torus_complex(2, 3), torus_complex(4, 5));
  BigradedComplex d = dualize_complex(t);
  REQUIRE_NOTHROW(validate_bigraded(d));
  BigradedComplex dd = dualize_complex(d);
  REQUIRE(dd.gradings == t.gradings);
  REQUIRE(dd.diff == t.diff);
  REQUIRE(dd.labels == t.labels);
}

TEST_CASE("actions are checked for bidegree and chain-map commutation") {
  BigradedComplex c = torus_complex(2, 3);
  Action good;  // y -> U x_0, vanishing elsewhere
  add_entry(good, 1, 0, 1, 0);
  REQUIRE_NOTHROW(validate_action(c, good));

  Action wrong_degree;
  add_entry(wrong_degree, 1, 0, 0, 0);
  REQUIRE_THROWS_AS(validate_action(c, wrong_degree), Error);

  Action non_commuting;  // x_0 -> V y does not commute with d
  add_entry(non_commuting, 0, 1, 0, 1);
  REQUIRE_THROWS_AS(validate_action(c, non_commuting), ActionNotChainMap);
}

TEST_CASE("tensored actions act on the product complex") {
  BigradedComplex a = torus_complex(2, 3);
  Action aa;
  add_entry(aa, 1, 0, 1, 0);
  BigradedComplex b = torus_complex(2, 5);
  Action bb;
  add_entry(bb, 1, 0, 1, 0);
  add_entry(bb, 3, 2, 1, 0);

  BigradedComplex t = tensor(a, b);
  std::vector<Action> ext = tensor_actions({aa}, a.size(), {bb}, b.size());
  REQUIRE(ext.size() == 2);
  for (const auto& e : ext) REQUIRE_NOTHROW(validate_action(t, e));
  // A (x) 1 has one entry per right-hand generator
  REQUIRE(ext[0].size() == static_cast<size_t>(b.size()));
  REQUIRE(ext[1].size() == 2 * static_cast<size_t>(a.size()));
}

TEST_CASE("grading shifts preserve validity and move levels") {
  BigradedComplex c = torus_complex(4, 5);
  BigradedComplex s = shift_complex(c, 8, -4);
  REQUIRE_NOTHROW(validate_bigraded(s));
  for (int i = 0; i < c.size(); ++i) {
    REQUIRE(s.gradings[static_cast<size_t>(i)][0] ==
            c.gradings[static_cast<size_t>(i)][0] + 8);
    REQUIRE(s.gradings[static_cast<size_t>(i)][1] ==
            c.gradings[static_cast<size_t>(i)][1] - 4);
    REQUIRE(alexander_level(s.gradings[static_cast<size_t>(i)]) ==
            alexander_level(c.gradings[static_cast<size_t>(i)]) + 3);
  }
}

TEST_CASE("Alexander levels of staircase complexes") {
  REQUIRE(complex_levels(torus_complex(2, 3)) == std::vector<long long>{-1, 0, 1});
  REQUIRE(complex_levels(torus_complex(4, 5)) ==
          std::vector<long long>{-6, -5, -2, 0, 2, 5, 6});
  REQUIRE_THROWS_AS(alexander_level({2, 0}), HalfIntegerLevel);
  REQUIRE_THROWS_AS(alexander_level({1, 0}), HalfIntegerLevel);
  REQUIRE(alexander_level({4, -4}) == 2);
}

TEST_CASE("composition of entry maps matches hand expansion") {
  // f: 0 -> 1 with U, g: 1 -> 2 with V; g o f: 0 -> 2 with UV.
  EntryMap f, g;
  add_entry(f, 0, 1, 1, 0);
  add_entry(g, 1, 2, 0, 1);
  EntryMap gf = compose(g, f);
  REQUIRE(gf.size() == 1);
  REQUIRE(gf.at({0, 2}) == MonomialSum{{1, 1}});
  // parallel equal paths cancel over F2
  EntryMap f2 = f, g2 = g;
  add_entry(f2, 0, 3, 0, 0);
  add_entry(g2, 3, 2, 1, 1);
  REQUIRE(compose(g2, f2).empty());
}
