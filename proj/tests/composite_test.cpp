// Tests for the composite-knot layer: derived combinatorial quantities,
// the closed V^T/V^B formulas for K-tilde and the full composite, and the
// chain-level assembly used to cross-validate them.

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "cusp/complex.hpp"
#include "cusp/composite.hpp"
#include "cusp/errors.hpp"
#include "cusp/models.hpp"
#include "cusp/oracle.hpp"
#include "cusp/rational.hpp"
#include "cusp/semigroup.hpp"
#include "cusp/staircase.hpp"

namespace {

cusp::CompositeKnotSpec make_spec(std::vector<std::vector<long long>> cusp_gens,
                                  std::map<long long, long long> m_pos,
                                  std::map<long long, long long> m_neg, long long g) {
  cusp::CompositeKnotSpec spec;
  for (const auto& gens : cusp_gens)
    spec.cusp_semigroups.push_back(cusp::semigroup_from_generators(gens));
  spec.m_pos = std::move(m_pos);
  spec.m_neg = std::move(m_neg);
  spec.g = g;
  return spec;
}

std::pair<cusp::Rational, cusp::Rational> oracle_pair(const cusp::CompositeKnotSpec& spec,
                                                      long long s) {
  auto [c, actions] = cusp::assemble_full(spec);
  return cusp::v_top_bot_oracle(c, actions, s);
}

}  // namespace

TEST_CASE("composite spec derived quantities") {
  // One cusp of type (8; 55), one negative T(2,2) link singularity, genus 0.
  auto spec = make_spec({{8, 55}}, {}, {{1, 1}}, 0);
  CHECK(spec.nu() == 1);
  CHECK(spec.kappa_pos() == 0);
  CHECK(spec.kappa_neg() == 1);
  CHECK(spec.eta_pos() == 0);
  CHECK(spec.eta_neg() == 1);
  CHECK(spec.eta() == 1);
  CHECK(spec.delta1() == 0);   // kappa+ - (kappa- - eta-)
  CHECK(spec.delta2() == -1);  // (kappa+ - eta+) - kappa-

  // Mixed example: two positive links T(2,2) and T(2,6), one negative T(2,4).
  auto mixed = make_spec({{2, 3}}, {{1, 1}, {3, 1}}, {{2, 1}}, 2);
  CHECK(mixed.kappa_pos() == 4);
  CHECK(mixed.kappa_neg() == 2);
  CHECK(mixed.eta_pos() == 2);
  CHECK(mixed.eta_neg() == 1);
  CHECK(mixed.eta() == 3);
  CHECK(mixed.delta1() == 3);
  CHECK(mixed.delta2() == 0);
  CHECK(mixed.g == 2);
}

TEST_CASE("composite spec validation") {
  auto bad_g = make_spec({}, {}, {}, -1);
  CHECK_THROWS_AS(cusp::validate_composite_spec(bad_g), cusp::ConfigMismatch);

  auto bad_index = make_spec({}, {{0, 1}}, {}, 0);
  CHECK_THROWS_AS(cusp::validate_composite_spec(bad_index), cusp::ConfigMismatch);

  auto bad_count = make_spec({}, {}, {{2, -1}}, 0);
  CHECK_THROWS_AS(cusp::validate_composite_spec(bad_count), cusp::ConfigMismatch);

  auto ok = make_spec({{2, 3}}, {{1, 2}}, {{3, 0}}, 4);
  CHECK_NOTHROW(cusp::validate_composite_spec(ok));
}

TEST_CASE("v_cusp_part is the V-function of the cusp product") {
  auto spec = make_spec({{4, 5}, {2, 3}}, {{1, 5}}, {}, 7);  // links/genus ignored
  std::vector<cusp::Staircase> st = {
      cusp::staircase_from_semigroup(cusp::semigroup_from_generators({4, 5})),
      cusp::staircase_from_semigroup(cusp::semigroup_from_generators({2, 3}))};
  for (long long s = -9; s <= 9; ++s)
    CHECK(cusp::v_cusp_part(spec, s) == cusp::v_s_positive(st, s));

  auto empty = make_spec({}, {}, {}, 0);
  CHECK(cusp::v_cusp_part(empty, 0) == 0);
  CHECK(cusp::v_cusp_part(empty, -3) == 3);  // unknot convention max(0, -s)
}

TEST_CASE("assemble_full structure: sizes, labels, action counts") {
  SECTION("empty spec is the unknot complex") {
    auto [c, actions] = cusp::assemble_full(make_spec({}, {}, {}, 0));
    REQUIRE(c.size() == 1);
    CHECK(c.gradings[0] == std::array<long long, 2>{0, 0});
    CHECK(c.labels[0] == "u");
    CHECK(actions.empty());
    CHECK(c.diff.empty());
  }

  SECTION("factor sizes multiply and action lists concatenate") {
    // cusp (2,3): 3 generators, 0 actions; T(2,4) model: 8 generators, 1
    // action; mirror T(2,2): 4 generators, 1 action; Borromean: 4 generators,
    // 2 actions.
    auto spec = make_spec({{2, 3}}, {{2, 1}}, {{1, 1}}, 1);
    auto [c, actions] = cusp::assemble_full(spec);
    REQUIRE(c.size() == 3 * 8 * 4 * 4);
    REQUIRE(actions.size() == 0 + 1 + 1 + 2);
    CHECK_NOTHROW(cusp::validate_bigraded(c));
    for (const auto& a : actions) CHECK_NOTHROW(cusp::validate_action(c, a));
  }

  SECTION("link multiplicities expand to repeated factors") {
    auto spec = make_spec({}, {{1, 2}}, {}, 0);  // two T(2,2) factors
    auto [c, actions] = cusp::assemble_full(spec);
    CHECK(c.size() == 4 * 4);
    CHECK(actions.size() == 2);
  }

  SECTION("single Hopf factor reproduces the stored model") {
    auto spec = make_spec({}, {{1, 1}}, {}, 0);
    auto [c, actions] = cusp::assemble_full(spec);
    const auto& model = cusp::knotified_t2_2n(1);
    REQUIRE(model.has_full_model);
    CHECK(c.gradings == model.full_model.gradings);
    CHECK(c.diff == model.full_model.diff);
    REQUIRE(actions.size() == model.actions.size());
    CHECK(actions == model.actions);
  }

  SECTION("invalid spec is rejected before assembly") {
    CHECK_THROWS_AS(cusp::assemble_full(make_spec({}, {}, {}, -2)), cusp::ConfigMismatch);
  }
}

TEST_CASE("K-tilde formulas match the chain-level oracle (all defect cases)") {
  struct Case {
    const char* name;
    cusp::CompositeKnotSpec spec;
    long long s_lo, s_hi;
  };
  const std::vector<Case> cases = {
      // delta1 = 1 >= 0, delta2 = 0 >= 0
      {"(4,5) cusp + one positive T(2,2)", make_spec({{4, 5}}, {{1, 1}}, {}, 0), -8, 8},
      // delta1 = 2, delta2 = 0
      {"(2,3) cusp + two positive T(2,2)", make_spec({{2, 3}}, {{1, 2}}, {}, 0), -6, 6},
      // delta1 = 0, delta2 = -1  (negative bottom defect)
      {"(4,5) cusp + one negative T(2,2)", make_spec({{4, 5}}, {}, {{1, 1}}, 0), -7, 7},
      // delta1 = -1, delta2 = -2 (both defects negative)
      {"(4,5) cusp + one negative T(2,4)", make_spec({{4, 5}}, {}, {{2, 1}}, 0), -7, 7},
      // no cusp at all: pure positive link
      {"bare positive T(2,4)", make_spec({}, {{2, 1}}, {}, 0), -4, 4},
      // no cusp, negative link with negative defects
      {"bare negative T(2,4)", make_spec({}, {}, {{2, 1}}, 0), -4, 4},
  };
  for (const auto& cs : cases) {
    INFO(cs.name);
    for (long long s = cs.s_lo; s <= cs.s_hi; ++s) {
      INFO("s = " << s);
      auto closed = cusp::v_top_bot_tilde(cs.spec, s);
      auto oracle = oracle_pair(cs.spec, s);
      CHECK(closed.first == oracle.first);
      CHECK(closed.second == oracle.second);
    }
  }
}

TEST_CASE("K-tilde frozen values") {
  auto spec = make_spec({{4, 5}}, {{1, 1}}, {}, 0);
  auto [vt, vb] = cusp::v_top_bot_tilde(spec, 0);
  CHECK(vt == cusp::Rational(11, 4));
  CHECK(vb == cusp::Rational(13, 4));

  // Knotified Hopf link alone: (3/4, 1/4) at s = 0.
  auto hopf = make_spec({}, {{1, 1}}, {}, 0);
  auto [ht, hb] = cusp::v_top_bot_tilde(hopf, 0);
  CHECK(ht == cusp::Rational(3, 4));
  CHECK(hb == cusp::Rational(1, 4));

  // Mirror of the knotified Hopf link: (-1/4, 1/4) at s = 0.
  auto mirror = make_spec({}, {}, {{1, 1}}, 0);
  auto [mt, mb] = cusp::v_top_bot_tilde(mirror, 0);
  CHECK(mt == cusp::Rational(-1, 4));
  CHECK(mb == cusp::Rational(1, 4));
}

TEST_CASE("composite formulas match the chain-level oracle (with Borromean factors)") {
  struct Case {
    const char* name;
    cusp::CompositeKnotSpec spec;
    long long s_lo, s_hi;
  };
  const std::vector<Case> cases = {
      // cases (a) + (b) with g > 0
      {"(2,3) cusp + positive T(2,2) + genus 1", make_spec({{2, 3}}, {{1, 1}}, {}, 1), -5, 5},
      // cases (a) + (d): delta1 = 0, delta2 = -1
      {"(4,5) cusp + negative T(2,2) + genus 1", make_spec({{4, 5}}, {}, {{1, 1}}, 1), -5, 5},
      // cases (c) + (d): delta1 = -1, delta2 = -2
      {"(4,5) cusp + negative T(2,4) + genus 1", make_spec({{4, 5}}, {}, {{2, 1}}, 1), -5, 5},
      // pure Borromean factors, no cusps or links
      {"genus 2 alone", make_spec({}, {}, {}, 2), -4, 4},
      // cusp + genus, no links (eta = 0)
      {"(2,5) cusp + genus 2", make_spec({{2, 5}}, {}, {}, 2), -5, 5},
  };
  for (const auto& cs : cases) {
    INFO(cs.name);
    for (long long s = cs.s_lo; s <= cs.s_hi; ++s) {
      INFO("s = " << s);
      auto closed = cusp::v_top_bot_composite(cs.spec, s);
      auto oracle = oracle_pair(cs.spec, s);
      CHECK(closed.first == oracle.first);
      CHECK(closed.second == oracle.second);
    }
  }
}

TEST_CASE("composite reduces to K-tilde at genus zero") {
  const std::vector<cusp::CompositeKnotSpec> specs = {
      make_spec({{4, 5}}, {{1, 1}}, {}, 0),
      make_spec({{2, 3}}, {{1, 2}}, {}, 0),
      make_spec({{4, 5}}, {}, {{2, 1}}, 0),
      make_spec({}, {}, {}, 0),
  };
  for (const auto& spec : specs)
    for (long long s = -6; s <= 6; ++s)
      CHECK(cusp::v_top_bot_composite(spec, s) == cusp::v_top_bot_tilde(spec, s));
}

TEST_CASE("composite trivial spec gives unknot towers") {
  auto spec = make_spec({}, {}, {}, 0);
  for (long long s = -4; s <= 4; ++s) {
    auto [vt, vb] = cusp::v_top_bot_composite(spec, s);
    cusp::Rational expect(std::max(0LL, -s));
    CHECK(vt == expect);
    CHECK(vb == expect);
  }
}

TEST_CASE("negative defects with several cusps are unsupported") {
  // Two cusps force the multi-staircase case the closed formulas exclude.
  auto spec = make_spec({{2, 3}, {2, 3}}, {}, {{2, 1}}, 0);
  REQUIRE(spec.delta1() < 0);
  CHECK_THROWS_AS(cusp::v_top_bot_tilde(spec, 0), cusp::UnsupportedMixedCase);
  CHECK_THROWS_AS(cusp::v_top_bot_composite(spec, 0), cusp::UnsupportedMixedCase);

  // ...but the chain-level oracle still handles it; values are quarter-integers.
  auto [vt, vb] = oracle_pair(spec, 0);
  CHECK((vt * 4).denominator() == 1);
  CHECK((vb * 4).denominator() == 1);

  // A single cusp (or none) with the same link content is fine.
  auto single = make_spec({{2, 3}}, {}, {{2, 1}}, 0);
  CHECK_NOTHROW(cusp::v_top_bot_tilde(single, 0));
  auto none = make_spec({}, {}, {{2, 1}}, 0);
  CHECK_NOTHROW(cusp::v_top_bot_tilde(none, 0));
}

TEST_CASE("composite V functions are monotone and stabilize") {
  auto spec = make_spec({{2, 3}}, {{1, 1}}, {}, 1);
  auto prev = cusp::v_top_bot_composite(spec, -6);
  for (long long s = -5; s <= 8; ++s) {
    auto cur = cusp::v_top_bot_composite(spec, s);
    // nonincreasing in s, and each step drops by at most 1
    CHECK(cur.first <= prev.first);
    CHECK(cur.second <= prev.second);
    CHECK(prev.first - cur.first <= cusp::Rational(1));
    CHECK(prev.second - cur.second <= cusp::Rational(1));
    prev = cur;
  }
  // large s: towers settle at the constants fixed by eta and g
  auto tail = cusp::v_top_bot_composite(spec, 50);
  CHECK(tail == cusp::v_top_bot_composite(spec, 51));
}
