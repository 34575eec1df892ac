#pragma once

#include <algorithm>
#include <array>
#include <cstdlib>
#include <vector>

#include "counting.hpp"
#include "errors.hpp"
#include "rational.hpp"
#include "semigroup.hpp"

namespace cusp {

enum class StairSign { Positive, Negative };

// A staircase complex over F2[U, V].  Gradings are stored doubled
// (2*gr_w, 2*gr_z) so that half-integer shifts stay exact.
//
// Positive staircases list generators x_0, y_1, x_2, ..., x_{2r} with
//   d y_{2i+1} = U^{steps[2i]} x_{2i} + V^{steps[2i+1]} x_{2i+2}
// (steps holds beta_1..beta_{2r} zero-indexed).  Negative staircases are the
// duals: even-index generators map into their odd-index neighbours with the
// same exponents,
//   d x_{2i} = V^{steps[2i-1]} y_{2i-1} + U^{steps[2i]} y_{2i+1}.
// The differential has bidegree (-1,-1); U and V have bidegrees (-2,0) and
// (0,-2).
struct Staircase {
  StairSign sign = StairSign::Positive;
  std::vector<long long> steps;                      // beta_1..beta_{2r}
  std::vector<std::array<long long, 2>> gradings;    // doubled, one per generator

  int size() const { return static_cast<int>(gradings.size()); }
  bool trivial() const { return steps.empty(); }

  friend bool operator==(const Staircase&, const Staircase&) = default;
};

// The rank-one complex with a single generator at bigrading (0, 0).
inline Staircase trivial_staircase() {
  Staircase s;
  s.sign = StairSign::Positive;
  s.gradings = {{0, 0}};
  return s;
}

// Staircase of an algebraic knot from its semigroup.  The Alexander
// exponents alpha_0 < ... < alpha_{2r} are read off from
// 1 + (t-1) * sum_i t^{gap_i}; signs must alternate +1/-1 and the gap set
// must be symmetric (both hold exactly for algebraic knots).  Gradings:
//   gr_w(x_{2i}) = -2 R(alpha_{2i}),
//   gr_z(x_{2i}) = -2 (g - alpha_{2i} + R(alpha_{2i}))
// with g the genus, normalized so gr_w(x_0) = 0 and gr_z(x_{2r}) = 0.
inline Staircase staircase_from_semigroup(const NumericalSemigroup& s) {
  if (s.frobenius < 0) return trivial_staircase();
  // Coefficient of t^k in 1 + (t-1)*sum t^{gaps}: +1 at exits of the gap set,
  // -1 at entries.
  std::vector<long long> alpha;
  std::vector<int> coeff;
  alpha.push_back(0);
  coeff.push_back(+1);
  for (long long k = 1; k <= s.frobenius + 1; ++k) {
    int c = (s.contains(k - 1) ? 0 : 1) - (s.contains(k) ? 0 : 1);
    if (c != 0) {
      alpha.push_back(k);
      coeff.push_back(c);
    }
  }
  for (size_t i = 0; i < coeff.size(); ++i)
    if (coeff[i] != (i % 2 == 0 ? +1 : -1))
      throw AlternationFailure(
          "staircase_from_semigroup: Alexander coefficients do not alternate");
  if (alpha.size() % 2 == 0)
    throw AlternationFailure(
        "staircase_from_semigroup: Alexander polynomial has even length");
  long long top = alpha.back();
  if (top != 2 * s.genus || !is_symmetric(s))
    throw AlternationFailure(
        "staircase_from_semigroup: gap set is not symmetric (not an algebraic knot)");

  CountingFunction r = counting_function(s);
  long long g = s.genus;
  Staircase st;
  st.sign = StairSign::Positive;
  for (size_t i = 1; i < alpha.size(); ++i) st.steps.push_back(alpha[i] - alpha[i - 1]);
  st.gradings.resize(alpha.size());
  for (size_t i = 0; i < alpha.size(); i += 2) {
    long long ra = r(alpha[i]);
    st.gradings[i] = {-4 * ra, -4 * (g - alpha[i] + ra)};
  }
  for (size_t i = 1; i < alpha.size(); i += 2) {
    // gr(y) = gr(U^{beta} x_prev) + (1, 1), doubled; the same grading must
    // come out of gr(V^{beta'} x_next) + (1, 1).
    st.gradings[i] = {st.gradings[i - 1][0] - 4 * st.steps[i - 1] + 2,
                      st.gradings[i - 1][1] + 2};
    if (st.gradings[i][0] != st.gradings[i + 1][0] + 2 ||
        st.gradings[i][1] != st.gradings[i + 1][1] - 4 * st.steps[i] + 2)
      throw Error("staircase_from_semigroup: inconsistent generator gradings");
  }
  return st;
}

// The basic staircase S^n (n > 0) or its dual S^{-|n|} (n < 0); all steps 1.
// S^n has generator j at doubled bigrading (-2j, 2j - 4n); the dual negates.
inline Staircase basic_staircase(long long n) {
  if (n == 0) throw Error("basic_staircase: n must be nonzero");
  long long m = std::llabs(n);
  Staircase st;
  st.sign = n > 0 ? StairSign::Positive : StairSign::Negative;
  st.steps.assign(static_cast<size_t>(2 * m), 1);
  st.gradings.resize(static_cast<size_t>(2 * m + 1));
  for (long long j = 0; j <= 2 * m; ++j) {
    long long w = -2 * j, z = 2 * j - 4 * m;
    if (n < 0) {
      w = -w;
      z = -z;
    }
    st.gradings[static_cast<size_t>(j)] = {w, z};
  }
  return st;
}

// Dual staircase: transpose the differential and negate all gradings.
inline Staircase dualize(const Staircase& st) {
  Staircase out = st;
  if (!st.trivial())
    out.sign = st.sign == StairSign::Positive ? StairSign::Negative : StairSign::Positive;
  for (auto& g : out.gradings) g = {-g[0], -g[1]};
  return out;
}

// A staircase with an overall doubled bigrading shift (2a, 2b).
struct ShiftedStaircase {
  Staircase base;
  long long dw2 = 0, dz2 = 0;

  friend bool operator==(const ShiftedStaircase&, const ShiftedStaircase&) = default;
};

inline ShiftedStaircase shifted(Staircase st, long long dw2, long long dz2) {
  return ShiftedStaircase{std::move(st), dw2, dz2};
}

// ---------------------------------------------------------------------------
// Closed-form V_s computations.
// ---------------------------------------------------------------------------

// The 0-level generators of a staircase (the even-index ones), recorded as
// (alpha, beta) = (-gr_w/2, -gr_z/2) pairs.  Products of staircases multiply
// these sets by coordinatewise sums.
struct GradedGeneratorSet {
  std::vector<std::array<long long, 2>> ab;  // sorted, deduplicated
};

inline GradedGeneratorSet zero_level_set(const Staircase& st) {
  GradedGeneratorSet out;
  for (int i = 0; i < st.size(); i += 2) {
    const auto& g = st.gradings[static_cast<size_t>(i)];
    out.ab.push_back({-g[0] / 4, -g[1] / 4});
  }
  std::sort(out.ab.begin(), out.ab.end());
  return out;
}

inline GradedGeneratorSet product(const GradedGeneratorSet& a,
                                  const GradedGeneratorSet& b) {
  GradedGeneratorSet out;
  out.ab.reserve(a.ab.size() * b.ab.size());
  for (const auto& x : a.ab)
    for (const auto& y : b.ab) out.ab.push_back({x[0] + y[0], x[1] + y[1]});
  std::sort(out.ab.begin(), out.ab.end());
  out.ab.erase(std::unique(out.ab.begin(), out.ab.end()), out.ab.end());
  return out;
}

inline GradedGeneratorSet zero_level_product(const std::vector<Staircase>& factors) {
  GradedGeneratorSet acc;
  acc.ab = {{0, 0}};
  for (const auto& f : factors) acc = product(acc, zero_level_set(f));
  return acc;
}

// V_s of a product of positive staircases:
//   V_s = min over 0-level generators x of max(alpha(x), beta(x) - s).
// An empty factor list is the unknot and yields max(0, -s).
inline long long v_s_positive(const std::vector<Staircase>& factors, long long s) {
  for (const auto& f : factors)
    if (f.sign != StairSign::Positive)
      throw Error("v_s_positive: all factors must be positive staircases");
  GradedGeneratorSet p0 = zero_level_product(factors);
  long long best = 0;
  bool first = true;
  for (const auto& x : p0.ab) {
    long long v = std::max(x[0], x[1] - s);
    if (first || v < best) best = v;
    first = false;
  }
  return best;
}

// V_s(C (x) S^{n_1} (x) ... ) with total basic weight n >= 0:
//   min over 0 <= j <= n of V_{s + 2j - n}(C) + j.
inline long long v_s_with_positive_basics(const std::vector<Staircase>& c,
                                          long long n, long long s) {
  if (n < 0) throw Error("v_s_with_positive_basics: n must be >= 0");
  long long best = 0;
  for (long long j = 0; j <= n; ++j) {
    long long v = v_s_positive(c, s + 2 * j - n) + j;
    if (j == 0 || v < best) best = v;
  }
  return best;
}

// V_s(C (x) S^{-n}) with n > 0 and C a single positive staircase:
//   max over 0 <= j <= n of V_{s - 2j + n}(C) - j.
inline long long v_s_with_negative_basics(const std::vector<Staircase>& c,
                                          long long n, long long s) {
  if (n <= 0) throw Error("v_s_with_negative_basics: n must be > 0");
  if (c.size() > 1)
    throw MultiStaircaseUnsupported(
        "v_s_with_negative_basics: closed form needs a single positive staircase");
  long long best = 0;
  for (long long j = 0; j <= n; ++j) {
    long long v = v_s_positive(c, s - 2 * j + n) - j;
    if (j == 0 || v > best) best = v;
  }
  return best;
}

// Lower bound for V_s(N (x) P), N a negative and P a positive multi-staircase,
// from their 0-level generator sets:
//   -1/2 min_{x in N0} max_{y in P0} min(gr_w(x)+gr_w(y), gr_z(x)+gr_z(y)+2s)
// which in (alpha, beta) coordinates is
//   max_{x in N0} min_{y in P0} max(alpha_x+alpha_y, beta_x+beta_y - s).
// Equality holds when P is a single positive staircase.
inline long long v_s_mixed_bound(const GradedGeneratorSet& n0,
                                 const GradedGeneratorSet& p0, long long s) {
  if (n0.ab.empty() || p0.ab.empty())
    throw Error("v_s_mixed_bound: generator sets must be nonempty");
  bool first_x = true;
  long long outer = 0;
  for (const auto& x : n0.ab) {
    bool first_y = true;
    long long inner = 0;
    for (const auto& y : p0.ab) {
      long long v = std::max(x[0] + y[0], x[1] + y[1] - s);
      if (first_y || v < inner) inner = v;
      first_y = false;
    }
    if (first_x || inner > outer) outer = inner;
    first_x = false;
  }
  return outer;
}

// Exact V_s of a single staircase of either sign (or the trivial complex).
// Negative staircases use the mixed-bound formula against the trivial
// positive factor, which is exact in that regime.
inline long long v_s_single(const Staircase& st, long long s) {
  if (st.trivial()) return std::max<long long>(0, -s);
  if (st.sign == StairSign::Positive) return v_s_positive({st}, s);
  GradedGeneratorSet p0;
  p0.ab = {{0, 0}};
  return v_s_mixed_bound(zero_level_set(st), p0, s);
}

// V_s of a shifted staircase via the grading-shift rule
//   V_{s + (a-b)/2}(C{a, b}) = V_s(C) - a/2.
// The level displacement (dw2 - dz2)/4 must be an integer.
inline Rational v_s_shifted(const ShiftedStaircase& st, long long s) {
  if ((st.dw2 - st.dz2) % 4 != 0)
    throw HalfIntegerLevel("v_s_shifted: shift moves levels off the integers");
  long long level_shift = (st.dw2 - st.dz2) / 4;
  return Rational(v_s_single(st.base, s - level_shift)) - Rational(st.dw2, 4);
}

}  // namespace cusp
