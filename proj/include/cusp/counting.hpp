#pragma once

#include <algorithm>
#include <vector>

#include "errors.hpp"
#include "semigroup.hpp"

namespace cusp {

// A semigroup counting function R(k) = #(S intersect [0, k)), stored as an
// explicit table on [0, horizon] plus the exact affine tail
// R(k) = k - tail_offset for k >= horizon.  R(k) = 0 for k <= 0.
struct CountingFunction {
  std::vector<long long> table;  // table[k] = R(k), k in [0, horizon]
  long long tail_offset = 0;

  long long horizon() const { return static_cast<long long>(table.size()) - 1; }

  long long operator()(long long k) const {
    if (k <= 0) return 0;
    if (k <= horizon()) return table[static_cast<size_t>(k)];
    return k - tail_offset;
  }
};

// Counting function of a numerical semigroup.  Horizon frobenius + 2; tail
// offset is the genus.
inline CountingFunction counting_function(const NumericalSemigroup& s) {
  CountingFunction r;
  long long horizon = std::max<long long>(s.frobenius + 2, 1);
  r.table.resize(static_cast<size_t>(horizon + 1), 0);
  for (long long k = 0; k < horizon; ++k)
    r.table[static_cast<size_t>(k + 1)] =
        r.table[static_cast<size_t>(k)] + (s.contains(k) ? 1 : 0);
  r.tail_offset = s.genus;
  return r;
}

// Closed form for the semigroup <2, 2n+1> of the (2, 2n+1) torus knot:
// 0 for k <= 0, floor((k+1)/2) for 0 < k < 2n+1, and k - n beyond.
inline long long r_closed_form_t2(long long n, long long k) {
  if (n < 0) throw Error("r_closed_form_t2: n must be >= 0");
  if (k <= 0) return 0;
  if (k < 2 * n + 1) return (k + 1) / 2;
  return k - n;
}

// Infimal convolution (R1 <> R2)(m) = min_{i+j=m} R1(i) + R2(j).  Both slopes
// are in {0,1} and the tails are slope one, so the minimum over all integer
// splits is attained with i in [max(0, m-T2), min(m, T1)].
inline CountingFunction infimal_convolution(const CountingFunction& r1,
                                            const CountingFunction& r2) {
  CountingFunction out;
  long long horizon = r1.horizon() + r2.horizon();
  out.table.resize(static_cast<size_t>(horizon + 1), 0);
  for (long long m = 1; m <= horizon; ++m) {
    long long lo = std::max<long long>(0, m - r2.horizon());
    long long hi = std::min(m, r1.horizon());
    long long best = r1(lo) + r2(m - lo);
    for (long long i = lo + 1; i <= hi; ++i)
      best = std::min(best, r1(i) + r2(m - i));
    out.table[static_cast<size_t>(m)] = best;
  }
  out.tail_offset = r1.tail_offset + r2.tail_offset;
  return out;
}

// Counting function of the trivial (unknot) cusp: R(k) = max(k, 0).
inline CountingFunction trivial_counting_function() {
  CountingFunction r;
  r.table = {0, 1};
  r.tail_offset = 0;
  return r;
}

// V_s from a counting function with tail offset g (the three-genus):
// V_s = R(g + s) - s.
inline long long v_from_r(const CountingFunction& r, long long g, long long s) {
  if (g != r.tail_offset)
    throw Error("v_from_r: g must equal the tail offset (genus) of R");
  return r(g + s) - s;
}

}  // namespace cusp
