#pragma once

#include <utility>

#include "counting.hpp"
#include "errors.hpp"

namespace cusp {

// The degree-d threshold A(d) = (d^2-6d+5)/4 for d odd, (d^2-6d+4)/4 for d
// even; both numerators are divisible by 4.
inline long long a_of_d(long long d) {
  if (d < 3) throw Error("a_of_d: d must be >= 3");
  return d % 2 == 1 ? (d * d - 6 * d + 5) / 4 : (d * d - 6 * d + 4) / 4;
}

// Largest number b of ordinary cusps (A_2 points) compatible with degree d
// and a A_1 points: b <= ((d-1)(d-2) - A(d) - a) / 2.
inline long long cusp_count_bound(long long d, long long a) {
  if (d < 4) throw Error("cusp_count_bound: d must be >= 4");
  if (a < 0) throw Error("cusp_count_bound: a must be >= 0");
  long long num = (d - 1) * (d - 2) - a_of_d(d) - a;
  // floor division (the numerator can go negative for large a)
  return num >= 0 ? num / 2 : -((-num + 1) / 2);
}

// Largest n such that a degree-d curve of genus h can carry an A_2n
// singularity: n <= ((d-1)(d-2) - A(d) - h) / 2 (same threshold).
inline long long max_a2n_bound(long long d, long long h) {
  if (d < 4) throw Error("max_a2n_bound: d must be >= 4");
  if (h < 0) throw Error("max_a2n_bound: h must be >= 0");
  long long num = (d - 1) * (d - 2) - a_of_d(d) - h;
  return num >= 0 ? num / 2 : -((-num + 1) / 2);
}

// Equivalence instance for the R_m-bound criterion at (d, eta, g), where
// m = (d-1)(d-2)/2 - eta - g counts the trefoil factors:
//   direct: R_m(kd+1-eta) <= (k+1)(k+2)/2 + g for every k in {1,...,d-2},
//           with R_m the counting function of the m-fold trefoil sum
//   closed: 2g + eta >= A(d).
// The two are provably equal; both are returned so the equivalence can be
// tested exhaustively.
inline std::pair<bool, bool> rm_bound_equivalence(long long d, long long eta,
                                                  long long g) {
  if (d < 4) throw Error("rm_bound_equivalence: d must be >= 4");
  if (eta < 0 || g < 0) throw Error("rm_bound_equivalence: eta, g must be >= 0");
  long long m = (d - 1) * (d - 2) / 2 - eta - g;
  if (m <= 0) throw NonpositiveM("rm_bound_equivalence: (d-1)(d-2)/2 - eta - g must be > 0");
  bool direct = true;
  for (long long k = 1; k <= d - 2; ++k) {
    if (r_closed_form_t2(m, k * d + 1 - eta) > (k + 1) * (k + 2) / 2 + g) {
      direct = false;
      break;
    }
  }
  bool closed = 2 * g + eta >= a_of_d(d);
  return {direct, closed};
}

}  // namespace cusp
