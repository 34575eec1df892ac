#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "errors.hpp"

namespace cusp {

// A numerical semigroup: a cofinite subset of the non-negative integers
// containing 0 and closed under addition.  Membership is sieved once, out to
// 2*frobenius+2, so all queries afterwards are table lookups.
struct NumericalSemigroup {
  std::vector<long long> generators;  // sorted, deduplicated
  std::vector<long long> gaps;        // sorted
  long long genus = 0;                // number of gaps
  long long frobenius = -1;           // largest gap, -1 when there are none

  std::vector<char> member_;  // member_[k] for 0 <= k < member_.size()

  bool contains(long long k) const {
    if (k < 0) return false;
    if (k >= static_cast<long long>(member_.size())) return true;
    return member_[static_cast<size_t>(k)] != 0;
  }
};

namespace detail {

inline NumericalSemigroup finish_from_sieve(std::vector<char> sieve) {
  NumericalSemigroup s;
  for (long long k = 0; k < static_cast<long long>(sieve.size()); ++k)
    if (!sieve[static_cast<size_t>(k)]) s.gaps.push_back(k);
  s.genus = static_cast<long long>(s.gaps.size());
  s.frobenius = s.gaps.empty() ? -1 : s.gaps.back();
  // Keep the sieve out to 2*frobenius+2 so grading formulas never miss.
  size_t want = static_cast<size_t>(std::max<long long>(2 * s.frobenius + 2, 2));
  sieve.resize(std::max(sieve.size(), want), 1);
  s.member_ = std::move(sieve);
  // Minimal generators: positive elements not expressible as a sum of two
  // positive elements.  None exist above frobenius + multiplicity.
  long long mult = 1;
  while (!s.contains(mult)) ++mult;
  for (long long k = 1; k <= std::max(s.frobenius + mult, 1LL); ++k) {
    if (!s.contains(k)) continue;
    bool reachable = false;
    for (long long a = 1; a < k && !reachable; ++a)
      reachable = s.contains(a) && s.contains(k - a);
    if (!reachable) s.generators.push_back(k);
  }
  return s;
}

}  // namespace detail

inline NumericalSemigroup semigroup_from_generators(std::vector<long long> gens) {
  if (gens.empty()) throw Error("semigroup: need at least one generator");
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  if (gens.front() < 1) throw Error("semigroup: generators must be positive");
  long long g = 0;
  for (long long x : gens) g = std::gcd(g, x);
  if (g != 1) throw Error("semigroup: generators must be coprime overall");
  // Reachability sieve.  frobenius < min*max for any coprime pair, hence for
  // the full generating set as well.
  long long bound = gens.front() * gens.back() + 1;
  std::vector<char> sieve(static_cast<size_t>(bound), 0);
  sieve[0] = 1;
  for (long long k = 1; k < bound; ++k)
    for (long long x : gens)
      if (k >= x && sieve[static_cast<size_t>(k - x)]) {
        sieve[static_cast<size_t>(k)] = 1;
        break;
      }
  long long frob = -1;
  for (long long k = bound - 1; k >= 0; --k)
    if (!sieve[static_cast<size_t>(k)]) {
      frob = k;
      break;
    }
  sieve.resize(static_cast<size_t>(frob + 2), 1);
  return detail::finish_from_sieve(std::move(sieve));
}

inline NumericalSemigroup semigroup_from_gaps(std::vector<long long> gaps) {
  std::sort(gaps.begin(), gaps.end());
  gaps.erase(std::unique(gaps.begin(), gaps.end()), gaps.end());
  if (!gaps.empty() && gaps.front() < 1)
    throw Error("semigroup: gaps must be positive");
  long long frob = gaps.empty() ? -1 : gaps.back();
  std::vector<char> sieve(static_cast<size_t>(frob + 2), 1);
  for (long long k : gaps) sieve[static_cast<size_t>(k)] = 0;
  // Closure under addition.
  for (long long a = 1; a <= frob; ++a) {
    if (!sieve[static_cast<size_t>(a)]) continue;
    for (long long b = a; a + b <= frob; ++b) {
      if (!sieve[static_cast<size_t>(b)]) continue;
      if (!sieve[static_cast<size_t>(a + b)])
        throw Error("semigroup: complement of gap set is not closed under addition");
    }
  }
  return detail::finish_from_sieve(std::move(sieve));
}

// The semigroup <p, q> of the (p, q) torus knot / cusp singularity.
inline NumericalSemigroup torus_knot_semigroup(long long p, long long q) {
  if (p < 2 || q < 2) throw Error("torus_knot_semigroup: need p, q >= 2");
  if (std::gcd(p, q) != 1) throw Error("torus_knot_semigroup: p, q must be coprime");
  return semigroup_from_generators({p, q});
}

// True iff k is in S exactly when frobenius - k is not, for all k.
inline bool is_symmetric(const NumericalSemigroup& s) {
  if (s.frobenius < 0) return true;
  for (long long k = 0; k <= s.frobenius; ++k)
    if (s.contains(k) == s.contains(s.frobenius - k)) return false;
  return true;
}

}  // namespace cusp
