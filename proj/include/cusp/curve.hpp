#pragma once

#include <map>
#include <string>
#include <vector>

#include "composite.hpp"
#include "counting.hpp"
#include "errors.hpp"
#include "semigroup.hpp"

namespace cusp {

// A candidate singular plane curve: degree, genus, the cusp semigroups, and
// the T(2,2n) link-singularity multiplicities (positive = standard A_{2n-1}
// points, negative = their mirrors, available in the real/smooth category).
struct CurveConfig {
  long long degree = 0;
  long long genus = 0;
  std::vector<NumericalSemigroup> cusps;
  std::map<long long, long long> positive_links, negative_links;
  bool allow_genus_slack = false;

  long long nu() const { return static_cast<long long>(cusps.size()); }
  long long kappa_pos() const {
    long long k = 0;
    for (const auto& [n, c] : positive_links) k += n * c;
    return k;
  }
  long long kappa_neg() const {
    long long k = 0;
    for (const auto& [n, c] : negative_links) k += n * c;
    return k;
  }
  long long eta_pos() const {
    long long e = 0;
    for (const auto& [n, c] : positive_links) e += c;
    return e;
  }
  long long eta_neg() const {
    long long e = 0;
    for (const auto& [n, c] : negative_links) e += c;
    return e;
  }
  // rho = b_1 of the ambient connected sum of S^2 x S^1 factors.
  long long rho() const { return 2 * genus + eta_pos() + eta_neg(); }
  // Total three-genus of the cuspidal part.
  long long g3() const {
    long long g = 0;
    for (const auto& s : cusps) g += s.genus;
    return g;
  }
  // Genus forced by the degree/singularity data.
  long long expected_genus() const {
    return (degree - 1) * (degree - 2) / 2 - g3() - (kappa_pos() + kappa_neg());
  }
};

inline void validate_curve_config(const CurveConfig& c) {
  if (c.degree < 3) throw ConfigMismatch("curve config: degree must be >= 3");
  if (c.genus < 0) throw ConfigMismatch("curve config: genus must be >= 0");
  for (const auto& m : {c.positive_links, c.negative_links})
    for (const auto& [n, cnt] : m) {
      if (n < 1) throw ConfigMismatch("curve config: link index n must be >= 1");
      if (cnt < 0) throw ConfigMismatch("curve config: link multiplicities must be >= 0");
    }
  if (!c.allow_genus_slack && c.genus != c.expected_genus())
    throw ConfigMismatch(
        "curve config: genus " + std::to_string(c.genus) +
        " violates the degree-genus formula (expected " +
        std::to_string(c.expected_genus()) +
        "); pass allow_genus_slack to explore off-formula configurations");
}

// The composite knot K-hat carried by the curve's boundary three-manifold.
inline CompositeKnotSpec composite_of(const CurveConfig& c) {
  CompositeKnotSpec spec;
  spec.cusp_semigroups = c.cusps;
  spec.m_pos = c.positive_links;
  spec.m_neg = c.negative_links;
  spec.g = c.genus;
  return spec;
}

// Infimal convolution of the cusp counting functions (the R-function of the
// connected sum of the cusp knots); the unknot function if there are none.
inline CountingFunction r_of(const CurveConfig& c) {
  if (c.cusps.empty()) return trivial_counting_function();
  CountingFunction r = counting_function(c.cusps.front());
  for (size_t i = 1; i < c.cusps.size(); ++i)
    r = infimal_convolution(r, counting_function(c.cusps[i]));
  return r;
}

}  // namespace cusp
