#pragma once

#include <map>
#include <utility>
#include <vector>

#include "complex.hpp"
#include "errors.hpp"
#include "models.hpp"
#include "rational.hpp"
#include "semigroup.hpp"
#include "staircase.hpp"

namespace cusp {

// A connected sum K-hat = (cusp torus knots) # (knotified +/- T(2,2n) links)
// #_g Borromean, described combinatorially.  m_pos[n] / m_neg[n] count the
// positive / negative T(2,2n) link singularities; g counts Borromean factors.
struct CompositeKnotSpec {
  std::vector<NumericalSemigroup> cusp_semigroups;
  std::map<long long, long long> m_pos, m_neg;
  long long g = 0;

  long long nu() const { return static_cast<long long>(cusp_semigroups.size()); }
  long long kappa_pos() const {
    long long k = 0;
    for (const auto& [n, c] : m_pos) k += n * c;
    return k;
  }
  long long kappa_neg() const {
    long long k = 0;
    for (const auto& [n, c] : m_neg) k += n * c;
    return k;
  }
  long long eta_pos() const {
    long long e = 0;
    for (const auto& [n, c] : m_pos) e += c;
    return e;
  }
  long long eta_neg() const {
    long long e = 0;
    for (const auto& [n, c] : m_neg) e += c;
    return e;
  }
  long long eta() const { return eta_pos() + eta_neg(); }
  long long delta1() const { return kappa_pos() - (kappa_neg() - eta_neg()); }
  long long delta2() const { return (kappa_pos() - eta_pos()) - kappa_neg(); }
};

inline void validate_composite_spec(const CompositeKnotSpec& spec) {
  if (spec.g < 0) throw ConfigMismatch("composite spec: g must be >= 0");
  for (const auto& m : {spec.m_pos, spec.m_neg})
    for (const auto& [n, c] : m) {
      if (n < 1) throw ConfigMismatch("composite spec: link index n must be >= 1");
      if (c < 0) throw ConfigMismatch("composite spec: link multiplicities must be >= 0");
    }
}

// V_s of the cuspidal connected summand (product of the cusp staircases);
// the empty product is the unknot.
inline long long v_cusp_part(const CompositeKnotSpec& spec, long long s) {
  std::vector<Staircase> st;
  st.reserve(spec.cusp_semigroups.size());
  for (const auto& sg : spec.cusp_semigroups) st.push_back(staircase_from_semigroup(sg));
  return v_s_positive(st, s);
}

namespace detail {

inline void require_single_cusp(const CompositeKnotSpec& spec, const char* which) {
  if (spec.nu() > 1)
    throw UnsupportedMixedCase(std::string(which) +
                               ": negative defect with more than one cusp has no closed "
                               "formula; use the chain-level oracle at small scale instead");
}

}  // namespace detail

// (V^T_s, V^B_s) of K-tilde (the composite before the Borromean factors):
//   delta1 >= 0: V^T_s = -eta/4 + min_{0<=j<=delta1} (V_{s+2j-delta1} + j)
//   delta1 <  0: V^T_s = -eta/4 + max_{0<=j<=-delta1} (V_{s-2j-delta1} - j)
//   delta2 >= 0: V^B_s =  eta/4 + min_{0<=j<=delta2} (V_{s+2j-delta2} + j)
//   delta2 <  0: V^B_s =  eta/4 + max_{0<=j<=-delta2} (V_{s-2j-delta2} - j)
// with V the cusp-part V-function.  The negative-defect cases require a
// single cusp (UnsupportedMixedCase otherwise).
inline std::pair<Rational, Rational> v_top_bot_tilde(const CompositeKnotSpec& spec,
                                                     long long s) {
  validate_composite_spec(spec);
  auto V = [&](long long t) { return v_cusp_part(spec, t); };
  long long d1 = spec.delta1(), d2 = spec.delta2(), eta = spec.eta();
  Rational quarter_eta(eta, 4);

  Rational vt;
  if (d1 >= 0) {
    long long best = 0;
    for (long long j = 0; j <= d1; ++j) {
      long long cand = V(s + 2 * j - d1) + j;
      if (j == 0 || cand < best) best = cand;
    }
    vt = Rational(best) - quarter_eta;
  } else {
    detail::require_single_cusp(spec, "v_top_bot_tilde");
    long long best = 0;
    for (long long j = 0; j <= -d1; ++j) {
      long long cand = V(s - 2 * j - d1) - j;
      if (j == 0 || cand > best) best = cand;
    }
    vt = Rational(best) - quarter_eta;
  }

  Rational vb;
  if (d2 >= 0) {
    long long best = 0;
    for (long long j = 0; j <= d2; ++j) {
      long long cand = V(s + 2 * j - d2) + j;
      if (j == 0 || cand < best) best = cand;
    }
    vb = Rational(best) + quarter_eta;
  } else {
    detail::require_single_cusp(spec, "v_top_bot_tilde");
    long long best = 0;
    for (long long j = 0; j <= -d2; ++j) {
      long long cand = V(s - 2 * j - d2) - j;
      if (j == 0 || cand > best) best = cand;
    }
    vb = Rational(best) + quarter_eta;
  }
  return {vt, vb};
}

// (V^T_s, V^B_s) of K-hat = K-tilde #_g Borromean:
//   (a) delta1 >= 0: V^T_s = -g/2 - eta/4 + min_{0<=j<=delta1+g} (V_{s+2j-delta1-g} + j)
//   (b) delta2 >= 0: V^B_s =  eta/4 - g/2
//                            + max_{0<=i<=g} min_{0<=j<=delta2} (V_{s+2i+2j-g-delta2} + i + j)
//   (c) delta1 <  0: V^T_s =  g/2 - eta/4
//                            + min_{0<=i<=g} max_{0<=j<=-delta1} (V_{s-2j-2i+g-delta1} - i - j)
//   (d) delta2 <  0: V^B_s =  g/2 + eta/4 + max_{0<=j<=g-delta2} (V_{s-2j+g-delta2} - j)
// Cases (c) and (d) require a single cusp.
inline std::pair<Rational, Rational> v_top_bot_composite(const CompositeKnotSpec& spec,
                                                         long long s) {
  validate_composite_spec(spec);
  auto V = [&](long long t) { return v_cusp_part(spec, t); };
  long long d1 = spec.delta1(), d2 = spec.delta2(), eta = spec.eta(), g = spec.g;
  Rational quarter_eta(eta, 4), half_g(g, 2);

  Rational vt;
  if (d1 >= 0) {
    long long best = 0;
    for (long long j = 0; j <= d1 + g; ++j) {
      long long cand = V(s + 2 * j - d1 - g) + j;
      if (j == 0 || cand < best) best = cand;
    }
    vt = Rational(best) - half_g - quarter_eta;
  } else {
    detail::require_single_cusp(spec, "v_top_bot_composite");
    bool first_outer = true;
    long long best = 0;
    for (long long i = 0; i <= g; ++i) {
      long long inner = 0;
      for (long long j = 0; j <= -d1; ++j) {
        long long cand = V(s - 2 * j - 2 * i + g - d1) - i - j;
        if (j == 0 || cand > inner) inner = cand;
      }
      if (first_outer || inner < best) best = inner;
      first_outer = false;
    }
    vt = Rational(best) + half_g - quarter_eta;
  }

  Rational vb;
  if (d2 >= 0) {
    bool first_outer = true;
    long long best = 0;
    for (long long i = 0; i <= g; ++i) {
      long long inner = 0;
      for (long long j = 0; j <= d2; ++j) {
        long long cand = V(s + 2 * i + 2 * j - g - d2) + i + j;
        if (j == 0 || cand < inner) inner = cand;
      }
      if (first_outer || inner > best) best = inner;
      first_outer = false;
    }
    vb = Rational(best) - half_g + quarter_eta;
  } else {
    detail::require_single_cusp(spec, "v_top_bot_composite");
    long long best = 0;
    for (long long j = 0; j <= g - d2; ++j) {
      long long cand = V(s - 2 * j + g - d2) - j;
      if (j == 0 || cand > best) best = cand;
    }
    vb = Rational(best) + half_g + quarter_eta;
  }
  return {vt, vb};
}

// Chain-level realization of the composite knot: the tensor product of the
// cusp staircase complexes, the knotified link models, and g Borromean
// factors, with every factor's homology actions lifted to the product.
// Intended for small-scale oracle cross-validation of the closed formulas.
inline std::pair<BigradedComplex, std::vector<Action>> assemble_full(
    const CompositeKnotSpec& spec) {
  validate_composite_spec(spec);
  std::vector<std::pair<BigradedComplex, std::vector<Action>>> factors;
  for (const auto& sg : spec.cusp_semigroups)
    factors.emplace_back(staircase_to_complex(staircase_from_semigroup(sg)),
                         std::vector<Action>{});
  for (const auto& [n, c] : spec.m_pos)
    for (long long i = 0; i < c; ++i) {
      SplitTowerModel m = knotified_t2_2n(n);
      factors.emplace_back(m.full_model, m.actions);
    }
  for (const auto& [n, c] : spec.m_neg)
    for (long long i = 0; i < c; ++i) {
      SplitTowerModel m = knotified_mirror_t2_2n(n);
      factors.emplace_back(m.full_model, m.actions);
    }
  for (long long i = 0; i < spec.g; ++i) {
    SplitTowerModel m = borromean_model();
    factors.emplace_back(m.full_model, m.actions);
  }

  if (factors.empty()) {
    BigradedComplex c;
    c.gradings = {{0, 0}};
    c.labels = {"u"};
    return {c, {}};
  }
  auto acc = std::move(factors.front());
  for (size_t k = 1; k < factors.size(); ++k) {
    const auto& [fc, fa] = factors[k];
    std::vector<Action> combined =
        tensor_actions(acc.second, acc.first.size(), fa, fc.size());
    acc.first = tensor(acc.first, fc);
    acc.second = std::move(combined);
  }
  return acc;
}

}  // namespace cusp
