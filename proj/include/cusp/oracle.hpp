#pragma once

#include <algorithm>
#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include "complex.hpp"
#include "errors.hpp"
#include "rational.hpp"
#include "snf.hpp"

namespace cusp {

// Complexes larger than this are rejected with CapExceeded; override with the
// CUSPCHECK_GENERATOR_CAP environment variable.
inline long long generator_cap() {
  if (const char* env = std::getenv("CUSPCHECK_GENERATOR_CAP")) {
    long long v = std::atoll(env);
    if (v > 0) return v;
  }
  return 5000;
}

using UAction = std::map<std::pair<int, int>, long long>;

namespace detail {

// Rewrites a bidegree-(-1,-1) map of the bigraded complex as a U-matrix on
// the s-level generators e_x = U^{p_x} V^{q_x} x, where p_x = max(0, s_x - s)
// and q_x = max(0, s - s_x): each monomial U^a V^b from y to x becomes
// U^{a + p_y - p_x}, which always has a nonnegative exponent.
inline UAction project_entries(const EntryMap& m, const std::vector<long long>& p,
                               const std::vector<long long>& q, const char* what) {
  UAction out;
  for (const auto& [key, sum] : m) {
    auto [from, to] = key;
    for (const auto& mono : sum) {
      long long c = mono.a + p[static_cast<size_t>(from)] - p[static_cast<size_t>(to)];
      long long c2 = mono.b + q[static_cast<size_t>(from)] - q[static_cast<size_t>(to)];
      if (c != c2)
        throw Error(std::string(what) + ": entry does not preserve the level filtration");
      if (c < 0)
        throw Error(std::string(what) + ": negative exponent after level projection");
      auto it = out.find(key);
      if (it == out.end())
        out.emplace(key, c);
      else if (it->second == c)
        out.erase(it);  // cancellation over F2
      else
        throw Error(std::string(what) + ": inhomogeneous entry after projection");
    }
  }
  return out;
}

struct LevelOffsets {
  std::vector<long long> p, q;  // U- and V-exponents of e_x
};

inline LevelOffsets level_offsets(const BigradedComplex& c, long long s) {
  LevelOffsets off;
  off.p.reserve(c.gradings.size());
  off.q.reserve(c.gradings.size());
  for (const auto& g : c.gradings) {
    long long sx = alexander_level(g);
    off.p.push_back(std::max<long long>(0, sx - s));
    off.q.push_back(std::max<long long>(0, s - sx));
  }
  return off;
}

}  // namespace detail

// The large-surgery subcomplex at level s, as a free F2[U]-complex: one
// generator e_x = U^{max(0,s_x-s)} V^{max(0,s-s_x)} x per generator x, with
// gr_w(e_x) = gr_w(x) - 2 max(0, s_x - s).
inline GradedUComplex a_s_subcomplex(const BigradedComplex& c, long long s) {
  if (c.size() > generator_cap())
    throw CapExceeded("a_s_subcomplex: complex exceeds the generator cap");
  detail::LevelOffsets off = detail::level_offsets(c, s);
  GradedUComplex out;
  out.gradings.reserve(c.gradings.size());
  for (size_t i = 0; i < c.gradings.size(); ++i)
    out.gradings.push_back(c.gradings[i][0] - 4 * off.p[i]);
  out.diff = detail::project_entries(c.diff, off.p, off.q, "a_s_subcomplex");
  return out;
}

// An action of the bigraded complex, projected to the same U-generators.
inline UAction a_s_action(const BigradedComplex& c, const Action& act, long long s) {
  detail::LevelOffsets off = detail::level_offsets(c, s);
  return detail::project_entries(act, off.p, off.q, "a_s_action");
}

// V_s of a complex via homology of the level subcomplex.
inline Rational v_s_oracle(const BigradedComplex& c, long long s) {
  return Rational(-d_invariant(a_s_subcomplex(c, s)), 4);
}

// V_s^T and V_s^B of a complex with module actions:
//   V^T from the cokernel of the summed action images on H(A_s)/Tors,
//   V^B from the intersection of the action kernels.
// An empty action list makes both equal the plain V_s.
inline std::pair<Rational, Rational> v_top_bot_oracle(const BigradedComplex& c,
                                                      const std::vector<Action>& actions,
                                                      long long s) {
  validate_bigraded(c);
  for (const auto& a : actions) validate_action(c, a);
  GradedUComplex u = a_s_subcomplex(c, s);
  std::vector<UAction> u_actions;
  u_actions.reserve(actions.size());
  for (const auto& a : actions) u_actions.push_back(a_s_action(c, a, s));

  UHomology h(u);
  int f = static_cast<int>(h.free_rank());
  if (f == 0) throw NoTower("v_top_bot_oracle: homology has no free summand");
  const std::vector<long long>& kappa = h.free_grading;
  int k = static_cast<int>(u_actions.size());

  // Induced action matrices on the free part: for each action, column r lists
  // the free coordinates of (action applied to the r-th free representative).
  std::vector<std::vector<std::vector<int>>> induced(static_cast<size_t>(k));
  for (int g = 0; g < k; ++g) {
    std::vector<std::vector<int>> targets(static_cast<size_t>(u.size()));
    for (const auto& [key, e] : u_actions[static_cast<size_t>(g)]) {
      (void)e;
      targets[static_cast<size_t>(key.first)].push_back(key.second);
    }
    induced[static_cast<size_t>(g)].resize(static_cast<size_t>(f));
    for (int r = 0; r < f; ++r) {
      BitVec image(u.size());
      const BitVec& vec = h.free_vec[static_cast<size_t>(r)];
      for (int j = 0; j < u.size(); ++j)
        if (vec.get(j))
          for (int t : targets[static_cast<size_t>(j)]) image.flip(t);
      BitVec coords = h.free_coords(image);
      for (int rp = 0; rp < f; ++rp)
        if (coords.get(rp)) induced[static_cast<size_t>(g)][static_cast<size_t>(r)].push_back(rp);
    }
  }

  // Bottom tower: kernel of the actions stacked vertically.
  std::vector<long long> stacked_rows(static_cast<size_t>(k * f));
  for (int g = 0; g < k; ++g)
    for (int r = 0; r < f; ++r)
      stacked_rows[static_cast<size_t>(g * f + r)] = kappa[static_cast<size_t>(r)];
  std::vector<std::vector<int>> stacked_cols(static_cast<size_t>(f));
  for (int r = 0; r < f; ++r)
    for (int g = 0; g < k; ++g)
      for (int rp : induced[static_cast<size_t>(g)][static_cast<size_t>(r)])
        stacked_cols[static_cast<size_t>(r)].push_back(g * f + rp);
  detail::ColumnReduce bottom(k * f, stacked_rows, stacked_cols, kappa, 2,
                              /*want_qinv=*/false);
  long long bot_max = 0;
  bool bot_found = false;
  for (int j : bottom.kernel_cols()) {
    long long g = bottom.q_grading[static_cast<size_t>(j)];
    if (!bot_found || g > bot_max) bot_max = g;
    bot_found = true;
  }
  if (!bot_found) throw NoTower("v_top_bot_oracle: action kernels intersect trivially");

  // Top tower: cokernel of the action images concatenated horizontally.
  std::vector<std::vector<int>> image_cols;
  std::vector<long long> image_grading;
  for (int g = 0; g < k; ++g)
    for (int r = 0; r < f; ++r) {
      image_cols.push_back(induced[static_cast<size_t>(g)][static_cast<size_t>(r)]);
      image_grading.push_back(kappa[static_cast<size_t>(r)] - 2);
    }
  detail::RowReduce top(kappa, image_cols, image_grading, /*track_basis=*/false);
  long long top_max = 0;
  bool top_found = false;
  for (int r : top.free_rows()) {
    long long g = kappa[static_cast<size_t>(r)];
    if (!top_found || g > top_max) top_max = g;
    top_found = true;
  }
  if (!top_found) throw NoTower("v_top_bot_oracle: actions annihilate every tower");

  return {Rational(-top_max, 4), Rational(-bot_max, 4)};
}

// Checks that the level-labeled complex is a resolution: writing C_l for the
// span of generators at level l, the differential must decrease levels by
// exactly one, and the homology of (C_n -> ... -> C_0) must vanish at every
// level >= 1.  Exactness is verified on each finite (gr_w, gr_z)-homogeneous
// piece; outside the swept window the pieces repeat via multiplication by U
// and V, so the sweep is exhaustive.
inline bool exactness_check(const BigradedComplex& c, const std::vector<long long>& levels) {
  if (static_cast<int>(levels.size()) != c.size())
    throw Error("exactness_check: one level per generator required");
  if (c.size() > generator_cap())
    throw CapExceeded("exactness_check: complex exceeds the generator cap");
  validate_bigraded(c);
  if (c.size() == 0) return true;
  for (const auto& [key, sum] : c.diff) {
    (void)sum;
    if (levels[static_cast<size_t>(key.first)] != levels[static_cast<size_t>(key.second)] + 1)
      throw Error("exactness_check: differential does not decrease the level by one");
  }

  long long wmin = c.gradings[0][0], wmax = wmin, zmin = c.gradings[0][1], zmax = zmin;
  for (const auto& g : c.gradings) {
    wmin = std::min(wmin, g[0]);
    wmax = std::max(wmax, g[0]);
    zmin = std::min(zmin, g[1]);
    zmax = std::max(zmax, g[1]);
  }

  // Members of the (w, z) piece at a given level, as generator indices.
  auto piece = [&](long long w, long long z, long long level) {
    std::vector<int> out;
    for (int i = 0; i < c.size(); ++i) {
      if (levels[static_cast<size_t>(i)] != level) continue;
      const auto& g = c.gradings[static_cast<size_t>(i)];
      if (g[0] >= w && (g[0] - w) % 4 == 0 && g[1] >= z && (g[1] - z) % 4 == 0)
        out.push_back(i);
    }
    return out;
  };
  // Rank of the differential from the (w, z) piece at `level` down one step.
  auto rank_down = [&](long long w, long long z, long long level) {
    std::vector<int> src = piece(w, z, level);
    std::vector<int> dst = piece(w - 2, z - 2, level - 1);
    if (src.empty() || dst.empty()) return 0;
    std::vector<int> dst_pos(static_cast<size_t>(c.size()), -1);
    for (size_t t = 0; t < dst.size(); ++t) dst_pos[static_cast<size_t>(dst[t])] = static_cast<int>(t);
    std::vector<BitVec> rows(src.size(), BitVec(static_cast<int>(dst.size())));
    for (size_t j = 0; j < src.size(); ++j) {
      auto it = c.diff.lower_bound({src[j], 0});
      for (; it != c.diff.end() && it->first.first == src[j]; ++it) {
        int pos = dst_pos[static_cast<size_t>(it->first.second)];
        if (pos >= 0 && it->second.size() % 2 == 1) rows[j].set(pos);
      }
    }
    return f2_rank(std::move(rows));
  };

  long long max_level = *std::max_element(levels.begin(), levels.end());
  for (long long w = wmin - 6; w <= wmax + 2; ++w)
    for (long long z = zmin - 6; z <= zmax + 2; ++z)
      for (long long level = 1; level <= max_level; ++level) {
        long long dim = static_cast<long long>(piece(w, z, level).size());
        long long out_rank = rank_down(w, z, level);
        long long in_rank = rank_down(w + 2, z + 2, level + 1);
        if (dim - out_rank != in_rank) return false;
      }
  return true;
}

}  // namespace cusp
