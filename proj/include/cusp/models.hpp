#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "complex.hpp"
#include "errors.hpp"
#include "rational.hpp"
#include "staircase.hpp"

namespace cusp {

// A knot complex whose top/bottom towers split off as shifted staircases:
// V^T and V^B are computable from c_top/c_bot alone, and the optional full
// chain-level model (with its homology actions) lets the oracle re-derive
// them independently.
struct SplitTowerModel {
  std::string name;
  bool split = true;  // borromean_model is the one non-split building block
  Staircase c_top, c_bot;
  std::array<long long, 2> shift_top{0, 0}, shift_bot{0, 0};  // doubled
  bool has_full_model = false;
  BigradedComplex full_model;
  std::vector<Action> actions;

  ShiftedStaircase top() const { return ShiftedStaircase{c_top, shift_top[0], shift_top[1]}; }
  ShiftedStaircase bot() const { return ShiftedStaircase{c_bot, shift_bot[0], shift_bot[1]}; }
};

// Rank-one model of the unknot (both towers trivial, no actions).
inline SplitTowerModel unknot_model() {
  SplitTowerModel m;
  m.name = "unknot";
  m.c_top = trivial_staircase();
  m.c_bot = trivial_staircase();
  m.has_full_model = true;
  m.full_model.gradings = {{0, 0}};
  m.full_model.labels = {"u"};
  return m;
}

// Knotification of the torus link T(2, 2n): the complex splits as
// S^n{1/2, 1/2} (+) S^{n-1}{-1/2, -1/2}, and the homology action maps the
// top staircase into the bottom one.  The full model keeps the x/y basis:
// generators y_0..y_2n and x_1..x_{2n-1}, all of bigrading
// (1/2 - 2n + i, 1/2 - i), with dx_i = V y_{i-1} + U y_{i+1} and the
// homotopy-simplified action
//   y_{2i} -> U y_{2i+1} (i < n),  x_{2i+1} -> U x_{2i+2} (i < n-1),
//   y_{2n} -> V y_{2n-1}.
inline SplitTowerModel knotified_t2_2n(long long n) {
  if (n < 1) throw Error("knotified_t2_2n: n must be >= 1");
  SplitTowerModel m;
  m.name = "knotified T(2," + std::to_string(2 * n) + ")";
  m.c_top = basic_staircase(n);
  m.shift_top = {1, 1};
  m.c_bot = n >= 2 ? basic_staircase(n - 1) : trivial_staircase();
  m.shift_bot = {-1, -1};

  m.has_full_model = true;
  int nn = static_cast<int>(n);
  auto y = [](int i) { return i; };                 // 0..2n
  auto x = [nn](int i) { return 2 * nn + i; };      // 1..2n-1
  m.full_model.gradings.resize(static_cast<size_t>(4 * nn));
  m.full_model.labels.resize(static_cast<size_t>(4 * nn));
  for (int i = 0; i <= 2 * nn; ++i) {
    m.full_model.gradings[static_cast<size_t>(y(i))] = {1 - 4 * n + 2 * i, 1 - 2 * i};
    m.full_model.labels[static_cast<size_t>(y(i))] = "y" + std::to_string(i);
  }
  for (int i = 1; i <= 2 * nn - 1; ++i) {
    m.full_model.gradings[static_cast<size_t>(x(i))] = {1 - 4 * n + 2 * i, 1 - 2 * i};
    m.full_model.labels[static_cast<size_t>(x(i))] = "x" + std::to_string(i);
  }
  for (int i = 1; i <= 2 * nn - 1; ++i) {
    add_entry(m.full_model.diff, x(i), y(i - 1), 0, 1);
    add_entry(m.full_model.diff, x(i), y(i + 1), 1, 0);
  }
  Action a;
  for (int i = 0; i < nn; ++i) add_entry(a, y(2 * i), y(2 * i + 1), 1, 0);
  for (int i = 0; i + 1 < nn; ++i) add_entry(a, x(2 * i + 1), x(2 * i + 2), 1, 0);
  add_entry(a, y(2 * nn), y(2 * nn - 1), 0, 1);
  m.actions.push_back(std::move(a));
  return m;
}

// Knotification of the mirror of T(2, 2n): everything dualizes, so the
// splitting is S_bar^{n-1}{1/2, 1/2} (+) S_bar^n{-1/2, -1/2} with the action
// mapping S_bar^{n-1} into S_bar^n.
inline SplitTowerModel knotified_mirror_t2_2n(long long n) {
  SplitTowerModel pos = knotified_t2_2n(n);
  SplitTowerModel m;
  m.name = "knotified mirror T(2," + std::to_string(2 * n) + ")";
  m.c_top = n >= 2 ? basic_staircase(-(n - 1)) : trivial_staircase();
  m.shift_top = {1, 1};
  m.c_bot = basic_staircase(-n);
  m.shift_bot = {-1, -1};
  m.has_full_model = true;
  m.full_model = dualize_complex(pos.full_model);
  for (const auto& a : pos.actions) m.actions.push_back(dualize_action(a));
  return m;
}

// The rank-4 zero-differential complex of the Borromean knot in #^2 S^2xS^1,
// generators 1, x, y, xy at bigradings (1,-1), (0,0), (0,0), (-1,1), with the
// two homology actions (the degree-consistent reading of the action diagrams,
// a square-zero pair of chain maps):
//   A_{y*}: x -> U.1 + V.xy,  xy -> U y,  1 -> V y
//   A_{x*}: y -> U.1 + V.xy,  xy -> U x,  1 -> V x.
// This model does NOT have split towers; v_split_with_borromean rejects it.
inline SplitTowerModel borromean_model() {
  SplitTowerModel m;
  m.name = "borromean";
  m.split = false;
  m.has_full_model = true;
  m.full_model.gradings = {{2, -2}, {0, 0}, {0, 0}, {-2, 2}};
  m.full_model.labels = {"1", "x", "y", "xy"};
  Action ay;
  add_entry(ay, 1, 0, 1, 0);
  add_entry(ay, 1, 3, 0, 1);
  add_entry(ay, 3, 2, 1, 0);
  add_entry(ay, 0, 2, 0, 1);
  Action ax;
  add_entry(ax, 2, 0, 1, 0);
  add_entry(ax, 2, 3, 0, 1);
  add_entry(ax, 3, 1, 1, 0);
  add_entry(ax, 0, 1, 0, 1);
  m.actions.push_back(std::move(ay));
  m.actions.push_back(std::move(ax));
  return m;
}

// V^T and V^B of (model knot) # n copies of the Borromean knot:
//   V^T_s = -n/2 + min_{0<=j<=n} (V_{s+2j-n}(c_top) + j)
//   V^B_s = -n/2 + max_{0<=j<=n} (V_{s+2j-n}(c_bot) + j).
inline std::pair<Rational, Rational> v_split_with_borromean(const SplitTowerModel& m,
                                                            long long n, long long s) {
  if (!m.split)
    throw NotSplitTowers("v_split_with_borromean: model does not have split towers");
  if (n < 0) throw Error("v_split_with_borromean: n must be >= 0");
  ShiftedStaircase top = m.top(), bot = m.bot();
  Rational vt, vb;
  for (long long j = 0; j <= n; ++j) {
    Rational t = v_s_shifted(top, s + 2 * j - n) + j;
    Rational b = v_s_shifted(bot, s + 2 * j - n) + j;
    if (j == 0 || t < vt) vt = t;
    if (j == 0 || b > vb) vb = b;
  }
  return {vt - Rational(n, 2), vb - Rational(n, 2)};
}

}  // namespace cusp
