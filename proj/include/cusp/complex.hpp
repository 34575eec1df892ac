#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "staircase.hpp"

namespace cusp {

// A monomial U^a V^b over F2 (the coefficient is implicitly 1).
struct Monomial {
  long long a = 0, b = 0;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

// A sum of distinct monomials, kept sorted; adding an existing monomial
// cancels it (coefficients live in F2).
using MonomialSum = std::vector<Monomial>;

// Sparse matrix keyed by (from, to): the differential or an action sends
// generator `from` to sum_of_monomials * `to` for each entry.
using EntryMap = std::map<std::pair<int, int>, MonomialSum>;

// A finitely generated bigraded complex over F2[U, V].  Gradings are doubled
// (2*gr_w, 2*gr_z); U has doubled bidegree (-4, 0), V has (0, -4), and the
// differential and all module actions have doubled bidegree (-2, -2).
struct BigradedComplex {
  std::vector<std::array<long long, 2>> gradings;
  std::vector<std::string> labels;  // optional; empty or one per generator
  EntryMap diff;

  int size() const { return static_cast<int>(gradings.size()); }
};

// One commuting module action (same entry format and bidegree as diff).
using Action = EntryMap;

// Adds U^a V^b * `to` to the image of `from` over F2 (an equal existing
// monomial cancels).
inline void add_entry(EntryMap& m, int from, int to, long long a, long long b) {
  auto key = std::make_pair(from, to);
  MonomialSum& sum = m[key];
  Monomial mono{a, b};
  auto it = std::lower_bound(sum.begin(), sum.end(), mono);
  if (it != sum.end() && *it == mono)
    sum.erase(it);
  else
    sum.insert(it, mono);
  if (sum.empty()) m.erase(key);
}

// Checks that every monomial of `m` has exponents >= 0 and doubled bidegree
// (-2, -2) with respect to `gradings`.  In particular each homogeneous entry
// can hold at most one monomial.
inline void check_entry_degrees(const EntryMap& m,
                                const std::vector<std::array<long long, 2>>& gradings,
                                const char* what) {
  int n = static_cast<int>(gradings.size());
  for (const auto& [key, sum] : m) {
    auto [from, to] = key;
    if (from < 0 || from >= n || to < 0 || to >= n)
      throw Error(std::string(what) + ": entry index out of range");
    for (const auto& mono : sum) {
      if (mono.a < 0 || mono.b < 0)
        throw Error(std::string(what) + ": negative monomial exponent");
      if (gradings[static_cast<size_t>(to)][0] - 4 * mono.a !=
              gradings[static_cast<size_t>(from)][0] - 2 ||
          gradings[static_cast<size_t>(to)][1] - 4 * mono.b !=
              gradings[static_cast<size_t>(from)][1] - 2)
        throw Error(std::string(what) + ": entry is not of bidegree (-1, -1)");
    }
  }
}

// Composes two entry maps over F2 (monomial exponents add; parallel equal
// paths cancel in pairs).
inline EntryMap compose(const EntryMap& second, const EntryMap& first) {
  EntryMap out;
  for (const auto& [k1, sum1] : first) {
    auto [x, y] = k1;
    auto it = second.lower_bound({y, 0});
    for (; it != second.end() && it->first.first == y; ++it) {
      int z = it->first.second;
      for (const auto& m1 : sum1)
        for (const auto& m2 : it->second) add_entry(out, x, z, m1.a + m2.a, m1.b + m2.b);
    }
  }
  return out;
}

// XOR of two entry maps over F2 (used for the chain-map commutator).
inline EntryMap entry_sum(const EntryMap& p, const EntryMap& q) {
  EntryMap out = p;
  for (const auto& [k, sum] : q)
    for (const auto& mono : sum) add_entry(out, k.first, k.second, mono.a, mono.b);
  return out;
}

// Validates grading homogeneity and d^2 = 0.
inline void validate_bigraded(const BigradedComplex& c) {
  check_entry_degrees(c.diff, c.gradings, "differential");
  if (!compose(c.diff, c.diff).empty())
    throw Error("validate_bigraded: differential does not square to zero");
}

// Validates that an action is homogeneous of bidegree (-1, -1) and commutes
// with the differential (dA + Ad = 0 over F2).
inline void validate_action(const BigradedComplex& c, const Action& act) {
  check_entry_degrees(act, c.gradings, "action");
  if (!entry_sum(compose(c.diff, act), compose(act, c.diff)).empty())
    throw ActionNotChainMap("validate_action: action does not commute with d");
}

// Tensor product over F2[U, V].  Generator (i, j) of C1 (x) C2 gets index
// i * C2.size() + j; the differential is d1 (x) 1 + 1 (x) d2 (no signs in
// characteristic 2).
inline BigradedComplex tensor(const BigradedComplex& c1, const BigradedComplex& c2) {
  BigradedComplex out;
  int n1 = c1.size(), n2 = c2.size();
  out.gradings.reserve(static_cast<size_t>(n1) * static_cast<size_t>(n2));
  bool labeled = !c1.labels.empty() && !c2.labels.empty();
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n2; ++j) {
      out.gradings.push_back(
          {c1.gradings[static_cast<size_t>(i)][0] + c2.gradings[static_cast<size_t>(j)][0],
           c1.gradings[static_cast<size_t>(i)][1] + c2.gradings[static_cast<size_t>(j)][1]});
      if (labeled)
        out.labels.push_back(c1.labels[static_cast<size_t>(i)] + "*" +
                             c2.labels[static_cast<size_t>(j)]);
    }
  for (const auto& [k, sum] : c1.diff)
    for (const auto& m : sum)
      for (int j = 0; j < n2; ++j)
        add_entry(out.diff, k.first * n2 + j, k.second * n2 + j, m.a, m.b);
  for (const auto& [k, sum] : c2.diff)
    for (const auto& m : sum)
      for (int i = 0; i < n1; ++i)
        add_entry(out.diff, i * n2 + k.first, i * n2 + k.second, m.a, m.b);
  return out;
}

// Extends actions through a tensor product: actions of the left factor become
// A (x) 1 and actions of the right factor become 1 (x) B, so the combined
// list acts on C1 (x) C2.
inline std::vector<Action> tensor_actions(const std::vector<Action>& left, int n1,
                                          const std::vector<Action>& right, int n2) {
  std::vector<Action> out;
  out.reserve(left.size() + right.size());
  for (const auto& a : left) {
    Action e;
    for (const auto& [k, sum] : a)
      for (const auto& m : sum)
        for (int j = 0; j < n2; ++j)
          add_entry(e, k.first * n2 + j, k.second * n2 + j, m.a, m.b);
    out.push_back(std::move(e));
  }
  for (const auto& b : right) {
    Action e;
    for (const auto& [k, sum] : b)
      for (const auto& m : sum)
        for (int i = 0; i < n1; ++i)
          add_entry(e, i * n2 + k.first, i * n2 + k.second, m.a, m.b);
    out.push_back(std::move(e));
  }
  return out;
}

// Dual complex: negate gradings and transpose every entry map (exponents are
// unchanged; the bidegree condition is preserved).
inline BigradedComplex dualize_complex(const BigradedComplex& c) {
  BigradedComplex out;
  out.gradings.reserve(c.gradings.size());
  for (const auto& g : c.gradings) out.gradings.push_back({-g[0], -g[1]});
  out.labels = c.labels;
  for (const auto& [k, sum] : c.diff)
    for (const auto& m : sum) add_entry(out.diff, k.second, k.first, m.a, m.b);
  return out;
}

inline Action dualize_action(const Action& a) {
  Action out;
  for (const auto& [k, sum] : a)
    for (const auto& m : sum) add_entry(out, k.second, k.first, m.a, m.b);
  return out;
}

// Shifts the doubled bigrading of every generator by (dw2, dz2).
inline BigradedComplex shift_complex(BigradedComplex c, long long dw2, long long dz2) {
  for (auto& g : c.gradings) {
    g[0] += dw2;
    g[1] += dz2;
  }
  return c;
}

// The chain complex of a staircase (optionally with a bigrading shift).
inline BigradedComplex staircase_to_complex(const Staircase& st, long long dw2 = 0,
                                            long long dz2 = 0) {
  BigradedComplex out;
  out.gradings = st.gradings;
  for (auto& g : out.gradings) {
    g[0] += dw2;
    g[1] += dz2;
  }
  int r = static_cast<int>(st.steps.size()) / 2;
  if (st.sign == StairSign::Positive) {
    for (int i = 0; i < r; ++i) {
      add_entry(out.diff, 2 * i + 1, 2 * i, st.steps[static_cast<size_t>(2 * i)], 0);
      add_entry(out.diff, 2 * i + 1, 2 * i + 2, 0,
                st.steps[static_cast<size_t>(2 * i + 1)]);
    }
  } else {
    for (int i = 0; i <= r; ++i) {
      if (i > 0)
        add_entry(out.diff, 2 * i, 2 * i - 1, 0,
                  st.steps[static_cast<size_t>(2 * i - 1)]);
      if (i < r)
        add_entry(out.diff, 2 * i, 2 * i + 1, st.steps[static_cast<size_t>(2 * i)], 0);
    }
  }
  return out;
}

inline BigradedComplex staircase_to_complex(const ShiftedStaircase& st) {
  return staircase_to_complex(st.base, st.dw2, st.dz2);
}

// Alexander level of a generator: (gr_w - gr_z) / 2, computed from doubled
// gradings as (grw2 - grz2) / 4.  All complexes handled here have integral
// levels; anything else is rejected.
inline long long alexander_level(const std::array<long long, 2>& g) {
  if ((g[0] - g[1]) % 4 != 0)
    throw HalfIntegerLevel("alexander_level: generator level is not an integer");
  return (g[0] - g[1]) / 4;
}

// Sorted distinct Alexander levels present in a complex.
inline std::vector<long long> complex_levels(const BigradedComplex& c) {
  std::vector<long long> out;
  out.reserve(c.gradings.size());
  for (const auto& g : c.gradings) out.push_back(alexander_level(g));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace cusp
