#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace cusp {

// Dense bit vector used for all F2 linear algebra.
struct BitVec {
  int n = 0;
  std::vector<std::uint64_t> w;

  explicit BitVec(int n_ = 0) : n(n_), w(static_cast<size_t>((n_ + 63) / 64), 0) {}
  bool get(int i) const { return (w[static_cast<size_t>(i >> 6)] >> (i & 63)) & 1; }
  void set(int i) { w[static_cast<size_t>(i >> 6)] |= std::uint64_t(1) << (i & 63); }
  void flip(int i) { w[static_cast<size_t>(i >> 6)] ^= std::uint64_t(1) << (i & 63); }
  void operator^=(const BitVec& o) {
    for (size_t k = 0; k < w.size(); ++k) w[k] ^= o.w[k];
  }
  bool any() const {
    for (auto x : w)
      if (x) return true;
    return false;
  }
  int first_set() const {
    for (size_t k = 0; k < w.size(); ++k)
      if (w[k]) return static_cast<int>(64 * k) + std::countr_zero(w[k]);
    return -1;
  }
  bool parity_and(const BitVec& o) const {
    std::uint64_t acc = 0;
    for (size_t k = 0; k < w.size(); ++k) acc ^= w[k] & o.w[k];
    return std::popcount(acc) & 1;
  }
  friend bool operator==(const BitVec&, const BitVec&) = default;
};

// Rank of a binary matrix given as rows, by plain Gaussian elimination.
inline int f2_rank(std::vector<BitVec> rows) {
  int rank = 0;
  size_t next = 0;
  int width = rows.empty() ? 0 : rows[0].n;
  for (int col = 0; col < width && next < rows.size(); ++col) {
    size_t pivot = next;
    while (pivot < rows.size() && !rows[pivot].get(col)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[next], rows[pivot]);
    for (size_t r = 0; r < rows.size(); ++r)
      if (r != next && rows[r].get(col)) rows[r] ^= rows[next];
    ++next;
    ++rank;
  }
  return rank;
}

// A finitely generated free complex over F2[U], with doubled gr_w gradings
// (U has doubled degree -4, the differential has doubled degree -2).  Every
// entry is a monomial U^c whose exponent is forced by the gradings:
//   c = (gr(to) - gr(from) + 2) / 4.
struct GradedUComplex {
  std::vector<long long> gradings;                // doubled gr_w per generator
  std::map<std::pair<int, int>, long long> diff;  // (from, to) -> exponent c

  int size() const { return static_cast<int>(gradings.size()); }
};

inline void validate_u_complex(const GradedUComplex& c) {
  int n = c.size();
  for (const auto& [key, e] : c.diff) {
    auto [from, to] = key;
    if (from < 0 || from >= n || to < 0 || to >= n)
      throw Error("validate_u_complex: entry index out of range");
    long long num = c.gradings[static_cast<size_t>(to)] -
                    c.gradings[static_cast<size_t>(from)] + 2;
    if (num != 4 * e || e < 0)
      throw Error("validate_u_complex: entry exponent inconsistent with gradings");
  }
}

namespace detail {

// Homogeneous column reduction over F2[U].
//
// The matrix represents a grading-preserving-up-to-shift map between free
// graded modules: entry (i, j) is the monomial U^{(row_grading[i] -
// col_vec_grading[j]) / 4} when the bit is set (col_vec_grading[j] is the
// grading of column j viewed as an element of the target).  Column
// operations add U^delta times one column to another with delta >= 0, which
// on bits is a plain XOR; the pivot is always a minimal-degree entry
// (leftmost column, then lowest-graded row, as tie-breaks), so all
// multipliers stay polynomial.
//
// Outputs: which columns reduce to zero (their accumulated Q-columns form a
// basis of the kernel), the frozen pivot columns (a spanning set of the
// image), and optionally Q^{-1} for re-expressing vectors in the Q basis.
struct ColumnReduce {
  int rows = 0, cols = 0;
  std::vector<int> row_order;              // row indices sorted by (grading, index)
  std::vector<int> row_rank;               // inverse permutation
  const std::vector<long long>* row_grading = nullptr;
  std::vector<long long> col_vec_grading;  // follows column swaps (none used: labels fixed per column)
  std::vector<BitVec> a;                   // matrix columns, bits in permuted row order
  std::vector<BitVec> q;                   // tracked basis: column j = current col j in source coords
  std::vector<long long> q_grading;        // grading of q column as a source element
  std::vector<BitVec> qinv_rows;           // optional: rows of Q^{-1} (bits over source coords)
  std::vector<char> is_pivot_col;
  std::vector<int> pivot_row_of_col;       // permuted-order row of each pivot column, else -1

  ColumnReduce(int rows_, const std::vector<long long>& row_grading_,
               const std::vector<std::vector<int>>& col_entries,
               const std::vector<long long>& col_src_grading, long long map_drop,
               bool want_qinv)
      : rows(rows_), cols(static_cast<int>(col_entries.size())), row_grading(&row_grading_) {
    row_order.resize(static_cast<size_t>(rows));
    std::iota(row_order.begin(), row_order.end(), 0);
    std::stable_sort(row_order.begin(), row_order.end(), [&](int x, int y) {
      return row_grading_[static_cast<size_t>(x)] < row_grading_[static_cast<size_t>(y)];
    });
    row_rank.resize(static_cast<size_t>(rows));
    for (int k = 0; k < rows; ++k) row_rank[static_cast<size_t>(row_order[static_cast<size_t>(k)])] = k;

    col_vec_grading.resize(static_cast<size_t>(cols));
    q_grading = col_src_grading;
    a.assign(static_cast<size_t>(cols), BitVec(rows));
    q.assign(static_cast<size_t>(cols), BitVec(cols));
    for (int j = 0; j < cols; ++j) {
      col_vec_grading[static_cast<size_t>(j)] = col_src_grading[static_cast<size_t>(j)] - map_drop;
      q[static_cast<size_t>(j)].set(j);
      for (int i : col_entries[static_cast<size_t>(j)]) {
        long long num = row_grading_[static_cast<size_t>(i)] -
                        col_vec_grading[static_cast<size_t>(j)];
        if (num % 4 != 0 || num < 0)
          throw Error("graded reduction: inhomogeneous or negative-degree entry");
        a[static_cast<size_t>(j)].set(row_rank[static_cast<size_t>(i)]);
      }
    }
    if (want_qinv) {
      qinv_rows.assign(static_cast<size_t>(cols), BitVec(cols));
      for (int j = 0; j < cols; ++j) qinv_rows[static_cast<size_t>(j)].set(j);
    }
    is_pivot_col.assign(static_cast<size_t>(cols), 0);
    pivot_row_of_col.assign(static_cast<size_t>(cols), -1);
    run();
  }

  long long degree_at(int perm_row, int col) const {
    return ((*row_grading)[static_cast<size_t>(row_order[static_cast<size_t>(perm_row)])] -
            col_vec_grading[static_cast<size_t>(col)]) /
           4;
  }

  void run() {
    while (true) {
      int best_col = -1, best_row = -1;
      long long best_deg = 0;
      for (int j = 0; j < cols; ++j) {
        if (is_pivot_col[static_cast<size_t>(j)]) continue;
        int r = a[static_cast<size_t>(j)].first_set();
        if (r < 0) continue;
        long long d = degree_at(r, j);
        if (best_col < 0 || d < best_deg) {
          best_col = j;
          best_row = r;
          best_deg = d;
        }
      }
      if (best_col < 0) return;
      is_pivot_col[static_cast<size_t>(best_col)] = 1;
      pivot_row_of_col[static_cast<size_t>(best_col)] = best_row;
      for (int j = 0; j < cols; ++j) {
        if (is_pivot_col[static_cast<size_t>(j)] ||
            !a[static_cast<size_t>(j)].get(best_row))
          continue;
        a[static_cast<size_t>(j)] ^= a[static_cast<size_t>(best_col)];
        q[static_cast<size_t>(j)] ^= q[static_cast<size_t>(best_col)];
        if (!qinv_rows.empty())
          qinv_rows[static_cast<size_t>(best_col)] ^= qinv_rows[static_cast<size_t>(j)];
      }
    }
  }

  // Kernel basis in source coordinates, with element gradings.
  std::vector<int> kernel_cols() const {
    std::vector<int> out;
    for (int j = 0; j < cols; ++j)
      if (!is_pivot_col[static_cast<size_t>(j)]) out.push_back(j);
    return out;
  }

  // A column of the reduced matrix, bits restored to original row order.
  BitVec column_in_row_coords(int j) const {
    BitVec v(rows);
    const BitVec& c = a[static_cast<size_t>(j)];
    for (int k = 0; k < rows; ++k)
      if (c.get(k)) v.set(row_order[static_cast<size_t>(k)]);
    return v;
  }
};

// Homogeneous row reduction over F2[U]: quotient of a free graded module
// (rows) by the span of homogeneous columns.  Row operations add U^delta
// times the pivot row to lower-degree... strictly: to rows whose entry in the
// pivot column has degree >= the pivot degree, which the global
// minimal-degree pivot rule guarantees.  Pivot rows with entry degree 0 are
// killed, degree > 0 become U-torsion, untouched rows stay free.
struct RowReduce {
  int rows = 0, cols = 0;
  const std::vector<long long>* row_grading = nullptr;
  std::vector<int> col_order;   // columns sorted by vec grading descending
  std::vector<long long> col_vec_grading;
  std::vector<BitVec> r;        // matrix rows, bits in permuted column order
  std::vector<BitVec> b_rows;   // forward basis change (rows over row space)
  std::vector<BitVec> binv_cols;  // inverse basis change (columns over row space)
  std::vector<char> row_done;
  std::vector<long long> pivot_degree;  // per row; -1 if free
  bool track = false;

  RowReduce(const std::vector<long long>& row_grading_,
            const std::vector<std::vector<int>>& col_entries,
            const std::vector<long long>& col_vec_grading_, bool track_basis)
      : rows(static_cast<int>(row_grading_.size())),
        cols(static_cast<int>(col_entries.size())),
        row_grading(&row_grading_),
        col_vec_grading(col_vec_grading_),
        track(track_basis) {
    col_order.resize(static_cast<size_t>(cols));
    std::iota(col_order.begin(), col_order.end(), 0);
    std::stable_sort(col_order.begin(), col_order.end(), [&](int x, int y) {
      return col_vec_grading_[static_cast<size_t>(x)] > col_vec_grading_[static_cast<size_t>(y)];
    });
    std::vector<int> col_rank(static_cast<size_t>(cols));
    for (int k = 0; k < cols; ++k) col_rank[static_cast<size_t>(col_order[static_cast<size_t>(k)])] = k;
    r.assign(static_cast<size_t>(rows), BitVec(cols));
    for (int j = 0; j < cols; ++j)
      for (int i : col_entries[static_cast<size_t>(j)]) {
        long long num = row_grading_[static_cast<size_t>(i)] -
                        col_vec_grading_[static_cast<size_t>(j)];
        if (num % 4 != 0 || num < 0)
          throw Error("graded reduction: inhomogeneous or negative-degree entry");
        r[static_cast<size_t>(i)].set(col_rank[static_cast<size_t>(j)]);
      }
    if (track) {
      b_rows.assign(static_cast<size_t>(rows), BitVec(rows));
      binv_cols.assign(static_cast<size_t>(rows), BitVec(rows));
      for (int i = 0; i < rows; ++i) {
        b_rows[static_cast<size_t>(i)].set(i);
        binv_cols[static_cast<size_t>(i)].set(i);
      }
    }
    row_done.assign(static_cast<size_t>(rows), 0);
    pivot_degree.assign(static_cast<size_t>(rows), -1);
    run();
  }

  long long degree_at(int row, int perm_col) const {
    return ((*row_grading)[static_cast<size_t>(row)] -
            col_vec_grading[static_cast<size_t>(col_order[static_cast<size_t>(perm_col)])]) /
           4;
  }

  void run() {
    while (true) {
      int best_row = -1, best_col = -1;
      long long best_deg = 0;
      for (int i = 0; i < rows; ++i) {
        if (row_done[static_cast<size_t>(i)]) continue;
        int c = r[static_cast<size_t>(i)].first_set();
        if (c < 0) continue;
        long long d = degree_at(i, c);
        if (best_row < 0 || d < best_deg || (d == best_deg && c < best_col)) {
          best_row = i;
          best_col = c;
          best_deg = d;
        }
      }
      if (best_row < 0) return;
      row_done[static_cast<size_t>(best_row)] = 1;
      pivot_degree[static_cast<size_t>(best_row)] = best_deg;
      for (int i = 0; i < rows; ++i) {
        if (row_done[static_cast<size_t>(i)] || !r[static_cast<size_t>(i)].get(best_col))
          continue;
        r[static_cast<size_t>(i)] ^= r[static_cast<size_t>(best_row)];
        if (track) {
          b_rows[static_cast<size_t>(i)] ^= b_rows[static_cast<size_t>(best_row)];
          binv_cols[static_cast<size_t>(best_row)] ^= binv_cols[static_cast<size_t>(i)];
        }
      }
    }
  }

  std::vector<int> free_rows() const {
    std::vector<int> out;
    for (int i = 0; i < rows; ++i)
      if (pivot_degree[static_cast<size_t>(i)] < 0) out.push_back(i);
    return out;
  }
};

}  // namespace detail

// Homology of a GradedUComplex as a graded F2[U]-module, with cycle
// representatives for the free part and a projection map used to induce
// endomorphisms on the free part.
class UHomology {
 public:
  explicit UHomology(const GradedUComplex& c) : n_(c.size()), gradings_(c.gradings) {
    validate_u_complex(c);
    std::vector<std::vector<int>> d_cols(static_cast<size_t>(n_));
    for (const auto& [key, e] : c.diff) {
      (void)e;
      d_cols[static_cast<size_t>(key.first)].push_back(key.second);
    }
    detail::ColumnReduce stage1(n_, c.gradings, d_cols, c.gradings, 2,
                                /*want_qinv=*/true);
    // Kernel basis.
    kernel_cols_ = stage1.kernel_cols();
    int kdim = static_cast<int>(kernel_cols_.size());
    kernel_grading_.reserve(static_cast<size_t>(kdim));
    kernel_vec_.reserve(static_cast<size_t>(kdim));
    std::vector<int> pos_in_kernel(static_cast<size_t>(n_), -1);
    for (int k = 0; k < kdim; ++k) {
      int j = kernel_cols_[static_cast<size_t>(k)];
      pos_in_kernel[static_cast<size_t>(j)] = k;
      kernel_grading_.push_back(stage1.q_grading[static_cast<size_t>(j)]);
      // Q-column bits over source coords, already in original order.
      kernel_vec_.push_back(stage1.q[static_cast<size_t>(j)]);
    }
    qinv_rows_ = std::move(stage1.qinv_rows);

    // Image columns expressed in kernel coordinates.
    std::vector<std::vector<int>> m_cols;
    std::vector<long long> m_grading;
    for (int j = 0; j < n_; ++j) {
      if (!stage1.is_pivot_col[static_cast<size_t>(j)]) continue;
      BitVec v = stage1.column_in_row_coords(j);
      std::vector<int> coords;
      for (int t = 0; t < n_; ++t) {
        if (!qinv_rows_[static_cast<size_t>(t)].parity_and(v)) continue;
        int k = pos_in_kernel[static_cast<size_t>(t)];
        if (k < 0)
          throw Error("UHomology: image vector is not a cycle (d^2 != 0?)");
        coords.push_back(k);
      }
      m_cols.push_back(std::move(coords));
      m_grading.push_back(stage1.col_vec_grading[static_cast<size_t>(j)]);
    }

    // Quotient structure.
    stage3_ = std::make_unique<detail::RowReduce>(kernel_grading_, m_cols, m_grading,
                                                  /*track_basis=*/true);
    free_rows_ = stage3_->free_rows();
    for (int r : free_rows_) {
      free_grading.push_back(kernel_grading_[static_cast<size_t>(r)]);
      BitVec vec(n_);
      for (int j = 0; j < kdim; ++j)
        if (stage3_->binv_cols[static_cast<size_t>(r)].get(j))
          vec ^= kernel_vec_[static_cast<size_t>(j)];
      free_vec.push_back(std::move(vec));
    }
    for (int r = 0; r < kdim; ++r) {
      long long d = stage3_->pivot_degree[static_cast<size_t>(r)];
      if (d > 0) torsion.push_back({kernel_grading_[static_cast<size_t>(r)], d});
    }
    std::sort(torsion.begin(), torsion.end());
  }

  int ambient_size() const { return n_; }
  long long free_rank() const { return static_cast<long long>(free_grading.size()); }

  // Coordinates of a homogeneous cycle in the free-part basis (torsion
  // components are discarded).  Throws if the vector is not a cycle.
  BitVec free_coords(const BitVec& cycle) const {
    int kdim = static_cast<int>(kernel_cols_.size());
    BitVec u(kdim);
    std::vector<int> pos_in_kernel(static_cast<size_t>(n_), -1);
    for (int k = 0; k < kdim; ++k)
      pos_in_kernel[static_cast<size_t>(kernel_cols_[static_cast<size_t>(k)])] = k;
    for (int t = 0; t < n_; ++t) {
      if (!qinv_rows_[static_cast<size_t>(t)].parity_and(cycle)) continue;
      int k = pos_in_kernel[static_cast<size_t>(t)];
      if (k < 0) throw Error("free_coords: vector is not a cycle");
      u.set(k);
    }
    BitVec out(static_cast<int>(free_rows_.size()));
    for (size_t idx = 0; idx < free_rows_.size(); ++idx)
      if (stage3_->b_rows[static_cast<size_t>(free_rows_[idx])].parity_and(u))
        out.set(static_cast<int>(idx));
    return out;
  }

  std::vector<long long> free_grading;          // doubled gr_w per free summand
  std::vector<BitVec> free_vec;                 // cycle representatives (over generators)
  std::vector<std::pair<long long, long long>> torsion;  // (grading, U-degree)

 private:
  int n_ = 0;
  std::vector<long long> gradings_;
  std::vector<int> kernel_cols_;
  std::vector<long long> kernel_grading_;
  std::vector<BitVec> kernel_vec_;
  std::vector<BitVec> qinv_rows_;
  std::vector<int> free_rows_;
  std::unique_ptr<detail::RowReduce> stage3_;
};

// Maximum doubled gr_w among free-summand generators of the homology.
// V_s is -d/4 for the doubled value returned here.
inline long long d_invariant(const GradedUComplex& c) {
  UHomology h(c);
  if (h.free_grading.empty())
    throw NoTower("d_invariant: homology has no free summand");
  return *std::max_element(h.free_grading.begin(), h.free_grading.end());
}

}  // namespace cusp
