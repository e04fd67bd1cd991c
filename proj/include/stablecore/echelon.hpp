#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>

#include "stablecore/rational.hpp"

namespace stablecore {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RationalMatrix = DenseMatrix<Rational>;

/// In-place reduced row echelon form over an exact field. Pivots are taken as
/// the first nonzero entry scanning columns left to right. Returns the pivot
/// columns, one per nonzero row, in row order.
template <typename Derived>
std::vector<Eigen::Index> reduced_row_echelon(Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index sel = -1;
    for (Eigen::Index r = row; r < m.rows(); ++r) {
      if (m(r, col) != 0) {
        sel = r;
        break;
      }
    }
    if (sel < 0) continue;
    if (sel != row) m.row(sel).swap(m.row(row));
    const Scalar inv = Scalar(1) / m(row, col);
    for (Eigen::Index c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      const Scalar f = m(r, col);
      for (Eigen::Index c = col; c < m.cols(); ++c) {
        if (m(row, c) != 0) m(r, c) -= f * m(row, c);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <typename Derived>
Eigen::Index exact_rank(const Eigen::MatrixBase<Derived>& m) {
  DenseMatrix<typename Derived::Scalar> work = m;
  return static_cast<Eigen::Index>(reduced_row_echelon(work).size());
}

/// Basis of { x : m x = 0 }, one column per free variable.
template <typename Derived>
DenseMatrix<typename Derived::Scalar> null_space(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  DenseMatrix<Scalar> work = m;
  const auto pivots = reduced_row_echelon(work);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (auto p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;

  std::vector<Eigen::Index> free_cols;
  for (Eigen::Index c = 0; c < m.cols(); ++c)
    if (!is_pivot[static_cast<std::size_t>(c)]) free_cols.push_back(c);

  DenseMatrix<Scalar> basis = DenseMatrix<Scalar>::Zero(m.cols(), static_cast<Eigen::Index>(free_cols.size()));
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const auto f = free_cols[k];
    basis(f, static_cast<Eigen::Index>(k)) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      basis(pivots[r], static_cast<Eigen::Index>(k)) = -work(static_cast<Eigen::Index>(r), f);
    }
  }
  return basis;
}

/// Sparse vector: (column, value) pairs with strictly increasing columns and
/// no zero values.
template <typename Scalar>
using SparseRow = std::vector<std::pair<std::size_t, Scalar>>;

/// y += a * x on sparse rows.
template <typename Scalar>
void sparse_axpy(SparseRow<Scalar>& y, const Scalar& a, const SparseRow<Scalar>& x) {
  if (a == 0 || x.empty()) return;
  SparseRow<Scalar> out;
  out.reserve(y.size() + x.size());
  auto iy = y.begin();
  auto ix = x.begin();
  while (iy != y.end() || ix != x.end()) {
    if (ix == x.end() || (iy != y.end() && iy->first < ix->first)) {
      out.push_back(std::move(*iy++));
    } else if (iy == y.end() || ix->first < iy->first) {
      out.emplace_back(ix->first, Scalar(a * ix->second));
      ++ix;
    } else {
      Scalar v = iy->second + a * ix->second;
      if (v != 0) out.emplace_back(iy->first, std::move(v));
      ++iy;
      ++ix;
    }
  }
  y = std::move(out);
}

/// Incremental row echelon basis of a subspace of Scalar^n, stored sparsely.
///
/// Each stored row is normalized so its pivot (smallest column) is 1. When
/// tracking is on, every stored row also remembers how it was formed from the
/// inserted source rows, which lets reduce() return an explicit combination.
template <typename Scalar>
class SparseEchelon {
 public:
  using Row = SparseRow<Scalar>;

  SparseEchelon(std::size_t cols, bool track) : cols_(cols), track_(track) {}
  SparseEchelon(const SparseEchelon& other) : cols_(other.cols_), track_(other.track_), rows_(other.rows_) { index(); }
  SparseEchelon(SparseEchelon&&) noexcept = default;
  SparseEchelon& operator=(const SparseEchelon& other) {
    if (this != &other) {
      cols_ = other.cols_;
      track_ = other.track_;
      rows_ = other.rows_;
      index();
    }
    return *this;
  }
  SparseEchelon& operator=(SparseEchelon&&) noexcept = default;

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }
  bool tracking() const { return track_; }

  /// Adds a source row; returns true if it enlarged the span.
  bool insert(Row v, std::size_t source) {
    if (rank() == cols_) return false;
    Row combo;
    if (track_) combo.emplace_back(source, Scalar(1));
    reduce_in_place(v, track_ ? &combo : nullptr, true);
    if (v.empty()) return false;
    const Scalar inv = Scalar(1) / v.front().second;
    for (auto& e : v) e.second *= inv;
    for (auto& e : combo) e.second *= inv;
    const std::size_t pivot = v.front().first;
    auto [it, inserted] = rows_.emplace(pivot, Entry{std::move(v), std::move(combo)});
    by_col_[pivot] = &it->second;
    return inserted;
  }

  /// Normal form of v: the unique vector v - (span element) vanishing on every
  /// pivot column. If `combo` is non-null (tracking required), it receives
  /// coefficients c_s with v - normal_form = sum_s c_s * source_s.
  Row reduce(Row v, Row* combo = nullptr) const {
    if (combo) combo->clear();
    if (!combo && rank() == cols_) return {};
    reduce_in_place(v, combo, false);
    return v;
  }

  bool in_span(const Row& v) const { return reduce(v).empty(); }

  bool is_pivot(std::size_t col) const { return col < cols_ && by_col_[col] != nullptr; }

  std::vector<std::size_t> pivots() const {
    std::vector<std::size_t> out;
    for (const auto& [p, e] : rows_) out.push_back(p);
    return out;
  }

  std::vector<Row> basis() const {
    std::vector<Row> out;
    for (const auto& [p, e] : rows_) out.push_back(e.row);
    return out;
  }

 private:
  struct Entry {
    Row row;
    Row combo;
  };

  void index() {
    by_col_.assign(cols_, nullptr);
    for (const auto& [p, e] : rows_) by_col_[p] = &e;
  }

  // With `inserting`, combo tracks the representation of the reduced vector in
  // sources (v_reduced = combo . sources); otherwise it accumulates the
  // coefficients that were subtracted. Work happens in dense accumulators so
  // each elimination step touches only the pivot row's entries.
  void reduce_in_place(Row& v, Row* combo, bool inserting) const {
    if (v.empty() || rows_.empty()) return;
    std::vector<Scalar> acc(cols_);
    for (auto& [c, x] : v) acc[c] = std::move(x);
    std::vector<Scalar> cacc;
    auto add_combo = [&](const Scalar& a, const Row& r) {
      for (const auto& [c, x] : r) {
        if (c >= cacc.size()) cacc.resize(c + 1);
        cacc[c] += a * x;
      }
    };
    if (combo) add_combo(Scalar(1), *combo);

    Scalar a;
    for (std::size_t c = v.front().first; c < cols_; ++c) {
      if (acc[c] == 0) continue;
      const Entry* e = by_col_[c];
      if (!e) continue;
      a = acc[c];
      for (const auto& [cc, y] : e->row) acc[cc] -= a * y;
      if (combo) add_combo(inserting ? Scalar(-a) : a, e->combo);
    }

    v.clear();
    for (std::size_t c = 0; c < cols_; ++c)
      if (acc[c] != 0) v.emplace_back(c, std::move(acc[c]));
    if (combo) {
      combo->clear();
      for (std::size_t c = 0; c < cacc.size(); ++c)
        if (cacc[c] != 0) combo->emplace_back(c, std::move(cacc[c]));
    }
  }

  std::size_t cols_;
  bool track_;
  std::map<std::size_t, Entry> rows_;
  std::vector<const Entry*> by_col_ = std::vector<const Entry*>(cols_, nullptr);
};

}  // namespace stablecore
