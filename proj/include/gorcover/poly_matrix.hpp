#pragma once

#include "gorcover/poly.hpp"

#include <vector>

namespace gorcover {

// Rectangular matrix with polynomial entries from a single ring.
class PolyMatrix {
 public:
  PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols);

  const RingPtr& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Poly& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Poly& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Poly> row(std::size_t r) const;
  void append_row(std::vector<Poly> row);
  bool row_is_zero(std::size_t r) const;
  bool is_zero() const;

  // Entrywise substitution of a full point; gives a rational matrix.
  std::vector<std::vector<Rational>> evaluate(std::span<const Rational> point) const;

  PolyMatrix without_zero_rows() const;
  // Keeps a subset of rows in the given order.
  PolyMatrix select_rows(std::span<const std::size_t> rows) const;

  std::string to_string() const;

 private:
  RingPtr ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Poly> data_;
};

// All order-r minors that are not identically zero, column subsets and then
// row subsets in lexicographic order. Determinants are expanded column by
// column, memoizing the sub-minors of each row subset and skipping subsets
// that are structurally zero. Throws std::out_of_range unless
// 1 <= r <= min(rows, cols).
std::vector<Poly> minors(const PolyMatrix& m, std::size_t r);

// Replaces the rows by a basis of their span over the rationals (rows are
// treated as coefficient vectors). The ideal of maximal minors is unchanged,
// since it is invariant under invertible constant row operations. Rows are
// only combined within the same class (class_of[r]), so rows that are
// homogeneous of a common multidegree stay homogeneous.
PolyMatrix rational_row_basis(const PolyMatrix& m, std::span<const int> class_of);

}  // namespace gorcover
