#pragma once

#include "gorcover/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace gorcover {

using QVector = std::vector<Rational>;

// Dense row-major matrix over the rationals.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols);
  QMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static QMatrix identity(std::size_t n);
  static QMatrix from_columns(const std::vector<QVector>& columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  QVector row(std::size_t r) const;
  QVector column(std::size_t c) const;
  bool is_zero() const;

  QMatrix operator*(const QMatrix& other) const;
  QVector operator*(const QVector& v) const;
  QMatrix operator-(const QMatrix& other) const;
  friend bool operator==(const QMatrix& a, const QMatrix& b) = default;

  // Stacks the rows of other below this one.
  QMatrix vstack(const QMatrix& other) const;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RrefResult {
  std::vector<std::size_t> pivots;
  QMatrix reduced;
  std::size_t rank = 0;
};

// Exact reduced row-echelon form.
RrefResult rref(const QMatrix& m);

// Basis of the right null space, one vector per free column in increasing
// column order; each vector has a 1 at its free column and 0 at the others.
std::vector<QVector> kernel_basis(const QMatrix& m);

std::size_t rank(const QMatrix& m);

}  // namespace gorcover
