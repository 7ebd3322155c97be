#include "gorcover/qmatrix.hpp"

#include <stdexcept>

namespace gorcover {

QMatrix::QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

QMatrix::QMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_columns(const std::vector<QVector>& columns, std::size_t rows) {
  QMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

QVector QMatrix::row(std::size_t r) const {
  return QVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                 data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

QVector QMatrix::column(std::size_t c) const {
  QVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

bool QMatrix::is_zero() const {
  for (const auto& x : data_) {
    if (!gorcover::is_zero(x)) return false;
  }
  return true;
}

QMatrix QMatrix::operator*(const QMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("matrix product dimension mismatch");
  QMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (gorcover::is_zero(a)) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        if (!gorcover::is_zero(other(k, j))) out(i, j) += a * other(k, j);
      }
    }
  }
  return out;
}

QVector QMatrix::operator*(const QVector& v) const {
  if (cols_ != v.size()) throw std::invalid_argument("matrix-vector dimension mismatch");
  QVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      if (!gorcover::is_zero(v[k]) && !gorcover::is_zero((*this)(i, k))) out[i] += (*this)(i, k) * v[k];
    }
  }
  return out;
}

QMatrix QMatrix::operator-(const QMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("matrix shape mismatch");
  QMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= other.data_[i];
  return out;
}

QMatrix QMatrix::vstack(const QMatrix& other) const {
  if (rows_ == 0) return other;
  if (other.rows_ == 0) return *this;
  if (cols_ != other.cols_) throw std::invalid_argument("vstack column mismatch");
  QMatrix out = *this;
  out.rows_ += other.rows_;
  out.data_.insert(out.data_.end(), other.data_.begin(), other.data_.end());
  return out;
}

std::string QMatrix::to_string() const {
  std::string out;
  for (std::size_t r = 0; r < rows_; ++r) {
    out += "[";
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c > 0) out += " ";
      out += gorcover::to_string((*this)(r, c));
    }
    out += "]\n";
  }
  return out;
}

RrefResult rref(const QMatrix& m) {
  RrefResult res;
  res.reduced = m;
  QMatrix& a = res.reduced;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t piv = row;
    while (piv < a.rows() && is_zero(a(piv, col))) ++piv;
    if (piv == a.rows()) continue;
    if (piv != row) {
      for (std::size_t c = col; c < a.cols(); ++c) std::swap(a(piv, c), a(row, c));
    }
    const Rational inv = 1 / a(row, col);
    for (std::size_t c = col; c < a.cols(); ++c) a(row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || is_zero(a(r, col))) continue;
      const Rational f = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) {
        if (!is_zero(a(row, c))) a(r, c) -= f * a(row, c);
      }
    }
    res.pivots.push_back(col);
    ++row;
  }
  res.rank = res.pivots.size();
  return res;
}

std::vector<QVector> kernel_basis(const QMatrix& m) {
  const RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<QVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    QVector v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(const QMatrix& m) { return rref(m).rank; }

}  // namespace gorcover
