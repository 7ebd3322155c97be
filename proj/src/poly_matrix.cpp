#include "gorcover/poly_matrix.hpp"

#include "gorcover/qmatrix.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace gorcover {

PolyMatrix::PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), data_(rows * cols, Poly(ring_)) {}

std::vector<Poly> PolyMatrix::row(std::size_t r) const {
  return std::vector<Poly>(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                           data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

void PolyMatrix::append_row(std::vector<Poly> row) {
  if (row.size() != cols_) throw std::invalid_argument("row length mismatch");
  for (auto& p : row) data_.push_back(std::move(p));
  ++rows_;
}

bool PolyMatrix::row_is_zero(std::size_t r) const {
  for (std::size_t c = 0; c < cols_; ++c) {
    if (!(*this)(r, c).is_zero()) return false;
  }
  return true;
}

bool PolyMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Poly& p) { return p.is_zero(); });
}

std::vector<std::vector<Rational>> PolyMatrix::evaluate(std::span<const Rational> point) const {
  std::vector<std::vector<Rational>> out(rows_, std::vector<Rational>(cols_));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out[r][c] = (*this)(r, c).evaluate(point);
  }
  return out;
}

PolyMatrix PolyMatrix::without_zero_rows() const {
  std::vector<std::size_t> keep;
  for (std::size_t r = 0; r < rows_; ++r) {
    if (!row_is_zero(r)) keep.push_back(r);
  }
  return select_rows(keep);
}

PolyMatrix PolyMatrix::select_rows(std::span<const std::size_t> rows) const {
  PolyMatrix out(ring_, 0, cols_);
  for (auto r : rows) out.append_row(row(r));
  return out;
}

std::string PolyMatrix::to_string() const {
  std::string out;
  for (std::size_t r = 0; r < rows_; ++r) {
    out += "[";
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c > 0) out += ", ";
      out += (*this)(r, c).to_string();
    }
    out += "]\n";
  }
  return out;
}

namespace {

using RowSet = std::vector<std::uint16_t>;

int permutation_sign(std::vector<std::size_t> p) {
  int sign = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    while (p[i] != i) {
      std::swap(p[i], p[p[i]]);
      sign = -sign;
    }
  }
  return sign;
}

// Maximal-size minors of m restricted to the given columns, keyed by row set.
std::map<RowSet, Poly> column_minors(const PolyMatrix& m, const std::vector<std::size_t>& cols) {
  const std::size_t r = cols.size();
  // expand the sparsest columns first
  std::vector<std::size_t> order(r);
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::size_t> nonzeros(r, 0);
  for (std::size_t j = 0; j < r; ++j) {
    for (std::size_t row = 0; row < m.rows(); ++row) {
      if (!m(row, cols[j]).is_zero()) ++nonzeros[j];
    }
  }
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return nonzeros[a] < nonzeros[b]; });
  const int sign = permutation_sign(order);

  std::map<RowSet, Poly> level;
  level.emplace(RowSet{}, Poly::constant(m.ring(), 1));
  for (std::size_t j = 0; j < r; ++j) {
    const std::size_t col = cols[order[j]];
    std::vector<std::uint16_t> col_rows;
    for (std::size_t row = 0; row < m.rows(); ++row) {
      if (!m(row, col).is_zero()) col_rows.push_back(static_cast<std::uint16_t>(row));
    }
    std::map<RowSet, Poly> next;
    for (const auto& [set, sub] : level) {
      for (auto row : col_rows) {
        if (std::binary_search(set.begin(), set.end(), row)) continue;
        RowSet grown = set;
        grown.insert(std::upper_bound(grown.begin(), grown.end(), row), row);
        if (next.count(grown) != 0) continue;
        // Laplace expansion of the grown set along column j
        Poly det(m.ring());
        for (std::size_t i = 0; i < grown.size(); ++i) {
          const Poly& entry = m(grown[i], col);
          if (entry.is_zero()) continue;
          RowSet rest = grown;
          rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
          auto it = level.find(rest);
          if (it == level.end()) continue;
          Poly term = entry * it->second;
          if ((i + j) % 2 == 1) {
            det -= term;
          } else {
            det += term;
          }
        }
        if (!det.is_zero()) next.emplace(std::move(grown), std::move(det));
      }
    }
    level = std::move(next);
  }
  if (sign < 0) {
    for (auto& [set, det] : level) det = -det;
  }
  return level;
}

}  // namespace

std::vector<Poly> minors(const PolyMatrix& m, std::size_t r) {
  if (r == 0 || r > std::min(m.rows(), m.cols())) throw std::out_of_range("minor order out of range");
  if (m.rows() > 65535) throw std::length_error("matrix too tall for minor enumeration");
  std::vector<Poly> out;
  std::vector<std::size_t> cols(r);
  std::iota(cols.begin(), cols.end(), 0);
  while (true) {
    for (auto& [set, det] : column_minors(m, cols)) out.push_back(std::move(det));
    // next column subset in lexicographic order
    std::size_t i = r;
    while (i > 0 && cols[i - 1] == m.cols() - r + (i - 1)) --i;
    if (i == 0) break;
    ++cols[i - 1];
    for (std::size_t k = i; k < r; ++k) cols[k] = cols[k - 1] + 1;
  }
  return out;
}

PolyMatrix rational_row_basis(const PolyMatrix& m, std::span<const int> class_of) {
  if (class_of.size() != m.rows()) throw std::invalid_argument("row class list size mismatch");
  std::vector<int> classes(class_of.begin(), class_of.end());
  std::sort(classes.begin(), classes.end());
  classes.erase(std::unique(classes.begin(), classes.end()), classes.end());

  PolyMatrix out(m.ring(), 0, m.cols());
  for (int cls : classes) {
    std::vector<std::size_t> rows;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (class_of[r] == cls && !m.row_is_zero(r)) rows.push_back(r);
    }
    if (rows.empty()) continue;
    // coordinates: (column, exponent) pairs in first-seen order
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> slot;
    std::vector<std::pair<std::size_t, Exponent>> slots;
    std::vector<std::vector<std::pair<std::size_t, Rational>>> sparse(rows.size());
    std::vector<std::vector<Exponent>> seen(m.cols());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t c = 0; c < m.cols(); ++c) {
        for (const auto& t : m(rows[i], c).terms()) {
          auto& list = seen[c];
          auto it = std::find(list.begin(), list.end(), t.exp);
          std::size_t local = static_cast<std::size_t>(it - list.begin());
          if (it == list.end()) list.push_back(t.exp);
          auto [pos, inserted] = slot.try_emplace({c, local}, slots.size());
          if (inserted) slots.emplace_back(c, t.exp);
          sparse[i].emplace_back(pos->second, t.coef);
        }
      }
    }
    QMatrix coeffs(rows.size(), slots.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (auto& [k, v] : sparse[i]) coeffs(i, k) = v;
    }
    const RrefResult red = rref(coeffs);
    for (std::size_t i = 0; i < red.rank; ++i) {
      std::vector<std::vector<Term>> entries(m.cols());
      for (std::size_t k = 0; k < slots.size(); ++k) {
        if (!is_zero(red.reduced(i, k))) entries[slots[k].first].push_back({slots[k].second, red.reduced(i, k)});
      }
      std::vector<Poly> row;
      row.reserve(m.cols());
      for (auto& e : entries) row.push_back(Poly::from_terms(m.ring(), std::move(e)));
      out.append_row(std::move(row));
    }
  }
  return out;
}

}  // namespace gorcover
