#pragma once

#include "gorcover/poly.hpp"
#include "gorcover/qmatrix.hpp"

#include <optional>
#include <unordered_map>
#include <vector>

namespace gorcover {

// Finite-dimensional subspace of a polynomial ring, kept in echelon form with
// respect to grlex leading monomials. Remembers how each echelon row is made
// from the independent elements inserted so far, so coordinates with respect to
// that basis are available.
class PolySpan {
 public:
  explicit PolySpan(RingPtr ring);

  // Adds p; returns false (and changes nothing) if p is already in the span.
  bool insert(const Poly& p);

  std::size_t dim() const { return basis_.size(); }
  const std::vector<Poly>& basis() const { return basis_; }
  const RingPtr& ring() const { return ring_; }

  // Remainder of p after full reduction by the echelon rows. Zero iff p lies in
  // the span. The remainder has no term on a pivot monomial.
  Poly reduce(const Poly& p) const;
  bool contains(const Poly& p) const { return reduce(p).is_zero(); }
  bool contains_all(std::span<const Poly> ps) const;

  // Coordinates of p with respect to basis(); nullopt if p is outside the span.
  std::optional<QVector> coordinates(const Poly& p) const;

  // Grlex leading monomials of the echelon rows.
  std::vector<Exponent> pivots() const;

 private:
  struct Row {
    Poly poly;     // leading coefficient 1
    QVector combo; // poly = sum combo[i] * basis_[i]
  };

  // Reduces p in place and accumulates the combination of echelon rows used.
  Poly reduce_tracking(const Poly& p, QVector* combo) const;

  RingPtr ring_;
  std::vector<Poly> basis_;
  std::vector<Row> rows_;
  std::unordered_map<Exponent, std::size_t, ExponentHash> pivot_;
};

PolySpan span_of(RingPtr ring, std::span<const Poly> polys);
bool same_span(RingPtr ring, std::span<const Poly> a, std::span<const Poly> b);

}  // namespace gorcover
