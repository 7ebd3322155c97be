#pragma once

#include "gorcover/poly.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace gorcover {

enum class OrderKind { grlex, grevlex, lex, block };

// Monomial order. A block order compares the degree in the eliminated block
// first (grevlex inside the block) and breaks ties with the inner order on the
// remaining variables, so a Groebner basis for it eliminates the block.
class TermOrder {
 public:
  static TermOrder grlex() { return TermOrder(OrderKind::grlex); }
  static TermOrder grevlex() { return TermOrder(OrderKind::grevlex); }
  static TermOrder lex() { return TermOrder(OrderKind::lex); }
  static TermOrder block(std::uint64_t eliminated, OrderKind inner = OrderKind::grevlex);

  OrderKind kind() const { return kind_; }
  OrderKind inner() const { return inner_; }
  std::uint64_t eliminated() const { return block_; }

  // <0, 0, >0 as a is smaller, equal, larger than b.
  int compare(const Exponent& a, const Exponent& b) const;
  bool greater(const Exponent& a, const Exponent& b) const { return compare(a, b) > 0; }

 private:
  explicit TermOrder(OrderKind kind) : kind_(kind), inner_(kind) {}

  OrderKind kind_;
  OrderKind inner_;
  std::uint64_t block_ = 0;
};

// Ideal of a polynomial ring given by generators; no generators is the zero ideal.
struct ParamIdeal {
  RingPtr ring;
  std::vector<Poly> gens;

  ParamIdeal(RingPtr r, std::vector<Poly> g = {});
  bool is_zero_ideal() const { return gens.empty(); }
  std::string to_string() const;
};

// A reduced Groebner basis together with the order it is reduced for.
struct GroebnerBasis {
  RingPtr ring;
  TermOrder order;
  std::vector<Poly> polys;  // monic, sorted by increasing leading monomial
  std::vector<std::vector<Term>> ordered;  // terms of polys, decreasing in order

  bool is_unit() const;
};

// Reduced Groebner basis by Buchberger's algorithm with the Gebauer-Moeller
// criteria. S-pairs are selected by sugar degree, ties broken by the smallest
// lcm in the order (the normal strategy on homogeneous input).
GroebnerBasis buchberger(RingPtr ring, std::span<const Poly> gens, const TermOrder& order);
GroebnerBasis buchberger(const ParamIdeal& ideal, const TermOrder& order);

// Remainder of multivariate division by a Groebner basis.
Poly normal_form(const Poly& f, const GroebnerBasis& g);
bool ideal_member(const Poly& f, const GroebnerBasis& g);

// Leading monomial of f in the given order; f must be nonzero.
Exponent leading_exponent(const Poly& f, const TermOrder& order);

// True iff every S-polynomial of the basis reduces to zero.
bool s_pairs_reduce_to_zero(const GroebnerBasis& g);

// J intersected with the subring of polynomials free of the variables in block.
ParamIdeal eliminate(const ParamIdeal& ideal, std::uint64_t block);

// (J : f^inf), by eliminating an extra variable z from J + (1 - z f).
// Throws std::invalid_argument if f is zero.
ParamIdeal saturate(const ParamIdeal& ideal, const Poly& f);

ParamIdeal intersect(const ParamIdeal& a, const ParamIdeal& b);

// f in the radical of J, decided by 1 in J + (1 - z f).
bool radical_membership(const Poly& f, const ParamIdeal& ideal);
// Same zero set over the algebraic closure.
bool equal_up_to_radical(const ParamIdeal& a, const ParamIdeal& b);
// Every generator of a lies in the radical of b, i.e. V(b) is inside V(a).
bool radical_contains(const ParamIdeal& b, const ParamIdeal& a);

// Projective elimination of the variables in block from an ideal that is
// homogeneous in block: the ideal of the image of V(J) under the projection
// that forgets the block coordinates, taken over the points whose block
// coordinates are not all zero. Computed as the intersection over the block
// variables v of the affine elimination of J with v set to 1, which equals
// (J : v^inf) with the block eliminated.
ParamIdeal projective_eliminate(const ParamIdeal& ideal, std::uint64_t block);

// Bitmask helper for variable index sets.
std::uint64_t variable_mask(std::span<const std::size_t> vars);

}  // namespace gorcover
