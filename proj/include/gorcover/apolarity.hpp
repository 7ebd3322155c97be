#pragma once

#include "gorcover/poly.hpp"
#include "gorcover/poly_span.hpp"

#include <optional>
#include <vector>

namespace gorcover {

// Series ring R in x-variables and its dual S in y-variables, same size.
struct RingPair {
  RingPtr x;
  RingPtr y;

  // y-names are the x-names with a leading 'x' replaced by 'y' (else "y_" + name).
  static RingPair from_series(RingPtr x);
  static RingPair standard(std::size_t n);  // x1..xn, y1..yn
  std::size_t size() const { return x->size(); }
};

// f o G, with x^a o y^b = y^(b-a) when b >= a and 0 otherwise.
Poly contract(const Poly& f, const Poly& g);
Poly contract_monomial(const Exponent& a, const Poly& g);

// y_i * f, so that x_i o result = f and result vanishes at y_i = 0.
Poly primitive(std::size_t i, const Poly& f);

struct InverseSystemBasis {
  RingPtr ring;
  std::vector<Poly> basis;
  bool contraction_closed = false;

  std::size_t dim() const { return basis.size(); }
};

// Basis of <F> = span{x^a o F}; throws std::invalid_argument for F = 0.
InverseSystemBasis principal_system(const Poly& f);

// Smallest contraction-closed space containing the given polynomials.
InverseSystemBasis module_closure(const RingPtr& dual, std::span<const Poly> polys);

// Minimal generators of {f in R : f o g in target for every g in polys}. Every
// such ideal contains m^(D+1), D the largest degree of polys, so the linear
// algebra runs over polynomials of degree <= D+1.
std::vector<Poly> colon_generators(const RingPair& rings, std::span<const Poly> polys, const PolySpan& target);

// Ann_R(F).
std::vector<Poly> annihilator(const RingPair& rings, const Poly& f);
// Ann_R of a span of dual polynomials.
std::vector<Poly> annihilator(const RingPair& rings, std::span<const Poly> polys);

// K_F = (I^perp : <F>); throws std::invalid_argument unless I^perp is in <F>.
std::vector<Poly> colon_KF(const RingPair& rings, const InverseSystemBasis& iperp, const Poly& f);

struct CoverCertificate {
  Poly f;
  std::size_t colength = 0;
  std::vector<Poly> k_f;
  std::size_t length_a = 0;
  std::size_t length_g = 0;
};

struct CoverCheck {
  std::optional<CoverCertificate> certificate;
  std::optional<Poly> witness;  // first basis element of I^perp outside <F>

  bool is_cover() const { return certificate.has_value(); }
};

CoverCheck check_cover(const RingPair& rings, const InverseSystemBasis& iperp, const Poly& f);

struct AlgebraProfile {
  std::size_t length = 0;
  std::vector<std::size_t> hilbert;
  std::size_t socle_degree = 0;
  std::size_t type = 0;
  std::size_t embedding_dim = 0;
};

AlgebraProfile algebra_profile(const InverseSystemBasis& iperp);

}  // namespace gorcover
