#pragma once

#include "gorcover/apolarity.hpp"
#include "gorcover/qmatrix.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace gorcover {

class NotMPrimary : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Basis b_1..b_t of a contraction-closed space with matrices U_k such that
// x_k o b_i = sum_j U_k(j, i) b_j.
struct DualBasisWithContractions {
  RingPair rings;
  std::vector<Poly> basis;
  std::vector<QMatrix> u;

  std::size_t dim() const { return basis.size(); }
  InverseSystemBasis as_system() const { return {rings.y, basis, true}; }
};

// Computes the contraction matrices of a basis; throws std::invalid_argument
// if the span is not closed under contraction.
DualBasisWithContractions with_contractions(const RingPair& rings, std::vector<Poly> basis);

// Candidates sum_k sum_j lambda_j^k (int_k b_j)|_{y_{k+1}=...=y_n=0} solving
// the commutation conditions and, for each f in orthogonal_to, (f o L)(0) = 0.
// One polynomial per kernel vector, by decreasing free column, or increasing
// when natural_order is set.
std::vector<Poly> integration_candidates(const DualBasisWithContractions& d, std::span<const Poly> orthogonal_to,
                                         bool natural_order);

// Constant term of f o g.
Rational pairing(const Poly& f, const Poly& g);

// Basis of I^perp by the Elkadi-Mourrain iteration. Throws NotMPrimary when a
// generator is a unit or the iteration passes degree_cap (default twice the
// sum of the generator degrees) without stabilizing.
DualBasisWithContractions inverse_system(const RingPair& rings, std::span<const Poly> gens,
                                         std::optional<unsigned> degree_cap = std::nullopt);

}  // namespace gorcover
