#pragma once

#include "gorcover/inverse_system.hpp"

#include <vector>

namespace gorcover {

// Basis of int_{m^t} M adapted to the filtration by int_{m^i} M: the base
// basis of M followed by layers 1..t.
struct AdaptedIntegral {
  DualBasisWithContractions base;
  std::vector<std::vector<Poly>> layers;
  std::vector<std::size_t> h;
  DualBasisWithContractions full;

  std::size_t t() const { return layers.size(); }
};

// Basis of int_m M extending the basis of M, with its contraction matrices.
// Throws std::invalid_argument if the input matrices do not commute.
DualBasisWithContractions integrate_once(const DualBasisWithContractions& d);

// t >= 1 successive integrations. Stops early when a layer is empty; the
// remaining layers are then empty too.
AdaptedIntegral integrate_power(const DualBasisWithContractions& d, std::size_t t);

// Adapted integral from given layer representatives, checked against
// integrate_power; throws std::invalid_argument if some layer does not
// complete the previous level to int_{m^i} M.
AdaptedIntegral adapted_from_layers(const DualBasisWithContractions& base, std::vector<std::vector<Poly>> layers);

// int_K M computed as (K * Ann M)^perp, for cross-checks only.
InverseSystemBasis integral_wrt_ideal_oracle(const RingPair& rings, const InverseSystemBasis& m,
                                             std::span<const Poly> k);

// m-ideal generators x_1..x_n, and the power m^d as monomials.
std::vector<Poly> maximal_ideal_power(const RingPtr& x, unsigned d);

}  // namespace gorcover
