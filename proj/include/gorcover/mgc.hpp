#pragma once

#include "gorcover/groebner.hpp"
#include "gorcover/integrator.hpp"
#include "gorcover/poly_matrix.hpp"

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace gorcover {

class GorensteinInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// MGC = V+(keep) \ V+(remove) in the projective space over the coordinates of
// ring (a1.., b1..).
struct VarietyPresentation {
  RingPtr ring;
  ParamIdeal keep;
  ParamIdeal remove;

  std::size_t projective_dim() const { return ring->size() - 1; }
  // Every coordinate of keep vanishes and some generator of remove does not.
  bool contains(std::span<const Rational> point) const;
};

struct TeterResult {
  AdaptedIntegral integral;
  RingPtr params;          // a1..ah
  Poly generic_f;          // sum a_j F_j, in the ring of params and y-variables
  PolyMatrix matrix;       // rows x^alpha o F over b_1..b_t, zero rows dropped
  ParamIdeal a;            // order-t minors
  VarietyPresentation presentation;

  bool colength_one() const { return !a.is_zero_ideal(); }
};

// Algorithm 2 on an adapted integral with at least one layer. Throws
// GorensteinInput when I^perp is cyclic.
TeterResult teter_variety(const AdaptedIntegral& ai);

struct Mgc2Matrices {
  AdaptedIntegral integral;
  RingPtr params;       // a1..a_h1, b1..b_h2, v1..vn
  RingPtr cover_ring;   // a1..a_h1, b1..b_h2
  std::size_t t = 0;
  std::size_t h1 = 0;
  std::size_t h2 = 0;
  Poly generic_h;       // in the ring of cover coordinates and y-variables
  PolyMatrix b_h;       // n x h1
  PolyMatrix c_hv;      // n x (h1 + 1)
  PolyMatrix u_hv;      // rows over b_1..b_t, zero rows dropped

  std::uint64_t v_block() const;
};

// Algorithm 3, steps 1-5; the integral needs two nonempty layers.
Mgc2Matrices mgc2_matrices(const AdaptedIntegral& ai);

struct Mgc2Ideals {
  ParamIdeal c;       // 2-minors of C_{H,v}
  ParamIdeal a;       // t-minors of U_{H,v}
  ParamIdeal b;       // projective elimination of c, in the cover ring
  ParamIdeal d_hat;   // projective elimination of a + c, in the cover ring
  VarietyPresentation presentation;
};

Mgc2Ideals mgc2_ideals(const Mgc2Matrices& m);

// 2-minors of B_H moved to the cover ring.
ParamIdeal b_minors(const Mgc2Matrices& m);

// Moves a v-free ideal of the full parameter ring to the cover ring.
ParamIdeal to_cover_ring(const Mgc2Matrices& m, const ParamIdeal& ideal);

// Explicit dual polynomial sum coords_i * layer_i over all layers.
Poly cover_from_point(const AdaptedIntegral& ai, std::span<const Rational> coords);

struct SamplePoint {
  std::vector<Rational> coords;
  bool inside = false;      // in V+(keep) \ V+(remove)
  bool certified = false;   // oracle: cover of the expected colength
  std::size_t colength = 0; // 0 when not a cover
  std::string witness;      // rejection witness or empty
};

struct SampleReport {
  std::vector<SamplePoint> points;
  std::size_t inside = 0;
  std::size_t inside_certified = 0;
  std::size_t outside = 0;
  std::size_t outside_rejected = 0;
  std::size_t attempts = 0;

  bool all_agree() const { return inside_certified == inside && outside_rejected == outside; }
};

// Draws up to `trials` points of V+(keep) \ V+(remove) and of V+(keep + remove)
// by random small-integer substitution and solving equations that become
// linear or quadratic in one variable, then asks the oracle whether the cover
// built from each point has the expected colength (number of layers).
SampleReport sample_and_certify(const VarietyPresentation& p, const AdaptedIntegral& ai, std::size_t trials,
                                std::uint64_t seed);

// Random rational point of V(gens) (not all zero), or empty after max_tries.
std::vector<Rational> sample_zero(const RingPtr& ring, std::span<const Poly> gens, std::mt19937_64& rng,
                                  std::size_t max_tries = 200);

}  // namespace gorcover
