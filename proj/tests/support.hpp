#pragma once

#include "gorcover/mgc.hpp"
#include "gorcover/problem.hpp"

#include <initializer_list>
#include <string_view>
#include <vector>

namespace support {

using namespace gorcover;

inline Poly P(const RingPtr& ring, std::string_view text) { return parse_poly(ring, text); }

inline std::vector<Poly> Ps(const RingPtr& ring, std::initializer_list<std::string_view> texts) {
  std::vector<Poly> out;
  for (auto t : texts) out.push_back(parse_poly(ring, t));
  return out;
}

inline ParamIdeal ideal(const RingPtr& ring, std::initializer_list<std::string_view> texts) {
  return ParamIdeal(ring, Ps(ring, texts));
}

inline bool same(const RingPtr& ring, std::span<const Poly> a, std::span<const Poly> b) {
  return a.size() == b.size() && same_span(ring, a, b);
}

inline DualBasisWithContractions dual_of(const ProblemFile& p) { return inverse_system(p.rings, p.ideal); }

// I^perp for a module given by dual generators.
inline DualBasisWithContractions module_of(const RingPair& rings, std::initializer_list<std::string_view> gens) {
  const auto polys = Ps(rings.y, gens);
  return with_contractions(rings, module_closure(rings.y, polys).basis);
}

}  // namespace support
