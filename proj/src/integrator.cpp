#include "gorcover/integrator.hpp"

#include <stdexcept>

namespace gorcover {

DualBasisWithContractions integrate_once(const DualBasisWithContractions& d) {
  for (std::size_t k = 0; k < d.u.size(); ++k) {
    for (std::size_t l = k + 1; l < d.u.size(); ++l) {
      if (!(d.u[k] * d.u[l] == d.u[l] * d.u[k])) throw std::invalid_argument("contraction matrices do not commute");
    }
  }
  std::vector<Poly> basis = d.basis;
  PolySpan span = span_of(d.rings.y, basis);
  for (const auto& lambda : integration_candidates(d, {}, false)) {
    Poly r = span.reduce(lambda);
    if (r.is_zero()) continue;
    r = r.monic();
    span.insert(r);
    basis.push_back(std::move(r));
  }
  return with_contractions(d.rings, std::move(basis));
}

AdaptedIntegral integrate_power(const DualBasisWithContractions& d, std::size_t t) {
  if (t == 0) throw std::invalid_argument("integration power must be positive");
  AdaptedIntegral out{d, {}, {}, d};
  bool stopped = false;
  for (std::size_t i = 0; i < t; ++i) {
    if (stopped) {
      out.layers.emplace_back();
      out.h.push_back(0);
      continue;
    }
    DualBasisWithContractions next = integrate_once(out.full);
    std::vector<Poly> layer(next.basis.begin() + static_cast<std::ptrdiff_t>(out.full.dim()), next.basis.end());
    out.h.push_back(layer.size());
    stopped = layer.empty();
    out.layers.push_back(std::move(layer));
    out.full = std::move(next);
  }
  return out;
}

AdaptedIntegral adapted_from_layers(const DualBasisWithContractions& base, std::vector<std::vector<Poly>> layers) {
  if (layers.empty()) throw std::invalid_argument("no layers given");
  const AdaptedIntegral ref = integrate_power(base, layers.size());
  std::vector<Poly> basis = base.basis;
  PolySpan level = span_of(base.rings.y, ref.base.basis);
  for (std::size_t i = 0; i < layers.size(); ++i) {
    for (const auto& p : ref.layers[i]) level.insert(p);
    PolySpan mine = span_of(base.rings.y, basis);
    for (const auto& p : layers[i]) {
      if (!level.contains(p)) throw std::invalid_argument("layer element outside the integral");
      if (!mine.insert(p)) throw std::invalid_argument("layer elements are dependent");
      basis.push_back(p);
    }
    if (mine.dim() != level.dim()) throw std::invalid_argument("layer does not complete the integral");
  }
  AdaptedIntegral out{base, std::move(layers), {}, with_contractions(base.rings, std::move(basis))};
  for (const auto& l : out.layers) out.h.push_back(l.size());
  return out;
}

std::vector<Poly> maximal_ideal_power(const RingPtr& x, unsigned d) {
  std::vector<Poly> out;
  for (const auto& e : monomials_of_degree(x->size(), d)) out.push_back(Poly::monomial(x, e));
  return out;
}

InverseSystemBasis integral_wrt_ideal_oracle(const RingPair& rings, const InverseSystemBasis& m,
                                             std::span<const Poly> k) {
  const std::vector<Poly> ann = annihilator(rings, m.basis);
  std::vector<Poly> products;
  for (const auto& f : k) {
    for (const auto& g : ann) products.push_back(f * g);
  }
  const DualBasisWithContractions d = inverse_system(rings, products);
  return d.as_system();
}

}  // namespace gorcover
