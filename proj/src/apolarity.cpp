#include "gorcover/apolarity.hpp"

#include "gorcover/qmatrix.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace gorcover {

RingPair RingPair::from_series(RingPtr x) {
  std::vector<std::string> names;
  for (const auto& name : x->names()) {
    if (!name.empty() && name.front() == 'x') {
      names.push_back("y" + name.substr(1));
    } else {
      names.push_back("y_" + name);
    }
  }
  return {std::move(x), Ring::make(std::move(names))};
}

RingPair RingPair::standard(std::size_t n) { return {Ring::family("x", n), Ring::family("y", n)}; }

Poly contract_monomial(const Exponent& a, const Poly& g) {
  std::vector<Term> out;
  for (const auto& t : g.terms()) {
    if (a.divides(t.exp)) out.push_back({t.exp / a, t.coef});
  }
  return Poly::from_terms(g.ring(), std::move(out));
}

Poly contract(const Poly& f, const Poly& g) {
  if (f.nvars() != g.nvars()) throw std::invalid_argument("contraction needs equal variable counts");
  std::vector<Term> out;
  for (const auto& s : f.terms()) {
    for (const auto& t : g.terms()) {
      if (s.exp.divides(t.exp)) out.push_back({t.exp / s.exp, s.coef * t.coef});
    }
  }
  return Poly::from_terms(g.ring(), std::move(out));
}

Poly primitive(std::size_t i, const Poly& f) { return Poly::variable(f.ring(), i) * f; }

InverseSystemBasis principal_system(const Poly& f) {
  if (f.is_zero()) throw std::invalid_argument("principal system of zero");
  PolySpan span(f.ring());
  for (const auto& a : monomials_in_degrees(f.nvars(), 0, static_cast<unsigned>(f.degree()))) {
    Poly c = contract_monomial(a, f);
    if (!c.is_zero()) span.insert(c);
  }
  return {f.ring(), span.basis(), true};
}

InverseSystemBasis module_closure(const RingPtr& dual, std::span<const Poly> polys) {
  PolySpan span(dual);
  std::deque<Poly> queue(polys.begin(), polys.end());
  while (!queue.empty()) {
    Poly p = std::move(queue.front());
    queue.pop_front();
    if (p.is_zero() || !span.insert(p)) continue;
    for (std::size_t k = 0; k < dual->size(); ++k) {
      Exponent e;
      e.set(k, 1);
      queue.push_back(contract_monomial(e, p));
    }
  }
  return {dual, span.basis(), true};
}

namespace {

// Drops the terms of degree above d.
Poly truncate(const Poly& p, int d) {
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    if (static_cast<int>(t.exp.degree()) <= d) out.push_back(t);
  }
  return Poly::from_terms(p.ring(), std::move(out));
}

}  // namespace

std::vector<Poly> colon_generators(const RingPair& rings, std::span<const Poly> polys, const PolySpan& target) {
  int top = -1;
  for (const auto& g : polys) top = std::max(top, g.degree());
  if (top < 0) return {Poly::constant(rings.x, 1)};
  const int cap = top + 1;
  const std::size_t n = rings.size();

  // columns: monomials of degree <= cap, highest degree first
  std::vector<Exponent> cols = monomials_in_degrees(n, 0, static_cast<unsigned>(cap));
  std::reverse(cols.begin(), cols.end());
  for (std::size_t lo = 0; lo < cols.size();) {
    std::size_t hi = lo;
    while (hi < cols.size() && cols[hi].degree() == cols[lo].degree()) ++hi;
    std::reverse(cols.begin() + static_cast<std::ptrdiff_t>(lo), cols.begin() + static_cast<std::ptrdiff_t>(hi));
    lo = hi;
  }

  // rows: (poly index, monomial) slots of the reduced images
  std::map<std::pair<std::size_t, std::vector<std::uint8_t>>, std::size_t> slot;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> images(cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    for (std::size_t g = 0; g < polys.size(); ++g) {
      const Poly r = target.reduce(contract_monomial(cols[c], polys[g]));
      for (const auto& t : r.terms()) {
        std::vector<std::uint8_t> key(t.exp.data(), t.exp.data() + n);
        auto [it, inserted] = slot.try_emplace({g, std::move(key)}, slot.size());
        images[c].emplace_back(it->second, t.coef);
      }
    }
  }
  QMatrix m(slot.size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    for (const auto& [r, v] : images[c]) m(r, c) = v;
  }

  std::vector<Poly> kernel;
  for (const auto& v : kernel_basis(m)) {
    std::vector<Term> terms;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (!is_zero(v[c])) terms.push_back({cols[c], v[c]});
    }
    kernel.push_back(Poly::from_terms(rings.x, std::move(terms)));
  }
  if (kernel.empty()) return {};

  // m times the kernel, truncated: these are not minimal generators
  PolySpan span(rings.x);
  for (const auto& v : kernel) {
    for (std::size_t k = 0; k < n; ++k) span.insert(truncate(Poly::variable(rings.x, k) * v, cap));
  }
  // lowest order first; the free monomial of a kernel vector is its lowest term
  std::vector<std::pair<unsigned, std::size_t>> order;
  for (std::size_t i = 0; i < kernel.size(); ++i) {
    order.emplace_back(kernel[i].terms().back().exp.degree(), i);
  }
  std::sort(order.begin(), order.end());
  std::vector<Poly> gens;
  for (const auto& [deg, idx] : order) {
    const Poly& v = kernel[idx];
    if (span.insert(v)) gens.push_back(v);
  }
  return gens;
}

std::vector<Poly> annihilator(const RingPair& rings, const Poly& f) {
  if (f.is_zero()) throw std::invalid_argument("annihilator of zero");
  const Poly polys[] = {f};
  return colon_generators(rings, polys, PolySpan(rings.y));
}

std::vector<Poly> annihilator(const RingPair& rings, std::span<const Poly> polys) {
  return colon_generators(rings, polys, PolySpan(rings.y));
}

std::vector<Poly> colon_KF(const RingPair& rings, const InverseSystemBasis& iperp, const Poly& f) {
  const InverseSystemBasis sys = principal_system(f);
  const PolySpan principal = span_of(rings.y, sys.basis);
  if (!principal.contains_all(iperp.basis)) throw std::invalid_argument("inverse system is not contained in <F>");
  const Poly polys[] = {f};
  return colon_generators(rings, polys, span_of(rings.y, iperp.basis));
}

CoverCheck check_cover(const RingPair& rings, const InverseSystemBasis& iperp, const Poly& f) {
  if (f.is_zero()) throw std::invalid_argument("cover candidate is zero");
  const InverseSystemBasis sys = principal_system(f);
  const PolySpan principal = span_of(rings.y, sys.basis);
  CoverCheck out;
  for (const auto& b : iperp.basis) {
    if (!principal.contains(b)) {
      out.witness = b;
      return out;
    }
  }
  const PolySpan target = span_of(rings.y, iperp.basis);
  const Poly polys[] = {f};
  CoverCertificate cert{f, sys.dim() - target.dim(), colon_generators(rings, polys, target), target.dim(), sys.dim()};
  out.certificate = std::move(cert);
  return out;
}

AlgebraProfile algebra_profile(const InverseSystemBasis& iperp) {
  AlgebraProfile p;
  const PolySpan span = span_of(iperp.ring, iperp.basis);
  p.length = span.dim();
  for (const auto& e : span.pivots()) {
    if (p.hilbert.size() <= e.degree()) p.hilbert.resize(e.degree() + 1, 0);
    ++p.hilbert[e.degree()];
  }
  p.socle_degree = p.hilbert.empty() ? 0 : p.hilbert.size() - 1;
  p.embedding_dim = p.hilbert.size() > 1 ? p.hilbert[1] : 0;
  PolySpan lower(iperp.ring);
  for (const auto& b : iperp.basis) {
    for (std::size_t k = 0; k < iperp.ring->size(); ++k) {
      Exponent e;
      e.set(k, 1);
      lower.insert(contract_monomial(e, b));
    }
  }
  p.type = p.length - lower.dim();
  return p;
}

}  // namespace gorcover
