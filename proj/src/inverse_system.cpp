#include "gorcover/inverse_system.hpp"

#include <algorithm>
#include <numeric>

namespace gorcover {

namespace {

Poly contract_variable(std::size_t k, const Poly& p) {
  Exponent e;
  e.set(k, 1);
  return contract_monomial(e, p);
}

// Drops the terms involving any variable after k.
Poly restrict_tail(const Poly& p, std::size_t k) {
  const std::uint64_t tail = k + 1 >= 64 ? 0 : ~((std::uint64_t{1} << (k + 1)) - 1);
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    if ((t.exp.support() & tail) == 0) out.push_back(t);
  }
  return Poly::from_terms(p.ring(), std::move(out));
}

}  // namespace

DualBasisWithContractions with_contractions(const RingPair& rings, std::vector<Poly> basis) {
  const PolySpan span = span_of(rings.y, basis);
  if (span.dim() != basis.size()) throw std::invalid_argument("basis is not linearly independent");
  DualBasisWithContractions out{rings, {}, {}};
  const std::size_t t = basis.size();
  for (std::size_t k = 0; k < rings.size(); ++k) {
    QMatrix u(t, t);
    for (std::size_t i = 0; i < t; ++i) {
      auto c = span.coordinates(contract_variable(k, basis[i]));
      if (!c) throw std::invalid_argument("span is not closed under contraction");
      for (std::size_t j = 0; j < t; ++j) u(j, i) = (*c)[j];
    }
    out.u.push_back(std::move(u));
  }
  out.basis = std::move(basis);
  return out;
}

Rational pairing(const Poly& f, const Poly& g) {
  Rational s = 0;
  for (const auto& t : f.terms()) {
    const Rational c = g.coefficient(t.exp);
    if (!is_zero(c)) s += t.coef * c;
  }
  return s;
}

std::vector<Poly> integration_candidates(const DualBasisWithContractions& d, std::span<const Poly> orthogonal_to,
                                         bool natural_order) {
  const std::size_t n = d.rings.size();
  const std::size_t t = d.dim();
  std::vector<Poly> cand;
  cand.reserve(n * t);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < t; ++j) cand.push_back(restrict_tail(primitive(k, d.basis[j]), k));
  }
  std::vector<QVector> rows;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = k + 1; l < n; ++l) {
      for (std::size_t i = 0; i < t; ++i) {
        QVector row(n * t);
        bool nonzero = false;
        for (std::size_t j = 0; j < t; ++j) {
          row[k * t + j] = d.u[l](i, j);
          row[l * t + j] = -d.u[k](i, j);
          nonzero = nonzero || !is_zero(row[k * t + j]) || !is_zero(row[l * t + j]);
        }
        if (nonzero) rows.push_back(std::move(row));
      }
    }
  }
  for (const auto& f : orthogonal_to) {
    QVector row(n * t);
    bool nonzero = false;
    for (std::size_t c = 0; c < n * t; ++c) {
      row[c] = pairing(f, cand[c]);
      nonzero = nonzero || !is_zero(row[c]);
    }
    if (nonzero) rows.push_back(std::move(row));
  }
  QMatrix m(rows.size(), n * t);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < n * t; ++c) m(r, c) = rows[r][c];
  }
  std::vector<QVector> kernel = kernel_basis(m);
  if (!natural_order) std::reverse(kernel.begin(), kernel.end());
  std::vector<Poly> out;
  out.reserve(kernel.size());
  for (const auto& v : kernel) {
    Poly lambda(d.rings.y);
    for (std::size_t c = 0; c < n * t; ++c) {
      if (!is_zero(v[c])) lambda += v[c] * cand[c];
    }
    out.push_back(std::move(lambda));
  }
  return out;
}

DualBasisWithContractions inverse_system(const RingPair& rings, std::span<const Poly> gens,
                                         std::optional<unsigned> degree_cap) {
  unsigned cap = 0;
  for (const auto& f : gens) {
    if (!f.ring()->same_as(*rings.x)) throw std::invalid_argument("generator is not in the series ring");
    if (f.is_zero()) continue;
    if (!is_zero(f.coefficient(Exponent{}))) throw NotMPrimary("ideal contains a unit");
    cap += static_cast<unsigned>(f.degree());
  }
  cap = degree_cap.value_or(2 * cap);

  std::vector<Poly> basis{Poly::constant(rings.y, 1)};
  PolySpan span(rings.y);
  span.insert(basis.front());
  DualBasisWithContractions d = with_contractions(rings, basis);
  for (unsigned step = 1;; ++step) {
    if (step > cap) throw NotMPrimary("inverse system did not stabilize below degree " + std::to_string(cap));
    bool grew = false;
    for (const auto& lambda : integration_candidates(d, gens, step == 1)) {
      Poly r = span.reduce(lambda);
      if (r.is_zero()) continue;
      r = r.monic();
      span.insert(r);
      basis.push_back(std::move(r));
      grew = true;
    }
    if (!grew) break;
    d = with_contractions(rings, basis);
  }
  return d;
}

}  // namespace gorcover
