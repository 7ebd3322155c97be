#include "gorcover/poly_span.hpp"

#include <map>
#include <stdexcept>

namespace gorcover {

namespace {

struct GrlexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const { return grlex_compare(a, b) > 0; }
};

}  // namespace

PolySpan::PolySpan(RingPtr ring) : ring_(std::move(ring)) {}

Poly PolySpan::reduce_tracking(const Poly& p, QVector* combo) const {
  if (!p.ring()->same_as(*ring_)) throw std::invalid_argument("span ring mismatch");
  std::map<Exponent, Rational, GrlexGreater> acc;
  for (const auto& t : p.terms()) acc.emplace(t.exp, t.coef);
  std::vector<Term> remainder;
  while (!acc.empty()) {
    auto it = acc.begin();
    auto piv = pivot_.find(it->first);
    if (piv == pivot_.end()) {
      remainder.push_back({it->first, it->second});
      acc.erase(it);
      continue;
    }
    const Rational c = it->second;
    const Row& row = rows_[piv->second];
    for (const auto& t : row.poly.terms()) {
      auto [pos, inserted] = acc.try_emplace(t.exp, -c * t.coef);
      if (!inserted) {
        pos->second -= c * t.coef;
        if (is_zero(pos->second)) acc.erase(pos);
      }
    }
    if (combo != nullptr) {
      for (std::size_t i = 0; i < row.combo.size(); ++i) {
        if (!is_zero(row.combo[i])) (*combo)[i] += c * row.combo[i];
      }
    }
  }
  return Poly::from_terms(ring_, std::move(remainder));
}

Poly PolySpan::reduce(const Poly& p) const { return reduce_tracking(p, nullptr); }

bool PolySpan::contains_all(std::span<const Poly> ps) const {
  for (const auto& p : ps) {
    if (!contains(p)) return false;
  }
  return true;
}

bool PolySpan::insert(const Poly& p) {
  QVector combo(basis_.size() + 1);
  Poly r = reduce_tracking(p, &combo);
  if (r.is_zero()) return false;
  // r = p - sum combo_i basis_i
  for (auto& c : combo) c = -c;
  combo.back() = 1;
  for (auto& row : rows_) row.combo.resize(basis_.size() + 1);
  const Rational inv = 1 / r.leading().coef;
  r *= inv;
  for (auto& c : combo) c *= inv;
  pivot_.emplace(r.leading().exp, rows_.size());
  rows_.push_back({std::move(r), std::move(combo)});
  basis_.push_back(p);
  return true;
}

std::optional<QVector> PolySpan::coordinates(const Poly& p) const {
  QVector combo(basis_.size());
  Poly r = reduce_tracking(p, &combo);
  if (!r.is_zero()) return std::nullopt;
  return combo;
}

std::vector<Exponent> PolySpan::pivots() const {
  std::vector<Exponent> out;
  out.reserve(rows_.size());
  for (const auto& row : rows_) out.push_back(row.poly.leading().exp);
  return out;
}

PolySpan span_of(RingPtr ring, std::span<const Poly> polys) {
  PolySpan s(std::move(ring));
  for (const auto& p : polys) s.insert(p);
  return s;
}

bool same_span(RingPtr ring, std::span<const Poly> a, std::span<const Poly> b) {
  PolySpan sa = span_of(ring, a);
  PolySpan sb = span_of(ring, b);
  return sa.dim() == sb.dim() && sa.contains_all(b);
}

}  // namespace gorcover
