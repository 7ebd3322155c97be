#include "gorcover/poly.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_map>

namespace gorcover {

// ---- Exponent -------------------------------------------------------------

Exponent::Exponent(std::span<const unsigned> exps) {
  if (exps.size() > kMaxVars) throw std::length_error("too many variables");
  for (std::size_t i = 0; i < exps.size(); ++i) set(i, exps[i]);
}

void Exponent::set(std::size_t i, unsigned value) {
  if (i >= kMaxVars) throw std::out_of_range("variable index out of range");
  if (value > 255) throw std::overflow_error("exponent overflow");
  degree_ = static_cast<std::uint16_t>(degree_ - e_[i] + value);
  e_[i] = static_cast<std::uint8_t>(value);
  if (value != 0) {
    support_ |= std::uint64_t{1} << i;
  } else {
    support_ &= ~(std::uint64_t{1} << i);
  }
}

Exponent Exponent::operator*(const Exponent& other) const {
  Exponent r;
  std::uint64_t m = support_ | other.support_;
  while (m != 0) {
    const auto i = static_cast<std::size_t>(std::countr_zero(m));
    m &= m - 1;
    const unsigned s = unsigned{e_[i]} + other.e_[i];
    if (s > 255) throw std::overflow_error("exponent overflow");
    r.e_[i] = static_cast<std::uint8_t>(s);
  }
  r.degree_ = static_cast<std::uint16_t>(degree_ + other.degree_);
  r.support_ = support_ | other.support_;
  return r;
}

Exponent Exponent::operator/(const Exponent& other) const {
  Exponent r;
  std::uint64_t m = support_;
  while (m != 0) {
    const auto i = static_cast<std::size_t>(std::countr_zero(m));
    m &= m - 1;
    r.e_[i] = static_cast<std::uint8_t>(e_[i] - other.e_[i]);
    if (r.e_[i] != 0) r.support_ |= std::uint64_t{1} << i;
  }
  r.degree_ = static_cast<std::uint16_t>(degree_ - other.degree_);
  return r;
}

Exponent Exponent::lcm(const Exponent& a, const Exponent& b) {
  Exponent r;
  unsigned deg = 0;
  std::uint64_t m = a.support_ | b.support_;
  while (m != 0) {
    const auto i = static_cast<std::size_t>(std::countr_zero(m));
    m &= m - 1;
    r.e_[i] = std::max(a.e_[i], b.e_[i]);
    deg += r.e_[i];
  }
  r.degree_ = static_cast<std::uint16_t>(deg);
  r.support_ = a.support_ | b.support_;
  return r;
}

std::size_t Exponent::hash() const {
  // FNV-1a over the nonzero entries.
  std::size_t h = 1469598103934665603ull;
  std::uint64_t m = support_;
  while (m != 0) {
    const auto i = static_cast<std::size_t>(std::countr_zero(m));
    m &= m - 1;
    h ^= i;
    h *= 1099511628211ull;
    h ^= e_[i];
    h *= 1099511628211ull;
  }
  return h;
}

// ---- Ring -----------------------------------------------------------------

Ring::Ring(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > kMaxVars) throw std::length_error("too many variables in ring");
}

std::shared_ptr<const Ring> Ring::make(std::vector<std::string> names) {
  return std::make_shared<const Ring>(std::move(names));
}

std::shared_ptr<const Ring> Ring::family(std::string_view prefix, std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) names.push_back(std::string(prefix) + std::to_string(i));
  return make(std::move(names));
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

// ---- Poly -----------------------------------------------------------------

namespace {

bool grlex_greater(const Term& a, const Term& b) { return grlex_compare(a.exp, b.exp) > 0; }

}  // namespace

Poly::Poly(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw std::invalid_argument("null ring");
}

Poly Poly::constant(RingPtr ring, const Rational& c) {
  Poly p(std::move(ring));
  if (!gorcover::is_zero(c)) p.terms_.push_back({Exponent{}, c});
  return p;
}

Poly Poly::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->size()) throw std::out_of_range("variable index out of range");
  Exponent e;
  e.set(index, 1);
  return monomial(std::move(ring), e, 1);
}

Poly Poly::monomial(RingPtr ring, const Exponent& exp, const Rational& c) {
  Poly p(std::move(ring));
  if (!gorcover::is_zero(c)) p.terms_.push_back({exp, c});
  return p;
}

Poly Poly::from_terms(RingPtr ring, std::vector<Term> terms) {
  Poly p(std::move(ring));
  std::sort(terms.begin(), terms.end(), grlex_greater);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().exp == t.exp) {
      p.terms_.back().coef += t.coef;
    } else {
      if (!p.terms_.empty() && gorcover::is_zero(p.terms_.back().coef)) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && gorcover::is_zero(p.terms_.back().coef)) p.terms_.pop_back();
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exp.degree() == 0);
}

int Poly::degree() const {
  // grlex puts the highest total degree first
  return terms_.empty() ? -1 : static_cast<int>(terms_.front().exp.degree());
}

int Poly::degree_in(std::uint64_t mask) const {
  int best = -1;
  for (const auto& t : terms_) {
    int d = 0;
    for (std::size_t i = 0; i < nvars(); ++i) {
      if ((mask >> i) & 1u) d += static_cast<int>(t.exp[i]);
    }
    best = std::max(best, d);
  }
  return best;
}

Rational Poly::coefficient(const Exponent& exp) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exp, [](const Term& t, const Exponent& e) {
    return grlex_compare(t.exp, e) > 0;
  });
  if (it != terms_.end() && it->exp == exp) return it->coef;
  return 0;
}

void Poly::check_ring(const Poly& other) const {
  if (!ring_->same_as(*other.ring_)) {
    throw std::invalid_argument("polynomial ring mismatch");
  }
}

Poly Poly::combine(const Poly& other, bool subtract) const {
  check_ring(other);
  Poly r(ring_);
  r.terms_.reserve(terms_.size() + other.terms_.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < terms_.size() || j < other.terms_.size()) {
    if (j == other.terms_.size()) {
      r.terms_.push_back(terms_[i++]);
      continue;
    }
    if (i == terms_.size()) {
      Term t = other.terms_[j++];
      if (subtract) t.coef = -t.coef;
      r.terms_.push_back(std::move(t));
      continue;
    }
    const auto c = grlex_compare(terms_[i].exp, other.terms_[j].exp);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      Term t = other.terms_[j++];
      if (subtract) t.coef = -t.coef;
      r.terms_.push_back(std::move(t));
    } else {
      Rational s = subtract ? Rational(terms_[i].coef - other.terms_[j].coef)
                            : Rational(terms_[i].coef + other.terms_[j].coef);
      if (!gorcover::is_zero(s)) r.terms_.push_back({terms_[i].exp, std::move(s)});
      ++i;
      ++j;
    }
  }
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

Poly& Poly::operator+=(const Poly& other) {
  *this = combine(other, false);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  *this = combine(other, true);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_ring(b);
  if (a.is_zero() || b.is_zero()) return Poly(a.ring_);
  if (b.terms_.size() == 1) return a.times_term(b.terms_[0].exp, b.terms_[0].coef);
  if (a.terms_.size() == 1) return b.times_term(a.terms_[0].exp, a.terms_[0].coef);
  std::unordered_map<Exponent, Rational, ExponentHash> acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  Rational prod;
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      prod = s.coef * t.coef;
      auto [it, inserted] = acc.try_emplace(s.exp * t.exp, prod);
      if (!inserted) it->second += prod;
    }
  }
  Poly r(a.ring_);
  r.terms_.reserve(acc.size());
  for (auto& [e, c] : acc) {
    if (!is_zero(c)) r.terms_.push_back({e, std::move(c)});
  }
  std::sort(r.terms_.begin(), r.terms_.end(), grlex_greater);
  return r;
}

Poly& Poly::operator*=(const Poly& other) {
  *this = *this * other;
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (gorcover::is_zero(c)) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coef *= c;
  }
  return *this;
}

Poly Poly::times_term(const Exponent& exp, const Rational& c) const {
  Poly r(ring_);
  if (gorcover::is_zero(c)) return r;
  r.terms_.reserve(terms_.size());
  // multiplying by a monomial preserves grlex order
  for (const auto& t : terms_) r.terms_.push_back({t.exp * exp, t.coef * c});
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly result = constant(ring_, 1);
  Poly base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

Poly Poly::substitute(std::size_t var, const Rational& value) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    const unsigned k = t.exp[var];
    if (k == 0) {
      out.push_back(t);
      continue;
    }
    Exponent e = t.exp;
    e.set(var, 0);
    Rational c = t.coef;
    for (unsigned i = 0; i < k; ++i) c *= value;
    out.push_back({e, std::move(c)});
  }
  return from_terms(ring_, std::move(out));
}

Poly Poly::substitute(std::size_t var, const Poly& value) const {
  check_ring(value);
  Poly result(ring_);
  std::vector<Poly> powers{constant(ring_, 1)};
  for (const auto& t : terms_) {
    const unsigned k = t.exp[var];
    while (powers.size() <= k) powers.push_back(powers.back() * value);
    Exponent e = t.exp;
    e.set(var, 0);
    result += powers[k].times_term(e, t.coef);
  }
  return result;
}

Rational Poly::evaluate(std::span<const Rational> point) const {
  if (point.size() < nvars()) throw std::invalid_argument("evaluation point too short");
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational m = t.coef;
    for (std::size_t i = 0; i < nvars() && !gorcover::is_zero(m); ++i) {
      for (unsigned k = 0; k < t.exp[i]; ++k) m *= point[i];
    }
    sum += m;
  }
  return sum;
}

Poly Poly::monic() const {
  if (is_zero() || is_one(terms_.front().coef)) return *this;
  Rational inv = 1 / terms_.front().coef;
  return *this * inv;
}

std::optional<long> Poly::homogeneous_degree(std::span<const int> weights) const {
  std::optional<long> deg;
  for (const auto& t : terms_) {
    long d = 0;
    for (std::size_t i = 0; i < nvars(); ++i) d += static_cast<long>(weights[i]) * t.exp[i];
    if (deg && *deg != d) return std::nullopt;
    deg = d;
  }
  return deg ? deg : std::optional<long>(0);
}

bool Poly::is_homogeneous() const {
  for (const auto& t : terms_) {
    if (t.exp.degree() != terms_.front().exp.degree()) return false;
  }
  return true;
}

Poly Poly::remap(RingPtr target, std::span<const std::size_t> map) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Exponent e;
    for (std::size_t i = 0; i < nvars(); ++i) {
      if (t.exp[i] == 0) continue;
      if (map[i] >= target->size()) throw std::out_of_range("remap target out of range");
      e.set(map[i], e[map[i]] + t.exp[i]);
    }
    out.push_back({e, t.coef});
  }
  return from_terms(std::move(target), std::move(out));
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coef;
    if (first) {
      if (sgn(c) < 0) {
        out += "-";
        c = -c;
      }
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
      if (sgn(c) < 0) c = -c;
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < nvars(); ++i) {
      const unsigned k = t.exp[i];
      if (k == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += ring_->name(i);
      if (k > 1) mono += "^" + std::to_string(k);
    }
    if (mono.empty()) {
      out += gorcover::to_string(c);
    } else if (is_one(c)) {
      out += mono;
    } else {
      out += gorcover::to_string(c) + "*" + mono;
    }
  }
  return out;
}

bool operator==(const Poly& a, const Poly& b) {
  if (!a.ring_->same_as(*b.ring_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].exp == b.terms_[i].exp) || a.terms_[i].coef != b.terms_[i].coef) return false;
  }
  return true;
}

bool canonical_less(const Poly& a, const Poly& b) {
  const auto ta = a.terms();
  const auto tb = b.terms();
  for (std::size_t i = 0; i < std::min(ta.size(), tb.size()); ++i) {
    const auto c = grlex_compare(ta[i].exp, tb[i].exp);
    if (c != 0) return c < 0;
    if (ta[i].coef != tb[i].coef) return ta[i].coef < tb[i].coef;
  }
  return ta.size() < tb.size();
}

std::vector<Poly> canonical_generators(std::vector<Poly> gens) {
  std::vector<Poly> out;
  out.reserve(gens.size());
  for (auto& g : gens) {
    if (!g.is_zero()) out.push_back(g.monic());
  }
  std::sort(out.begin(), out.end(), canonical_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string to_string(std::span<const Poly> polys) {
  std::string out = "(";
  for (std::size_t i = 0; i < polys.size(); ++i) {
    if (i > 0) out += ", ";
    out += polys[i].to_string();
  }
  return out + ")";
}

std::vector<Exponent> monomials_of_degree(std::size_t n, unsigned d) {
  std::vector<Exponent> out;
  if (n == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  Exponent e;
  // depth-first over the exponent of x1, then x2, ..., largest first
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i + 1 == n) {
      e.set(i, left);
      out.push_back(e);
      e.set(i, 0);
      return;
    }
    for (unsigned k = left + 1; k-- > 0;) {
      e.set(i, k);
      self(self, i + 1, left - k);
    }
    e.set(i, 0);
  };
  rec(rec, 0, d);
  return out;
}

std::vector<Exponent> monomials_in_degrees(std::size_t n, unsigned lo, unsigned hi) {
  std::vector<Exponent> out;
  for (unsigned d = lo; d <= hi; ++d) {
    auto part = monomials_of_degree(n, d);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace gorcover
