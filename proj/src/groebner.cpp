#include "gorcover/groebner.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <stdexcept>

namespace gorcover {

namespace {

unsigned masked_degree(const Exponent& e, std::uint64_t mask) {
  unsigned d = 0;
  std::uint64_t m = mask & e.support();
  while (m != 0) {
    const int i = std::countr_zero(m);
    d += e[static_cast<std::size_t>(i)];
    m &= m - 1;
  }
  return d;
}

// Reverse lexicographic tie-break: the last differing variable decides, and a
// smaller exponent there makes the monomial larger.
int revlex_masked(const Exponent& a, const Exponent& b, std::uint64_t mask) {
  std::uint64_t m = mask & (a.support() | b.support());
  while (m != 0) {
    const int i = 63 - std::countl_zero(m);
    const auto ai = a[static_cast<std::size_t>(i)];
    const auto bi = b[static_cast<std::size_t>(i)];
    if (ai != bi) return ai < bi ? 1 : -1;
    m &= ~(std::uint64_t{1} << i);
  }
  return 0;
}

int lex_masked(const Exponent& a, const Exponent& b, std::uint64_t mask) {
  std::uint64_t m = mask & (a.support() | b.support());
  while (m != 0) {
    const int i = std::countr_zero(m);
    const auto ai = a[static_cast<std::size_t>(i)];
    const auto bi = b[static_cast<std::size_t>(i)];
    if (ai != bi) return ai > bi ? 1 : -1;
    m &= m - 1;
  }
  return 0;
}

int sign_of(unsigned a, unsigned b) { return a == b ? 0 : (a > b ? 1 : -1); }

int compare_kind(OrderKind kind, const Exponent& a, const Exponent& b, std::uint64_t mask) {
  switch (kind) {
    case OrderKind::grlex: {
      const int d = sign_of(masked_degree(a, mask), masked_degree(b, mask));
      return d != 0 ? d : lex_masked(a, b, mask);
    }
    case OrderKind::grevlex: {
      const int d = sign_of(masked_degree(a, mask), masked_degree(b, mask));
      return d != 0 ? d : revlex_masked(a, b, mask);
    }
    case OrderKind::lex:
      return lex_masked(a, b, mask);
    case OrderKind::block:
      break;
  }
  throw std::logic_error("nested block order");
}

using Terms = std::vector<Term>;

Terms ordered_terms(const Poly& p, const TermOrder& order) {
  Terms t(p.terms().begin(), p.terms().end());
  if (order.kind() != OrderKind::grlex) {
    std::sort(t.begin(), t.end(), [&](const Term& a, const Term& b) { return order.greater(a.exp, b.exp); });
  }
  return t;
}

// out = p[start..] - c * x^m * g, dropping the cancelling leading terms.
// Terms of p are moved out.
void sub_multiple_into(Terms& p, std::size_t start, const Rational& c, const Exponent& m, const Terms& g,
                       const TermOrder& order, Terms& out) {
  out.clear();
  out.reserve(p.size() - start + g.size());
  std::size_t i = start + 1;
  std::size_t j = 1;
  while (i < p.size() || j < g.size()) {
    if (j >= g.size()) {
      out.push_back(std::move(p[i++]));
      continue;
    }
    const Exponent gm = g[j].exp * m;
    if (i >= p.size()) {
      out.push_back({gm, -c * g[j].coef});
      ++j;
      continue;
    }
    const int cmp = order.compare(p[i].exp, gm);
    if (cmp > 0) {
      out.push_back(std::move(p[i++]));
    } else if (cmp < 0) {
      out.push_back({gm, -c * g[j].coef});
      ++j;
    } else {
      p[i].coef -= c * g[j].coef;
      if (!is_zero(p[i].coef)) out.push_back(std::move(p[i]));
      ++i;
      ++j;
    }
  }
}

Terms sub_multiple(Terms p, std::size_t start, const Rational& c, const Exponent& m, const Terms& g,
                   const TermOrder& order) {
  Terms out;
  sub_multiple_into(p, start, c, m, g, order, out);
  return out;
}

struct Reducer {
  const Terms* terms;
  Exponent lead;
};

const Reducer* find_reducer(const std::vector<Reducer>& reducers, const Exponent& e, const Terms* skip) {
  for (const auto& r : reducers) {
    if (r.terms != skip && r.lead.divides(e)) return &r;
  }
  return nullptr;
}

// Full reduction of f by monic reducers; the remainder keeps its order.
Terms reduce_full(Terms p, const std::vector<Reducer>& reducers, const TermOrder& order,
                  const Terms* skip = nullptr) {
  Terms rem;
  Terms next;
  std::size_t pos = 0;
  while (pos < p.size()) {
    const Reducer* r = find_reducer(reducers, p[pos].exp, skip);
    if (r == nullptr) {
      rem.push_back(std::move(p[pos++]));
      continue;
    }
    const Rational c = p[pos].coef;
    const Exponent m = p[pos].exp / r->lead;
    sub_multiple_into(p, pos, c, m, *r->terms, order, next);
    std::swap(p, next);
    pos = 0;
  }
  return rem;
}

void make_monic(Terms& t) {
  if (t.empty() || is_one(t.front().coef)) return;
  const Rational inv = 1 / t.front().coef;
  for (auto& term : t) term.coef *= inv;
}

unsigned total_degree(const Terms& t) {
  unsigned d = 0;
  for (const auto& term : t) d = std::max(d, term.exp.degree());
  return d;
}

struct Entry {
  Terms terms;
  unsigned sugar;
  Exponent lead() const { return terms.front().exp; }
};

struct Pair {
  std::size_t i;
  std::size_t j;
  Exponent lcm;
  unsigned sugar;
};

class Engine {
 public:
  Engine(const TermOrder& order) : order_(order) {}

  void add(Terms h, unsigned sugar) {
    const std::size_t hi = entries_.size();
    entries_.push_back({std::move(h), sugar});
    update(hi);
  }

  void run() {
    while (!pairs_.empty()) {
      auto best = pairs_.begin();
      for (auto it = pairs_.begin() + 1; it != pairs_.end(); ++it) {
        if (it->sugar < best->sugar || (it->sugar == best->sugar && order_.compare(it->lcm, best->lcm) < 0)) {
          best = it;
        }
      }
      const Pair p = *best;
      *best = pairs_.back();
      pairs_.pop_back();
      Terms s = s_poly(p);
      if (s.empty()) continue;
      Terms h = reduce_full(std::move(s), reducers(), order_);
      if (h.empty()) continue;
      make_monic(h);
      const unsigned sugar = std::max(p.sugar, total_degree(h));
      add(std::move(h), sugar);
      if (entries_.back().terms.front().exp.degree() == 0) {
        pairs_.clear();
      }
    }
  }

  // Minimal basis, tail reduced.
  std::vector<Terms> reduced_basis() {
    std::vector<std::size_t> idx = active_;
    std::sort(idx.begin(), idx.end(), [&](auto a, auto b) {
      return order_.compare(entries_[a].lead(), entries_[b].lead()) < 0;
    });
    if (!idx.empty() && entries_[idx.front()].lead().degree() == 0) idx.resize(1);
    std::vector<Reducer> reds;
    for (auto k : idx) reds.push_back({&entries_[k].terms, entries_[k].lead()});
    std::vector<Terms> out;
    for (auto k : idx) {
      const Terms& g = entries_[k].terms;
      Terms tail(g.begin() + 1, g.end());
      Terms r = reduce_full(std::move(tail), reds, order_, &g);
      r.insert(r.begin(), g.front());
      out.push_back(std::move(r));
    }
    return out;
  }

  std::vector<Reducer> reducers() const {
    std::vector<Reducer> reds;
    reds.reserve(active_.size());
    for (auto k : active_) reds.push_back({&entries_[k].terms, entries_[k].lead()});
    return reds;
  }

 private:
  Terms s_poly(const Pair& p) const {
    const Terms& f = entries_[p.i].terms;
    const Terms& g = entries_[p.j].terms;
    const Exponent mf = p.lcm / f.front().exp;
    const Exponent mg = p.lcm / g.front().exp;
    Terms fm;
    fm.reserve(f.size());
    for (const auto& t : f) fm.push_back({t.exp * mf, t.coef});
    return sub_multiple(std::move(fm), 0, 1, mg, g, order_);
  }

  unsigned pair_sugar(std::size_t i, std::size_t j, const Exponent& lcm) const {
    const auto si = entries_[i].sugar + lcm.degree() - entries_[i].lead().degree();
    const auto sj = entries_[j].sugar + lcm.degree() - entries_[j].lead().degree();
    return std::max(si, sj);
  }

  // Gebauer-Moeller update for the new element hi.
  void update(std::size_t hi) {
    const Exponent lh = entries_[hi].lead();
    struct Cand {
      std::size_t g;
      Exponent lcm;
      bool coprime;
    };
    std::vector<Cand> c;
    for (auto g : active_) {
      const Exponent lg = entries_[g].lead();
      c.push_back({g, Exponent::lcm(lh, lg), lh.coprime(lg)});
    }
    // chain criterion among the new pairs
    std::vector<Cand> d;
    for (std::size_t k = 0; k < c.size(); ++k) {
      bool keep = c[k].coprime;
      if (!keep) {
        keep = true;
        for (std::size_t l = k + 1; l < c.size() && keep; ++l) {
          if (c[l].lcm.divides(c[k].lcm)) keep = false;
        }
        for (std::size_t l = 0; l < d.size() && keep; ++l) {
          if (d[l].lcm.divides(c[k].lcm)) keep = false;
        }
      }
      if (keep) d.push_back(c[k]);
    }
    // old pairs made redundant by h
    std::vector<Pair> kept;
    kept.reserve(pairs_.size());
    for (const auto& p : pairs_) {
      if (lh.divides(p.lcm)) {
        const Exponent l1 = Exponent::lcm(entries_[p.i].lead(), lh);
        const Exponent l2 = Exponent::lcm(entries_[p.j].lead(), lh);
        if (!(l1 == p.lcm) && !(l2 == p.lcm)) continue;
      }
      kept.push_back(p);
    }
    pairs_ = std::move(kept);
    for (const auto& cand : d) {
      if (cand.coprime) continue;
      pairs_.push_back({cand.g, hi, cand.lcm, pair_sugar(cand.g, hi, cand.lcm)});
    }
    std::vector<std::size_t> act;
    for (auto g : active_) {
      if (!lh.divides(entries_[g].lead())) act.push_back(g);
    }
    act.push_back(hi);
    active_ = std::move(act);
  }

  TermOrder order_;
  std::vector<Entry> entries_;
  std::vector<std::size_t> active_;
  std::vector<Pair> pairs_;
};

RingPtr extended_ring(const RingPtr& ring, const std::string& extra) {
  if (ring->size() + 1 > kMaxVars) throw std::length_error("too many variables");
  auto names = ring->names();
  names.push_back(extra);
  return Ring::make(std::move(names));
}

std::vector<std::size_t> identity_map(std::size_t n) {
  std::vector<std::size_t> m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = i;
  return m;
}

// Eliminates the last variable of big and moves the result back to ring.
ParamIdeal eliminate_last(const RingPtr& big, const std::vector<Poly>& gens, const RingPtr& ring) {
  const std::uint64_t z = std::uint64_t{1} << (big->size() - 1);
  ParamIdeal e = eliminate(ParamIdeal(big, gens), z);
  const auto map = identity_map(big->size());
  std::vector<Poly> out;
  for (const auto& g : e.gens) out.push_back(g.remap(ring, map));
  return ParamIdeal(ring, std::move(out));
}

}  // namespace

TermOrder TermOrder::block(std::uint64_t eliminated, OrderKind inner) {
  if (inner == OrderKind::block) throw std::invalid_argument("block order needs a plain inner order");
  TermOrder o(OrderKind::block);
  o.inner_ = inner;
  o.block_ = eliminated;
  return o;
}

int TermOrder::compare(const Exponent& a, const Exponent& b) const {
  switch (kind_) {
    case OrderKind::grlex: {
      const auto c = grlex_compare(a, b);
      return c < 0 ? -1 : (c > 0 ? 1 : 0);
    }
    case OrderKind::grevlex:
    case OrderKind::lex:
      return compare_kind(kind_, a, b, ~std::uint64_t{0});
    case OrderKind::block: {
      const int c = compare_kind(OrderKind::grevlex, a, b, block_);
      return c != 0 ? c : compare_kind(inner_, a, b, ~block_);
    }
  }
  return 0;
}

ParamIdeal::ParamIdeal(RingPtr r, std::vector<Poly> g) : ring(std::move(r)) {
  for (auto& p : g) {
    if (!p.ring()->same_as(*ring)) throw std::invalid_argument("ideal generator ring mismatch");
  }
  gens = canonical_generators(std::move(g));
}

std::string ParamIdeal::to_string() const { return gorcover::to_string(gens); }

bool GroebnerBasis::is_unit() const { return polys.size() == 1 && polys.front().is_constant(); }

GroebnerBasis buchberger(RingPtr ring, std::span<const Poly> gens, const TermOrder& order) {
  std::vector<Terms> input;
  for (const auto& g : gens) {
    if (!g.ring()->same_as(*ring)) throw std::invalid_argument("generator ring mismatch");
    if (!g.is_zero()) input.push_back(ordered_terms(g, order));
  }
  std::sort(input.begin(), input.end(), [&](const Terms& a, const Terms& b) {
    return order.compare(a.front().exp, b.front().exp) < 0;
  });
  Engine engine(order);
  for (auto& t : input) {
    Terms h = reduce_full(std::move(t), engine.reducers(), order);
    if (h.empty()) continue;
    make_monic(h);
    const unsigned sugar = total_degree(h);
    engine.add(std::move(h), sugar);
  }
  engine.run();
  GroebnerBasis out{ring, order, {}, {}};
  for (auto& t : engine.reduced_basis()) {
    out.polys.push_back(Poly::from_terms(ring, t));
    out.ordered.push_back(std::move(t));
  }
  return out;
}

GroebnerBasis buchberger(const ParamIdeal& ideal, const TermOrder& order) {
  return buchberger(ideal.ring, ideal.gens, order);
}

Poly normal_form(const Poly& f, const GroebnerBasis& g) {
  if (!f.ring()->same_as(*g.ring)) throw std::invalid_argument("normal form ring mismatch");
  std::vector<Reducer> reds;
  for (const auto& t : g.ordered) reds.push_back({&t, t.front().exp});
  Terms r = reduce_full(ordered_terms(f, g.order), reds, g.order);
  return Poly::from_terms(g.ring, std::move(r));
}

bool ideal_member(const Poly& f, const GroebnerBasis& g) { return normal_form(f, g).is_zero(); }

Exponent leading_exponent(const Poly& f, const TermOrder& order) {
  if (f.is_zero()) throw std::invalid_argument("leading monomial of zero");
  Exponent best = f.terms().front().exp;
  for (const auto& t : f.terms()) {
    if (order.greater(t.exp, best)) best = t.exp;
  }
  return best;
}

bool s_pairs_reduce_to_zero(const GroebnerBasis& g) {
  std::vector<Reducer> reds;
  for (const auto& t : g.ordered) reds.push_back({&t, t.front().exp});
  for (std::size_t i = 0; i < g.ordered.size(); ++i) {
    for (std::size_t j = i + 1; j < g.ordered.size(); ++j) {
      const Terms& a = g.ordered[i];
      const Terms& b = g.ordered[j];
      const Exponent l = Exponent::lcm(a.front().exp, b.front().exp);
      Terms am;
      for (const auto& t : a) am.push_back({t.exp * (l / a.front().exp), t.coef / a.front().coef});
      Terms bm;
      for (const auto& t : b) bm.push_back({t.exp, t.coef / b.front().coef});
      Terms s = sub_multiple(am, 0, 1, l / b.front().exp, bm, g.order);
      if (!reduce_full(std::move(s), reds, g.order).empty()) return false;
    }
  }
  return true;
}

ParamIdeal eliminate(const ParamIdeal& ideal, std::uint64_t block) {
  if (block == 0) return ideal;
  const GroebnerBasis gb = buchberger(ideal, TermOrder::block(block));
  std::vector<Poly> out;
  for (const auto& p : gb.polys) {
    bool free = true;
    for (const auto& t : p.terms()) {
      if ((t.exp.support() & block) != 0) {
        free = false;
        break;
      }
    }
    if (free) out.push_back(p);
  }
  return ParamIdeal(ideal.ring, std::move(out));
}

ParamIdeal saturate(const ParamIdeal& ideal, const Poly& f) {
  if (f.is_zero()) throw std::invalid_argument("saturation by zero");
  RingPtr big = extended_ring(ideal.ring, "_z");
  const auto map = identity_map(ideal.ring->size());
  std::vector<Poly> gens;
  for (const auto& g : ideal.gens) gens.push_back(g.remap(big, map));
  const Poly z = Poly::variable(big, ideal.ring->size());
  gens.push_back(Poly::constant(big, 1) - z * f.remap(big, map));
  return eliminate_last(big, gens, ideal.ring);
}

ParamIdeal intersect(const ParamIdeal& a, const ParamIdeal& b) {
  if (!a.ring->same_as(*b.ring)) throw std::invalid_argument("intersection ring mismatch");
  if (a.is_zero_ideal() || b.is_zero_ideal()) return ParamIdeal(a.ring);
  RingPtr big = extended_ring(a.ring, "_t");
  const auto map = identity_map(a.ring->size());
  const Poly t = Poly::variable(big, a.ring->size());
  const Poly one_minus_t = Poly::constant(big, 1) - t;
  std::vector<Poly> gens;
  for (const auto& g : a.gens) gens.push_back(t * g.remap(big, map));
  for (const auto& g : b.gens) gens.push_back(one_minus_t * g.remap(big, map));
  return eliminate_last(big, gens, a.ring);
}

bool radical_membership(const Poly& f, const ParamIdeal& ideal) {
  if (f.is_zero()) return true;
  if (ideal.is_zero_ideal()) return false;
  const GroebnerBasis gb = buchberger(ideal, TermOrder::grevlex());
  if (ideal_member(f, gb)) return true;
  RingPtr big = extended_ring(ideal.ring, "_z");
  const auto map = identity_map(ideal.ring->size());
  std::vector<Poly> gens;
  for (const auto& g : gb.polys) gens.push_back(g.remap(big, map));
  const Poly z = Poly::variable(big, ideal.ring->size());
  gens.push_back(Poly::constant(big, 1) - z * f.remap(big, map));
  return buchberger(big, gens, TermOrder::grevlex()).is_unit();
}

bool radical_contains(const ParamIdeal& b, const ParamIdeal& a) {
  for (const auto& g : a.gens) {
    if (!radical_membership(g, b)) return false;
  }
  return true;
}

bool equal_up_to_radical(const ParamIdeal& a, const ParamIdeal& b) {
  return radical_contains(a, b) && radical_contains(b, a);
}

ParamIdeal projective_eliminate(const ParamIdeal& ideal, std::uint64_t block) {
  if (block == 0) throw std::invalid_argument("projective elimination needs a nonempty block");
  std::optional<ParamIdeal> acc;
  std::optional<GroebnerBasis> acc_gb;
  std::uint64_t m = block;
  while (m != 0) {
    const auto v = static_cast<std::size_t>(std::countr_zero(m));
    m &= m - 1;
    std::vector<Poly> chart;
    for (const auto& g : ideal.gens) chart.push_back(g.substitute(v, Rational(1)));
    ParamIdeal e = eliminate(ParamIdeal(ideal.ring, std::move(chart)), block);
    const GroebnerBasis egb = buchberger(e, TermOrder::grevlex());
    if (egb.is_unit()) continue;  // no points in this chart
    if (!acc) {
      acc = ParamIdeal(ideal.ring, egb.polys);
      acc_gb = egb;
      continue;
    }
    bool e_in_acc = true;
    for (const auto& g : egb.polys) {
      if (!ideal_member(g, *acc_gb)) {
        e_in_acc = false;
        break;
      }
    }
    if (e_in_acc) {
      acc = ParamIdeal(ideal.ring, egb.polys);
      acc_gb = egb;
      continue;
    }
    bool acc_in_e = true;
    for (const auto& g : acc_gb->polys) {
      if (!ideal_member(g, egb)) {
        acc_in_e = false;
        break;
      }
    }
    if (acc_in_e) continue;
    ParamIdeal both = intersect(*acc, e);
    acc_gb = buchberger(both, TermOrder::grevlex());
    acc = ParamIdeal(ideal.ring, acc_gb->polys);
  }
  if (!acc) return ParamIdeal(ideal.ring, {Poly::constant(ideal.ring, 1)});
  return *acc;
}

std::uint64_t variable_mask(std::span<const std::size_t> vars) {
  std::uint64_t m = 0;
  for (auto v : vars) {
    if (v >= kMaxVars) throw std::out_of_range("variable index out of range");
    m |= std::uint64_t{1} << v;
  }
  return m;
}

}  // namespace gorcover
