#include "gorcover/mgc.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <optional>
#include <set>
#include <unordered_map>

namespace gorcover {

namespace {

std::vector<std::string> family_names(const std::string& prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

using PolyVec = std::vector<Poly>;

PolyVec apply(const QMatrix& u, const PolyVec& v, const RingPtr& ring) {
  PolyVec out(u.rows(), Poly(ring));
  for (std::size_t r = 0; r < u.rows(); ++r) {
    for (std::size_t c = 0; c < u.cols(); ++c) {
      if (!is_zero(u(r, c)) && !v[c].is_zero()) out[r] += u(r, c) * v[c];
    }
  }
  return out;
}

// Coordinates of x^alpha o H for every alpha of degree 1..top, by memoized
// application of the contraction matrices.
class ContractionTable {
 public:
  ContractionTable(const DualBasisWithContractions& full, PolyVec h, RingPtr ring)
      : full_(full), ring_(std::move(ring)) {
    table_.emplace(Exponent{}, std::move(h));
  }

  const PolyVec& at(const Exponent& alpha) {
    auto it = table_.find(alpha);
    if (it != table_.end()) return it->second;
    std::size_t k = 0;
    while (alpha[k] == 0) ++k;
    Exponent e;
    e.set(k, 1);
    PolyVec prev = at(alpha / e);
    PolyVec next = apply(full_.u[k], prev, ring_);
    return table_.emplace(alpha, std::move(next)).first->second;
  }

 private:
  const DualBasisWithContractions& full_;
  RingPtr ring_;
  std::unordered_map<Exponent, PolyVec, ExponentHash> table_;
};

// Sum of coordinate variables times layer elements, in a ring holding both.
Poly generic_cover(const AdaptedIntegral& ai, std::size_t layers, const RingPtr& coords) {
  std::vector<std::string> names = coords->names();
  const auto& y = ai.base.rings.y->names();
  names.insert(names.end(), y.begin(), y.end());
  RingPtr both = Ring::make(std::move(names));
  std::vector<std::size_t> ymap(y.size());
  std::iota(ymap.begin(), ymap.end(), coords->size());
  Poly out(both);
  std::size_t idx = 0;
  for (std::size_t l = 0; l < layers; ++l) {
    for (const auto& f : ai.layers[l]) out += Poly::variable(both, idx++) * f.remap(both, ymap);
  }
  return out;
}

ParamIdeal ideal_of_minors(const RingPtr& ring, const PolyMatrix& m, std::size_t r) {
  if (r == 0 || m.rows() < r || m.cols() < r) return ParamIdeal(ring);
  return ParamIdeal(ring, minors(m, r));
}

}  // namespace

bool VarietyPresentation::contains(std::span<const Rational> point) const {
  for (const auto& g : keep.gens) {
    if (!is_zero(g.evaluate(point))) return false;
  }
  for (const auto& g : remove.gens) {
    if (!is_zero(g.evaluate(point))) return true;
  }
  return false;
}

TeterResult teter_variety(const AdaptedIntegral& ai) {
  const AlgebraProfile prof = algebra_profile(ai.base.as_system());
  if (prof.type <= 1) throw GorensteinInput("gcl = 0");
  if (ai.t() < 1 || ai.h[0] == 0) throw std::invalid_argument("first integral layer is empty");
  const std::size_t t = ai.base.dim();
  const std::size_t h = ai.h[0];
  const std::size_t n = ai.base.rings.size();
  RingPtr params = Ring::make(family_names("a", h));

  PolyVec f(ai.full.dim(), Poly(params));
  for (std::size_t j = 0; j < h; ++j) f[t + j] = Poly::variable(params, j);
  ContractionTable table(ai.full, std::move(f), params);

  PolyMatrix rows(params, 0, t);
  for (const auto& alpha : monomials_in_degrees(n, 1, static_cast<unsigned>(prof.socle_degree + 1))) {
    const PolyVec& v = table.at(alpha);
    rows.append_row(PolyVec(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(t)));
  }
  PolyMatrix mat = rows.without_zero_rows();
  const std::vector<int> classes(mat.rows(), 0);
  const PolyMatrix reduced = rational_row_basis(mat, classes);
  ParamIdeal a = ideal_of_minors(params, reduced, t);

  TeterResult out{ai,
                  params,
                  generic_cover(ai, 1, params),
                  std::move(mat),
                  a,
                  VarietyPresentation{params, ParamIdeal(params), a}};
  return out;
}

std::uint64_t Mgc2Matrices::v_block() const {
  std::uint64_t m = 0;
  for (std::size_t i = h1 + h2; i < params->size(); ++i) m |= std::uint64_t{1} << i;
  return m;
}

Mgc2Matrices mgc2_matrices(const AdaptedIntegral& ai) {
  if (ai.t() < 2 || ai.h[0] == 0 || ai.h[1] == 0) throw std::invalid_argument("two nonempty integral layers needed");
  const std::size_t n = ai.base.rings.size();
  if (n < 2) throw std::invalid_argument("colength-2 covers need at least two variables");
  const AlgebraProfile prof = algebra_profile(ai.base.as_system());
  if (prof.type <= 1) throw GorensteinInput("gcl = 0");

  const std::size_t h1 = ai.h[0];
  const std::size_t h2 = ai.h[1];
  std::vector<std::string> cover_names = family_names("a", h1);
  const auto bn = family_names("b", h2);
  cover_names.insert(cover_names.end(), bn.begin(), bn.end());
  std::vector<std::string> names = cover_names;
  const auto vn = family_names("v", n);
  names.insert(names.end(), vn.begin(), vn.end());
  if (names.size() > kMaxVars) throw std::length_error("too many parameters");
  RingPtr params = Ring::make(names);
  Mgc2Matrices m{ai, params, Ring::make(cover_names), ai.base.dim(), h1, h2, Poly(ai.base.rings.y),
                 PolyMatrix(params, 0, 0), PolyMatrix(params, 0, 0), PolyMatrix(params, 0, 0)};
  m.generic_h = generic_cover(ai, 2, m.cover_ring);

  const std::size_t t = m.t;
  PolyVec h(ai.full.dim(), Poly(m.params));
  for (std::size_t j = 0; j < m.h1 + m.h2; ++j) h[t + j] = Poly::variable(m.params, j);
  ContractionTable table(ai.full, std::move(h), m.params);

  auto v = [&](std::size_t i) { return Poly::variable(m.params, m.h1 + m.h2 + i); };
  std::vector<PolyVec> uh(n);
  for (std::size_t i = 0; i < n; ++i) {
    Exponent e;
    e.set(i, 1);
    uh[i] = table.at(e);
  }
  m.b_h = PolyMatrix(m.params, n, m.h1);
  m.c_hv = PolyMatrix(m.params, n, m.h1 + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m.h1; ++j) {
      m.b_h(i, j) = uh[i][t + j];
      m.c_hv(i, j) = uh[i][t + j];
    }
    m.c_hv(i, m.h1) = v(i);
  }

  PolyMatrix rows(m.params, 0, t);
  std::vector<int> classes;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = k + 1; l < n; ++l) {
      PolyVec row(t, Poly(m.params));
      for (std::size_t j = 0; j < t; ++j) row[j] = v(l) * uh[k][j] - v(k) * uh[l][j];
      rows.append_row(std::move(row));
      classes.push_back(0);
    }
  }
  for (const auto& theta : monomials_in_degrees(n, 2, static_cast<unsigned>(prof.socle_degree + 2))) {
    const PolyVec& vec = table.at(theta);
    rows.append_row(PolyVec(vec.begin(), vec.begin() + static_cast<std::ptrdiff_t>(t)));
    classes.push_back(1);
  }
  std::vector<std::size_t> keep;
  std::vector<int> kept_classes;
  for (std::size_t r = 0; r < rows.rows(); ++r) {
    if (!rows.row_is_zero(r)) {
      keep.push_back(r);
      kept_classes.push_back(classes[r]);
    }
  }
  m.u_hv = rational_row_basis(rows.select_rows(keep), kept_classes);
  return m;
}

ParamIdeal to_cover_ring(const Mgc2Matrices& m, const ParamIdeal& ideal) {
  std::vector<std::size_t> map(m.params->size());
  std::iota(map.begin(), map.end(), 0);
  std::vector<Poly> gens;
  for (const auto& g : ideal.gens) {
    if (g.degree_in(m.v_block()) > 0) throw std::invalid_argument("ideal still involves v");
    gens.push_back(g.remap(m.cover_ring, map));
  }
  return ParamIdeal(m.cover_ring, std::move(gens));
}

ParamIdeal b_minors(const Mgc2Matrices& m) { return to_cover_ring(m, ideal_of_minors(m.params, m.b_h, 2)); }

Mgc2Ideals mgc2_ideals(const Mgc2Matrices& m) {
  ParamIdeal c = ideal_of_minors(m.params, m.c_hv, 2);
  ParamIdeal a = ideal_of_minors(m.params, m.u_hv, m.t);
  std::vector<Poly> d = c.gens;
  d.insert(d.end(), a.gens.begin(), a.gens.end());
  const ParamIdeal d_ideal(m.params, std::move(d));
  ParamIdeal b = to_cover_ring(m, projective_eliminate(c, m.v_block()));
  ParamIdeal d_hat = to_cover_ring(m, projective_eliminate(d_ideal, m.v_block()));
  VarietyPresentation pres{m.cover_ring, b, d_hat};
  return Mgc2Ideals{std::move(c), std::move(a), std::move(b), std::move(d_hat), std::move(pres)};
}

Poly cover_from_point(const AdaptedIntegral& ai, std::span<const Rational> coords) {
  Poly out(ai.base.rings.y);
  std::size_t idx = 0;
  for (const auto& layer : ai.layers) {
    for (const auto& f : layer) {
      if (idx == coords.size()) return out;
      if (!is_zero(coords[idx])) out += coords[idx] * f;
      ++idx;
    }
  }
  if (idx < coords.size()) throw std::invalid_argument("more coordinates than layer elements");
  return out;
}

namespace {

Rational random_value(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> zero(0, 2);
  if (zero(rng) == 0) return 0;
  std::uniform_int_distribution<int> mag(1, 3);
  std::uniform_int_distribution<int> sign(0, 1);
  const int v = mag(rng);
  return sign(rng) == 0 ? v : -v;
}

// The only variable of p, if p involves exactly one.
std::optional<std::size_t> single_variable(const Poly& p) {
  std::uint64_t support = 0;
  for (const auto& t : p.terms()) support |= t.exp.support();
  if (support == 0 || (support & (support - 1)) != 0) return std::nullopt;
  return static_cast<std::size_t>(std::countr_zero(support));
}

// Rational roots of a univariate polynomial of degree 1 or 2, or a few small
// candidates for higher degree.
std::vector<Rational> rational_roots(const Poly& p, std::size_t var) {
  std::vector<Rational> coef(static_cast<std::size_t>(p.degree()) + 1, Rational(0));
  for (const auto& t : p.terms()) coef[t.exp[var]] = t.coef;
  std::vector<Rational> out;
  if (coef.size() == 2) {
    out.push_back(-coef[0] / coef[1]);
  } else if (coef.size() == 3) {
    const Rational disc = coef[1] * coef[1] - 4 * coef[2] * coef[0];
    if (sgn(disc) < 0) return out;
    mpz_class num = disc.get_num();
    mpz_class den = disc.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return out;
    const Rational root(mpz_class(sqrt(num)), mpz_class(sqrt(den)));
    out.push_back((-coef[1] + root) / (2 * coef[2]));
    out.push_back((-coef[1] - root) / (2 * coef[2]));
  } else {
    for (const Rational& r : {Rational(0), Rational(1), Rational(-1), Rational(2), Rational(-2), Rational(1, 2),
                             Rational(-1, 2), Rational(3), Rational(-3)}) {
      Rational v = 0;
      Rational pw = 1;
      for (const auto& c : coef) {
        v += c * pw;
        pw *= r;
      }
      if (is_zero(v)) out.push_back(r);
    }
  }
  for (auto& r : out) r.canonicalize();
  return out;
}

}  // namespace

std::vector<Rational> sample_zero(const RingPtr& ring, std::span<const Poly> gens, std::mt19937_64& rng,
                                  std::size_t max_tries) {
  const std::size_t n = ring->size();
  for (std::size_t attempt = 0; attempt < max_tries; ++attempt) {
    std::vector<std::optional<Rational>> val(n);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<Poly> work(gens.begin(), gens.end());
    std::size_t next = 0;
    bool failed = false;
    while (!failed) {
      // forced values first
      bool forced = false;
      for (const auto& g : work) {
        if (g.is_zero()) continue;
        if (g.is_constant()) {
          failed = true;
          break;
        }
        auto var = single_variable(g);
        if (!var) continue;
        auto roots = rational_roots(g, *var);
        if (roots.empty()) {
          failed = true;
          break;
        }
        std::uniform_int_distribution<std::size_t> pick(0, roots.size() - 1);
        val[*var] = roots[pick(rng)];
        forced = true;
        break;
      }
      if (failed) break;
      if (!forced) {
        while (next < n && val[order[next]]) ++next;
        if (next == n) break;
        val[order[next]] = random_value(rng);
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (!val[i]) continue;
        for (auto& g : work) g = g.substitute(i, *val[i]);
      }
    }
    if (failed) continue;
    std::vector<Rational> point(n);
    bool nonzero = false;
    for (std::size_t i = 0; i < n; ++i) {
      point[i] = val[i].value_or(Rational(0));
      nonzero = nonzero || !is_zero(point[i]);
    }
    if (!nonzero) continue;
    bool ok = true;
    for (const auto& g : gens) ok = ok && is_zero(g.evaluate(point));
    if (ok) return point;
  }
  return {};
}

SampleReport sample_and_certify(const VarietyPresentation& p, const AdaptedIntegral& ai, std::size_t trials,
                                std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  SampleReport report;
  const InverseSystemBasis iperp = ai.base.as_system();
  const std::size_t expected = std::min<std::size_t>(ai.t(), 2);
  std::set<std::vector<std::string>> seen;

  auto certify = [&](std::vector<Rational> point) {
    // normalize so the first nonzero coordinate is 1
    Rational lead = 0;
    for (const auto& c : point) {
      if (!is_zero(c)) {
        lead = c;
        break;
      }
    }
    std::vector<std::string> key;
    for (auto& c : point) {
      c /= lead;
      key.push_back(to_string(c));
    }
    if (!seen.insert(key).second) return;
    SamplePoint sp;
    sp.inside = p.contains(point);
    const Poly f = cover_from_point(ai, point);
    const CoverCheck check = check_cover(ai.base.rings, iperp, f);
    if (check.is_cover()) {
      sp.colength = check.certificate->colength;
      sp.certified = sp.colength == expected;
    } else {
      sp.witness = check.witness->to_string();
    }
    sp.coords = std::move(point);
    if (sp.inside) {
      ++report.inside;
      if (sp.certified) ++report.inside_certified;
    } else {
      ++report.outside;
      if (!sp.certified) ++report.outside_rejected;
    }
    report.points.push_back(std::move(sp));
  };

  std::vector<Poly> both = p.keep.gens;
  both.insert(both.end(), p.remove.gens.begin(), p.remove.gens.end());
  for (std::size_t i = 0; i < trials; ++i) {
    ++report.attempts;
    auto in = sample_zero(p.ring, p.keep.gens, rng);
    if (!in.empty()) certify(std::move(in));
    auto out = sample_zero(p.ring, both, rng);
    if (!out.empty()) certify(std::move(out));
  }
  return report;
}

}  // namespace gorcover
