#pragma once

#include "gorcover/rational.hpp"

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <cstring>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gorcover {

inline constexpr std::size_t kMaxVars = 64;

// Exponent vector of a monomial. Unused trailing slots stay zero, so two
// exponents of the same ring compare correctly over the whole array.
class Exponent {
 public:
  Exponent() = default;
  explicit Exponent(std::span<const unsigned> exps);

  unsigned operator[](std::size_t i) const { return e_[i]; }
  void set(std::size_t i, unsigned value);
  unsigned degree() const { return degree_; }
  std::uint64_t support() const { return support_; }

  // Componentwise this <= other.
  bool divides(const Exponent& other) const {
    if ((support_ & ~other.support_) != 0 || degree_ > other.degree_) return false;
    std::uint64_t m = support_;
    while (m != 0) {
      const auto i = static_cast<std::size_t>(std::countr_zero(m));
      if (e_[i] > other.e_[i]) return false;
      m &= m - 1;
    }
    return true;
  }

  Exponent operator*(const Exponent& other) const;
  // Requires other.divides(*this).
  Exponent operator/(const Exponent& other) const;
  static Exponent lcm(const Exponent& a, const Exponent& b);
  bool coprime(const Exponent& other) const { return (support_ & other.support_) == 0; }

  const std::uint8_t* data() const { return e_.data(); }

  friend bool operator==(const Exponent& a, const Exponent& b) {
    return a.degree_ == b.degree_ && a.e_ == b.e_;
  }

  std::size_t hash() const;

 private:
  std::array<std::uint8_t, kMaxVars> e_{};
  std::uint16_t degree_ = 0;
  std::uint64_t support_ = 0;
};

struct ExponentHash {
  std::size_t operator()(const Exponent& e) const { return e.hash(); }
};

// Graded lexicographic comparison with x1 > x2 > ... > xn.
inline std::strong_ordering grlex_compare(const Exponent& a, const Exponent& b) {
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  const int c = std::memcmp(a.data(), b.data(), kMaxVars);
  return c <=> 0;
}

// Names the variables of one polynomial family (x1..xn, y1..yn, a1..,b1..,v1..).
class Ring {
 public:
  explicit Ring(std::vector<std::string> names);

  static std::shared_ptr<const Ring> make(std::vector<std::string> names);
  // prefix1, ..., prefixN
  static std::shared_ptr<const Ring> family(std::string_view prefix, std::size_t n);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  bool same_as(const Ring& other) const { return this == &other || names_ == other.names_; }

 private:
  std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const Ring>;

struct Term {
  Exponent exp;
  Rational coef;
};

// Sparse multivariate polynomial over the rationals. Terms are kept sorted by
// decreasing grlex order with no zero coefficients, so equality is structural.
class Poly {
 public:
  explicit Poly(RingPtr ring);

  static Poly constant(RingPtr ring, const Rational& c);
  static Poly variable(RingPtr ring, std::size_t index);
  static Poly monomial(RingPtr ring, const Exponent& exp, const Rational& c = 1);
  // Combines like terms and sorts; zero coefficients are dropped.
  static Poly from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  std::size_t nvars() const { return ring_->size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t size() const { return terms_.size(); }
  std::span<const Term> terms() const { return terms_; }

  // Grlex-leading term; requires a nonzero polynomial.
  const Term& leading() const { return terms_.front(); }
  // Total degree; -1 for the zero polynomial.
  int degree() const;
  // Degree counting only variables whose bit is set in mask (up to 64 vars).
  int degree_in(std::uint64_t mask) const;
  Rational coefficient(const Exponent& exp) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }

  // Multiplies by a single term.
  Poly times_term(const Exponent& exp, const Rational& c) const;
  Poly pow(unsigned e) const;

  // Substitutes xi := value.
  Poly substitute(std::size_t var, const Rational& value) const;
  Poly substitute(std::size_t var, const Poly& value) const;
  Rational evaluate(std::span<const Rational> point) const;

  // Divides by the leading coefficient; zero stays zero.
  Poly monic() const;
  // Weighted degree if every term has the same weighted degree, else nullopt.
  std::optional<long> homogeneous_degree(std::span<const int> weights) const;
  bool is_homogeneous() const;

  // Moves the polynomial to another ring: variable i becomes target var map[i].
  Poly remap(RingPtr target, std::span<const std::size_t> map) const;

  std::string to_string() const;

  friend bool operator==(const Poly& a, const Poly& b);

 private:
  void check_ring(const Poly& other) const;
  Poly combine(const Poly& other, bool subtract) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

// Canonical total order on polynomials of one ring: by term list, used for
// sorting generator lists deterministically.
bool canonical_less(const Poly& a, const Poly& b);

// Sorts, makes monic and removes duplicates and zeros.
std::vector<Poly> canonical_generators(std::vector<Poly> gens);

std::string to_string(std::span<const Poly> polys);

// Exponents of total degree d in n variables, decreasing in grlex.
std::vector<Exponent> monomials_of_degree(std::size_t n, unsigned d);
// All exponents of degree lo..hi, by increasing degree.
std::vector<Exponent> monomials_in_degrees(std::size_t n, unsigned lo, unsigned hi);

}  // namespace gorcover
