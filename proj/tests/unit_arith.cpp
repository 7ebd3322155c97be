#include "support.hpp"

#include <doctest.h>

using namespace support;

TEST_SUITE("arith") {
  TEST_CASE("rationals parse and print canonically") {
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK(parse_rational("-7/2") == Rational(-7, 2));
    CHECK(parse_rational("+5") == 5);
    CHECK(to_string(parse_rational("-6/4")) == "-3/2");
    CHECK(to_string(Rational(5)) == "5");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  }

  TEST_CASE("rref of a rank one matrix") {
    const QMatrix m{{1, 2}, {2, 4}};
    const RrefResult r = rref(m);
    CHECK(r.rank == 1);
    CHECK(r.pivots == std::vector<std::size_t>{0});
    CHECK(r.reduced == QMatrix{{1, 2}, {0, 0}});
  }

  TEST_CASE("kernel vectors have a unit at their free column") {
    const QMatrix m{{1, 2, 3}, {0, 1, 1}};
    const auto k = kernel_basis(m);
    REQUIRE(k.size() == 1);
    CHECK(k[0][2] == 1);
    CHECK((m * k[0]) == QVector{0, 0});
    CHECK(rank(QMatrix::identity(4)) == 4);
  }

  TEST_CASE("polynomial arithmetic is exact and canonical") {
    const RingPtr r = Ring::family("x", 3);
    const Poly f = P(r, "x1 + 1/2*x2");
    CHECK((f * f) == P(r, "x1^2 + x1*x2 + 1/4*x2^2"));
    CHECK((f - f).is_zero());
    CHECK(f.pow(0) == Poly::constant(r, 1));
    CHECK(P(r, "(x1 - x3)^3").degree() == 3);
    CHECK(P(r, "x1^2*x3 + x2^3").is_homogeneous());
    CHECK_FALSE(P(r, "x1^2 + x2").is_homogeneous());
    CHECK(P(r, "x1*x2 - 3").substitute(1, Rational(2)) == P(r, "2*x1 - 3"));
    const std::vector<Rational> pt{1, 2, 3};
    CHECK(P(r, "x1*x2*x3 - x3^2").evaluate(pt) == -3);
  }

  TEST_CASE("exponent divisibility and lcm") {
    const std::vector<unsigned> a{2, 0, 1};
    const std::vector<unsigned> b{1, 3, 0};
    const Exponent ea(a);
    const Exponent eb(b);
    const Exponent l = Exponent::lcm(ea, eb);
    CHECK(ea.divides(l));
    CHECK(eb.divides(l));
    CHECK(l.degree() == 6);
    CHECK_FALSE(ea.divides(eb));
    CHECK((l / ea) * ea == l);
  }

  TEST_CASE("minors of a polynomial matrix") {
    const RingPtr r = Ring::family("a", 4);
    PolyMatrix m(r, 2, 2);
    m(0, 0) = P(r, "a1");
    m(0, 1) = P(r, "a2");
    m(1, 0) = P(r, "a3");
    m(1, 1) = P(r, "a4");
    const auto d = minors(m, 2);
    REQUIRE(d.size() == 1);
    CHECK((d[0] == P(r, "a1*a4 - a2*a3") || d[0] == P(r, "a2*a3 - a1*a4")));
    CHECK(minors(m, 1).size() == 4);
    CHECK_THROWS_AS(minors(m, 3), std::out_of_range);
  }

  TEST_CASE("row basis keeps the ideal of maximal minors") {
    const RingPtr r = Ring::family("a", 2);
    PolyMatrix m(r, 3, 2);
    m(0, 0) = P(r, "a1");
    m(0, 1) = P(r, "a2");
    m(1, 0) = P(r, "2*a1");
    m(1, 1) = P(r, "2*a2");
    m(2, 0) = P(r, "a2");
    m(2, 1) = P(r, "a1");
    const std::vector<int> cls{0, 0, 0};
    const PolyMatrix b = rational_row_basis(m, cls);
    CHECK(b.rows() == 2);
    CHECK(equal_up_to_radical(ParamIdeal(r, minors(b, 2)), ParamIdeal(r, minors(m, 2))));
  }

  TEST_CASE("span membership and coordinates") {
    const RingPtr r = Ring::family("y", 2);
    PolySpan s(r);
    CHECK(s.insert(P(r, "y1 + y2")));
    CHECK(s.insert(P(r, "y1 - y2")));
    CHECK_FALSE(s.insert(P(r, "y1")));
    const auto c = s.coordinates(P(r, "y1"));
    REQUIRE(c.has_value());
    CHECK((*c)[0] == Rational(1, 2));
    CHECK((*c)[1] == Rational(1, 2));
    CHECK_FALSE(s.coordinates(P(r, "y1*y2")).has_value());
  }
}
