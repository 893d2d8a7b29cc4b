#include <doctest.h>

#include "lax/errors.hpp"
#include "lax/ratfun.hpp"
#include "lax/random_ratfun.hpp"

using namespace lax;

namespace {
const Poly z = Poly::var(Var::z());
const Poly p1 = Poly::var(Var::p(1, 1));
const Poly p2 = Poly::var(Var::p(1, 2));
const Poly x1 = Poly::var(Var::x(1));
const Poly v = Poly::var(Var::v());
const Poly wh = Poly::var(Var::what(1, 1));
}  // namespace

TEST_CASE("fractions reduce to lowest terms") {
    RatFun f = RatFun(z * z - p1 * p1) / RatFun(z - p1);
    CHECK(f.is_polynomial());
    CHECK(f.num() == z + p1);

    RatFun g = RatFun(1) / RatFun(p1 - p2) + RatFun(1) / RatFun(p2 - p1);
    CHECK(g.is_zero());

    RatFun h = RatFun(1) / RatFun(z - x1) - RatFun(1) / RatFun(z - x1 + 1);
    CHECK(h.to_string() == "(1) / ((z - x[1] + 1) * (z - x[1]))");
}

TEST_CASE("atoms are normalized to leading coefficient one") {
    RatFun f = RatFun(1) / RatFun(2 * p2 - 2 * p1);
    CHECK(f.den().size() == 1);
    CHECK(f.den()[0].first.poly() == p1 - p2);
    CHECK(f.num() == Poly(Rational(-1, 2)));
}

TEST_CASE("binomial atoms split over squares") {
    // 1 - v^2 w^2 = (1 - v w)(1 + v w)
    RatFun f = RatFun(1) / RatFun(1 - v * v * wh * wh);
    CHECK(f.den().size() == 2);
    RatFun g = f * RatFun(1 - v * wh);
    CHECK(g.den().size() == 1);
    // Laurent content is a unit.
    RatFun h = RatFun(1) / RatFun(1 - Poly::var(Var::v(), -1) * x1 * Poly::var(Var::z(), -1));
    CHECK(h.num() == z * v);
    CHECK(h.den()[0].first.poly() == z * v - x1);
}

TEST_CASE("invert finds linear factors without a degree-one variable") {
    Poly q = (p2 - 2) * (p2 - 6) * (p1 - x1) * (p1 + x1 - 1);
    RatFun f = RatFun(q).invert();
    CHECK(f.den().size() == 4);
    CHECK((f * RatFun(q)) == RatFun(1));
    CHECK(RatFun((z - p1) * (z - p1)).invert().den().size() == 1);
}

TEST_CASE("invert handles products of linear forms") {
    Poly q = (z - p1) * (z - p2) * (p1 - x1 + 3);
    RatFun f = RatFun(1) / RatFun(q);
    CHECK(f.den().size() == 3);
    CHECK((f * RatFun(q)) == RatFun(1));
    CHECK_THROWS_AS(RatFun(z * z + p1 * p1 + 1).invert(), NotAtomFactorable);
    CHECK_THROWS_AS(RatFun().invert(), DivisionByZero);
}

TEST_CASE("substitution refactors denominators") {
    RatFun f = RatFun(z) / RatFun(z - p1);
    RatFun g = f.substitute({{Var::p(1, 1), p1 + 1}});
    CHECK(g == RatFun(z) / RatFun(z - p1 - 1));
    CHECK_THROWS_AS(f.substitute({{Var::z(), p1}}), DivisionByZero);
}

TEST_CASE("limits in a variable") {
    RatFun f = RatFun(x1 * z) / RatFun(z - x1);
    CHECK(f.limit_leading(Var::x(1)) == RatFun(-z));
    CHECK(f.limit_at_zero(Var::x(1)).is_zero());
    CHECK_THROWS_AS(RatFun(x1 * x1).limit_leading(Var::x(1)), DivergesAtInfinity);
    CHECK_THROWS_AS(RatFun(Poly::var(Var::x(1), -1)).limit_at_zero(Var::x(1)), DivergesAtZero);
    RatFun g = RatFun(1 - x1 * Poly::var(Var::z(), -1)).pow(2);
    CHECK(g.limit_at_zero(Var::x(1)) == RatFun(1));
}

TEST_CASE("field axioms on random rational functions") {
    sampling::RandomRatFun gen(7);
    for (int trial = 0; trial < 200; ++trial) {
        RatFun a = gen.ratfun(), b = gen.ratfun(), c = gen.invertible();
        CHECK((a + b) == (b + a));
        CHECK((a * b) == (b * a));
        CHECK(((a + b) * c) == (a * c + b * c));
        CHECK(((a * c) / c) == a);
        CHECK(((a - b) + b) == a);
        CHECK(probably_equals((a + b) * c, a * c + b * c));
    }
}

TEST_CASE("symbolic results agree with exact evaluation") {
    sampling::RandomRatFun gen(11);
    for (int trial = 0; trial < 200; ++trial) {
        RatFun a = gen.ratfun(), b = gen.invertible();
        RatFun q = a / b;
        CHECK(probably_equals(q * b, a));
        RatFun shifted = a.substitute({{Var::p(1, 1), p1 + 1}});
        CHECK(probably_equals(shifted.substitute({{Var::p(1, 1), p1 - 1}}), a));
    }
}
