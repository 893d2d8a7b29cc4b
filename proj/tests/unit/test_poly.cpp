#include <doctest.h>

#include "lax/errors.hpp"
#include "lax/poly.hpp"

using namespace lax;

namespace {
const Poly z = Poly::var(Var::z());
const Poly p1 = Poly::var(Var::p(1, 1));
const Poly x1 = Poly::var(Var::x(1));
}  // namespace

TEST_CASE("variables print with their indices") {
    CHECK(Var::p(2, 3).name() == "p[2,3]");
    CHECK(Var::p(2, 3, 2).name() == "p[2,3;2]");
    CHECK(Var::what(1, 1).name() == "wh[1,1]");
    CHECK(Var::x(4).name() == "x[4]");
}

TEST_CASE("polynomial arithmetic and canonical printing") {
    Poly f = z * z - Rational(3, 2) * p1 * z + 1;
    CHECK(f.to_string() == "z^2 - 3/2*z*p[1,1] + 1");
    CHECK((f - f).is_zero());
    CHECK(((z + 1) * (z - 1)) == z * z - 1);
    CHECK((z + p1).pow(3) == z * z * z + 3 * z * z * p1 + 3 * z * p1 * p1 + p1 * p1 * p1);
    CHECK(Poly::var(Var::z(), -1).to_string() == "z^-1");
    CHECK(Poly().to_string() == "0");
}

TEST_CASE("degrees and coefficient extraction") {
    Poly f = z * z * x1 + z - 4 * x1;
    CHECK(f.degree(Var::z()) == 2);
    CHECK(f.min_degree(Var::z()) == 0);
    auto c = f.coefficients_in(Var::z());
    CHECK(c[2] == x1);
    CHECK(c[1] == Poly(1));
    CHECK(c[0] == -4 * x1);
    CHECK(f.involves(Var::x(1)));
    CHECK_FALSE(f.involves(Var::x(2)));
}

TEST_CASE("substitution with Laurent exponents") {
    Poly f = z * z + Poly::var(Var::z(), -1);
    auto g = f.substitute({{Var::z(), 2 * p1}});
    CHECK(g == 4 * p1 * p1 + Rational(1, 2) * Poly::var(Var::p(1, 1), -1));
    CHECK_THROWS_AS(f.substitute({{Var::z(), p1 + 1}}), NotAtomFactorable);
    CHECK_THROWS_AS(f.substitute({{Var::z(), Poly()}}), DivisionByZero);
}

TEST_CASE("content monomial") {
    Poly f = z * z * x1 + z * Poly::var(Var::x(1), -1);
    auto m = f.content_monomial();
    CHECK(m.exponent(Var::z()) == 1);
    CHECK(m.exponent(Var::x(1)) == -1);
}
