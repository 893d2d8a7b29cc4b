#include <doctest.h>

#include "lax/algebra.hpp"
#include "lax/errors.hpp"
#include "lax/random_algebra.hpp"

using namespace lax;

namespace {

const Var p11 = Var::p(1, 1);
const Var p12 = Var::p(1, 2);
const Var w11 = Var::what(1, 1);

AlgebraElement eq(Var slot, int m = 1) { return AlgebraElement::term(RatFun(1), Shift::of(slot, m), Mode::Rational); }
AlgebraElement dop(Var slot, int m = 1) { return AlgebraElement::term(RatFun(1), Shift::of(slot, m), Mode::Trig); }
AlgebraElement rat(const RatFun& f) { return AlgebraElement(f, Mode::Rational); }
AlgebraElement trig(const RatFun& f) { return AlgebraElement(f, Mode::Trig); }

}  // namespace

TEST_CASE("defining relations of the rational algebra") {
    auto p = rat(RatFun::var(p11));
    CHECK(eq(p11) * p == AlgebraElement::term(RatFun::var(p11) - RatFun(1), Shift::of(p11), Mode::Rational));
    CHECK(eq(p11) * eq(p11, -1) == AlgebraElement(1));
    CHECK(commutator(eq(p11), p) == -eq(p11));
    CHECK(commutator(eq(p11, -1), p) == eq(p11, -1));
    CHECK(commutator(p, rat(RatFun::var(p12))).is_zero());
    CHECK(commutator(eq(p12), p).is_zero());
    CHECK(eq(p11).to_string() == "(1)*e^{q[1,1]}");
}

TEST_CASE("defining relations of the trig algebra") {
    auto w = trig(RatFun::var(w11));
    auto vw = trig(RatFun::var(Var::v()) * RatFun::var(w11));
    CHECK(dop(w11) * w == vw * dop(w11));
    // w = wh^2 moves by v^2.
    auto w2 = trig(RatFun::var(w11, 2));
    CHECK(dop(w11) * w2 == trig(RatFun::var(Var::v(), 2) * RatFun::var(w11, 2)) * dop(w11));
    CHECK(dop(w11) * dop(w11, -1) == AlgebraElement(1));
    CHECK(dop(w11, 2).to_string() == "(1)*D[1,1]^{2}");
}

TEST_CASE("single-slot shift operation") {
    auto zp = RatFun::var(Var::z()) - RatFun::var(p11);
    CHECK(shift(zp, p11, -1, Mode::Rational) == zp + RatFun(1));
    auto den = (RatFun::var(w11, 2) - RatFun::var(Var::v()) * RatFun::var(Var::what(1, 2), 2)).invert();
    auto shifted = shift(den, w11, 1, Mode::Trig);
    CHECK(shifted == (RatFun::var(Var::v(), 2) * RatFun::var(w11, 2) -
                      RatFun::var(Var::v()) * RatFun::var(Var::what(1, 2), 2)).invert());
    CHECK(shift(RatFun(1), p11, 3, Mode::Rational) == RatFun(1));
}

TEST_CASE("modes and signatures must agree") {
    CHECK_THROWS_AS(eq(p11) * dop(w11), SignatureMismatch);
    auto s1 = std::make_shared<Signature>(Signature{Mode::Rational, 2, {{1}}});
    auto s2 = std::make_shared<Signature>(Signature{Mode::Rational, 2, {{2}}});
    CHECK_THROWS_AS(eq(p11).with_signature(s1) * eq(p11).with_signature(s2), SignatureMismatch);
}

TEST_CASE("text round trip") {
    for (Mode mode : {Mode::Rational, Mode::Trig}) {
        sampling::RandomAlgebra gen(5, mode);
        for (int t = 0; t < 50; ++t) {
            auto x = gen.element();
            CHECK(parse_element(x.to_string(), mode) == x);
        }
    }
    CHECK(parse_element("(z - p[1,1])*e^{q[1,1]}^{-1} + 3", Mode::Rational).terms().size() == 2);
}

TEST_CASE("algebra axioms on random elements") {
    for (Mode mode : {Mode::Rational, Mode::Trig}) {
        sampling::RandomAlgebra gen(17, mode);
        for (int t = 0; t < 200; ++t) {
            auto a = gen.element(), b = gen.element(), c = gen.element();
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a + b) * c == a * c + b * c);
            CHECK(a * AlgebraElement(1) == a);
        }
    }
}

TEST_CASE("shifts act as ring automorphisms") {
    for (Mode mode : {Mode::Rational, Mode::Trig}) {
        sampling::RandomAlgebra gen(23, mode);
        Var slot = slot_var(mode, 1, 1);
        for (int t = 0; t < 200; ++t) {
            RatFun f = gen.coefficient(), g = gen.coefficient();
            std::uniform_int_distribution<int> m(-2, 2);
            int j = m(gen.rng()), k = m(gen.rng());
            CHECK(shift(f * g, slot, j, mode) == shift(f, slot, j, mode) * shift(g, slot, j, mode));
            CHECK(shift(f + g, slot, j, mode) == shift(f, slot, j, mode) + shift(g, slot, j, mode));
            CHECK(shift(shift(f, slot, j, mode), slot, k, mode) == shift(f, slot, j + k, mode));
        }
    }
}

TEST_CASE("tensor factors are independent") {
    sampling::RandomAlgebra gen(29, Mode::Rational);
    CHECK(tensor(eq(p11), AlgebraElement(1)) * tensor(AlgebraElement(1), eq(p11)) == tensor(eq(p11), eq(p11)));
    for (int t = 0; t < 200; ++t) {
        auto a = gen.element(), b = gen.element(), c = gen.element();
        auto left = tensor(a, AlgebraElement(1)), right = tensor(AlgebraElement(1), b);
        CHECK(left * right == right * left);
        CHECK(tensor(a * c, AlgebraElement(1)) == tensor(a, AlgebraElement(1)) * tensor(c, AlgebraElement(1)));
    }
}

TEST_CASE("gamma gauge through the functional equation") {
    Poly form = Poly::var(p11) - Poly::var(Var::x(1)) + 1;
    GammaGauge s{{{form, 1}}};
    auto r = conjugate_by_gauge(s, eq(p11));
    CHECK(r == rat(RatFun(Poly::var(p11) - Poly::var(Var::x(1)))) * eq(p11));
    GammaGauge inv{{{form, -1}}};
    auto l = conjugate_by_gauge(inv, eq(p11, -1));
    CHECK(l == rat(RatFun(Poly::var(p11) - Poly::var(Var::x(1)) + 1)) * eq(p11, -1));
    GammaGauge half{{{Poly::var(p11) * Poly(Rational(1, 2)), 1}}};
    CHECK_THROWS_AS(conjugate_by_gauge(half, eq(p11)), NonIntegerShift);

    MonomialGauge u{{0, 1, 2}, {1, -1, 1}};
    CHECK(conjugate_by_gauge(u, rat(RatFun::var(p11))) == rat(RatFun::var(p11) + RatFun(1)));
    CHECK(conjugate_by_gauge(u, eq(p11)) == -eq(p11));
}

TEST_CASE("gauges act as automorphisms") {
    GammaGauge s{{{Poly::var(p11) - Poly::var(p12) + 1, 1},
                  {Poly::var(p11) - Poly::var(Var::x(1)) + 1, 1},
                  {Poly::var(Var::p(2, 1)) - Poly::var(p12), -1}}};
    MonomialGauge u{{0, 1, 2}, {1, -1, 1}};
    sampling::RandomAlgebra gen(31, Mode::Rational);
    for (int t = 0; t < 200; ++t) {
        auto a = gen.element(), b = gen.element();
        CHECK(conjugate_by_gauge(s, a * b) == conjugate_by_gauge(s, a) * conjugate_by_gauge(s, b));
        CHECK(conjugate_by_gauge(u, a * b) == conjugate_by_gauge(u, a) * conjugate_by_gauge(u, b));
    }
}
