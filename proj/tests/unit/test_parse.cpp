#include <doctest.h>

#include "lax/errors.hpp"
#include "lax/matrix.hpp"
#include "lax/parse.hpp"
#include "lax/random_ratfun.hpp"

using namespace lax;

TEST_CASE("parser reads arithmetic over the known variables") {
    RatFun f = parse_ratfun("(z - p[1,1] + 1) / ((p[1,1] - p[1,2]) * (z - x[1]))");
    CHECK(f.den().size() == 2);
    CHECK(parse_ratfun("x1 - x[1]").is_zero());
    CHECK(parse_ratfun("wh[2,1;3]^-2 * v^(2)").to_string() == "wh[2,1;3]^-2*v^2");
    CHECK(parse_ratfun("-3/2*z").num() == Poly::var(Var::z()) * Poly(Rational(-3, 2)));
    CHECK_THROWS_AS(parse_ratfun("z +"), ParseError);
    CHECK_THROWS_AS(parse_ratfun("q[1,1]"), ParseError);
    CHECK_THROWS_AS(parse_ratfun("(z"), ParseError);
}

TEST_CASE("canonical text round-trips") {
    sampling::RandomRatFun gen(3);
    for (int trial = 0; trial < 200; ++trial) {
        RatFun f = gen.ratfun();
        RatFun g = parse_ratfun(f.to_string());
        CHECK(g.same_form(f));
        CHECK(g.to_string() == f.to_string());
    }
}

TEST_CASE("LaTeX export") {
    const OpMatrix m = matrix_from_rows({{"z - p[1,1]", "-e^{q[1,1]}"}, {"e^{q[1,1]}^{-1}", "1"}}, Mode::Rational);
    CHECK(to_latex(m(1, 1)) == "z - p_{1,1}");
    CHECK(to_latex(m(1, 2)) == "-e^{q_{1,1}}");
    CHECK(to_latex(m(2, 1)) == "e^{-q_{1,1}}");
    CHECK(to_latex(m(2, 2)) == "1");
    CHECK(to_latex(m).rfind("\\begin{pmatrix}", 0) == 0);
    const AlgebraElement two = parse_element("(z - p[1,1;2])*e^{q[1,1;2]}^{-1}", Mode::Rational);
    CHECK(to_latex(two) == "(z - p^{(2)}_{1,1}) e^{-q^{(2)}_{1,1}}");
    CHECK(to_latex(parse_element("wh[1,1]*D[1,1]", Mode::Trig)) == "(\\hat{w}_{1,1}) D_{1,1}");
}
