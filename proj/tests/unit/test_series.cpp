#include <doctest.h>

#include "lax/parse.hpp"
#include "lax/series.hpp"
#include "lax/random_ratfun.hpp"

using namespace lax;

TEST_CASE("geometric series at infinity") {
    auto s = series_expand(parse_ratfun("1/(1 - x[1]/z)"), Var::z(), Expansion::AtInfinity, 3);
    CHECK(s.valuation() == 0);
    CHECK(s.precision() == 3);
    CHECK(s.coefficient(0) == RatFun(1));
    CHECK(s.coefficient(1) == parse_ratfun("x[1]"));
    CHECK(s.coefficient(2) == parse_ratfun("x[1]^2"));
}

TEST_CASE("leading term of a shifted Cartan current") {
    auto s = series_expand(parse_ratfun("z^3 + p[1,1]*z^2"), Var::z(), Expansion::AtInfinity, 2);
    CHECK(s.valuation() == -3);
    CHECK(s.coefficient(-3) == RatFun(1));
    CHECK(s.coefficient(-2) == parse_ratfun("p[1,1]"));
}

TEST_CASE("expansion at zero") {
    auto s = series_expand(parse_ratfun("1/(z^2 - z*x[1])"), Var::z(), Expansion::AtZero, 3);
    CHECK(s.valuation() == -1);
    CHECK(s.coefficient(-1) == parse_ratfun("-1/x[1]"));
    CHECK(s.coefficient(1) == parse_ratfun("-1/x[1]^3"));
}

TEST_CASE("expansion is faithful on random rational functions") {
    lax::sampling::RandomRatFun gen(77);
    for (int trial = 0; trial < 200; ++trial) {
        RatFun f = gen.ratfun();
        RatFun g = gen.ratfun();
        const int K = 4;
        auto sf = series_expand(f, Var::z(), Expansion::AtInfinity, K);
        auto sg = series_expand(g, Var::z(), Expansion::AtInfinity, K);
        auto sfg = series_expand(f * g, Var::z(), Expansion::AtInfinity, K);
        auto sum = series_expand(f + g, Var::z(), Expansion::AtInfinity, K);
        CHECK(agrees(sf * sg, sfg));
        CHECK(agrees(sf + sg, sum));
    }
}
