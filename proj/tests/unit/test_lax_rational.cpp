#include <doctest.h>

#include "lax/errors.hpp"
#include "lax/lax_rational.hpp"

using namespace lax;

namespace {

Divisor young(const std::vector<int>& blambda, const std::vector<int>& bmu) {
    return divisor_from_young(Mode::Rational, blambda, symbolic_points(int(transpose(blambda).size())), bmu);
}

OpMatrix normalized(const Divisor& d) { return normalize_and_check_polynomial(build_lax(d)).T; }

}  // namespace

TEST_CASE("coweight bases") {
    CHECK(Coweight::varpi(2, 1).epsilon() == std::vector<int>{0, -1});
    CHECK(Coweight::from_fundamental({-1, 2}).epsilon() == std::vector<int>{1, -1});
    CHECK(Coweight::from_pseudo_young({2, 0}).epsilon() == std::vector<int>{0, -2});
    CHECK(Coweight::from_epsilon({3, -1, 5}).fundamental() == std::vector<int>{-3, 4, -6});
    CHECK(Coweight::from_fundamental(Coweight::from_epsilon({3, -1, 5}).fundamental()).epsilon() ==
          std::vector<int>{3, -1, 5});
    CHECK(Coweight::varpi(3, 0).is_dominant());
    CHECK_FALSE(Coweight::from_epsilon({-1, 1}).is_dominant());
}

TEST_CASE("a-vectors") {
    CHECK(young({0, 0, 0, 0}, {1, 1, -1, -1}).a() == std::vector<int>{1, 2, 1});
    CHECK(Divisor(Mode::Rational, 2, {}, Coweight::alpha(2, 1) * 3).a() == std::vector<int>{3});
    CHECK_THROWS_AS(Divisor(Mode::Rational, 2, {}, Coweight::alpha(2, 1) * -1), NotAdmissible);
    CHECK_THROWS_AS(young({1, 0}, {0, 0}), SizeMismatch);
}

TEST_CASE("divisor JSON round trip") {
    const std::string text =
        R"({"n":2,"mode":"rational","points":[{"x":"x1","coweight":{"fundamental":[0,1]}}],"infinity":{"fundamental":[-1,1]},"zero":null})";
    Divisor d = Divisor::from_json(text);
    CHECK(d.a() == std::vector<int>{1});
    CHECK(d.to_json() == text);
}

TEST_CASE("rational golden matrices for n = 2") {
    CHECK(normalized(young({0, 0}, {1, -1})) ==
          matrix_from_rows({{"z - p[1,1]", "-e^{q[1,1]}"}, {"e^{q[1,1]}^{-1}", "0"}}, Mode::Rational));
    CHECK(normalized(young({1, 0}, {0, -1})) ==
          matrix_from_rows({{"z - p[1,1]", "-(p[1,1] - x[1])*e^{q[1,1]}"}, {"e^{q[1,1]}^{-1}", "1"}},
                           Mode::Rational));
    CHECK(normalized(young({2, 0}, {-1, -1})) ==
          matrix_from_rows({{"z - p[1,1]", "-(p[1,1] - x[1])*(p[1,1] - x[2])*e^{q[1,1]}"},
                            {"e^{q[1,1]}^{-1}", "z + p[1,1] + 1 - x[1] - x[2]"}},
                           Mode::Rational));
}

TEST_CASE("fast path agrees with the general builder") {
    for (auto [bl, bm] : std::vector<std::pair<std::vector<int>, std::vector<int>>>{
             {{0, 0}, {1, -1}}, {{1, 0}, {0, -1}}, {{2, 0}, {-1, -1}}, {{0, 0, 0}, {1, 0, -1}},
             {{1, 0, 0}, {0, 0, -1}}, {{1, 1, 0}, {0, -1, -1}}, {{2, 1, 0}, {-1, -1, -1}}, {{0, 0, 0}, {2, -1, -1}}}) {
        Divisor d = young(bl, bm);
        CHECK(build_linear_lax(d).T == normalized(d));
    }
}

TEST_CASE("qdet image") {
    for (auto [bl, bm] : std::vector<std::pair<std::vector<int>, std::vector<int>>>{
             {{1, 0}, {0, -1}}, {{2, 0}, {-1, -1}}, {{1, 1, 0}, {0, -1, -1}}, {{2, 1, 0}, {-1, -1, -1}}}) {
        Divisor d = young(bl, bm);
        CHECK(qdet_image(d) == qdet_closed_form(d));
    }
    CHECK(qdet_image(young({1, 0}, {0, -1})) == RatFun::var(Var::z()) - RatFun::var(Var::x(1)) + RatFun(1));
}

namespace {

// sum_{k=from}^{to} q[k,1] as a shift monomial, with the given sign.
Shift q_run(int from, int to, int sign) {
    Shift s;
    for (int k = from; k <= to; ++k) s = s * Shift::of(slot_var(Mode::Rational, k, 1), sign);
    return s;
}

AlgebraElement rat_term(const RatFun& c, const Shift& s = Shift{}) {
    return AlgebraElement::term(c, s, Mode::Rational);
}

RatFun p1(int i) { return RatFun::var(Var::p(unsigned(i), 1)); }

}  // namespace

TEST_CASE("the matrix with bmu = (1, 0, ..., 0, -1)") {
    for (int n : {3, 4, 5}) {
        CAPTURE(n);
        std::vector<int> bmu(std::size_t(n), 0);
        bmu.front() = 1;
        bmu.back() = -1;
        OpMatrix want(n, n);
        want(1, 1) = rat_term(RatFun::var(Var::z()) - p1(1));
        for (int j = 2; j <= n; ++j) want(1, j) = rat_term(RatFun(-1), q_run(1, j - 1, 1));
        for (int i = 2; i < n; ++i) {
            want(i, 1) = rat_term(p1(i - 1) + RatFun(1) - p1(i), q_run(1, i - 1, -1));
            want(i, i) = rat_term(RatFun(1));
        }
        want(n, 1) = rat_term(RatFun(1), q_run(1, n - 1, -1));
        CHECK(normalized(young(std::vector<int>(std::size_t(n), 0), bmu)) == want);
    }
}

TEST_CASE("polynomiality with a varpi_0 summand") {
    // varpi_1 at x1 and -varpi_0 at x2: Z_0 = (z - x2)^{-1}.
    Divisor d(Mode::Rational, 2,
              {{Poly::var(Var::x(1)), Coweight::varpi(2, 1)}, {Poly::var(Var::x(2)), Coweight::varpi(2, 0) * -1}},
              Coweight::from_epsilon({0, -1}));
    REQUIRE(d.a() == std::vector<int>{1});
    LaxMatrix t = normalize_and_check_polynomial(build_lax(d));
    CHECK(t.T == build_lax(divisor_moved_to_infinity(d, 1)).T);
    CHECK_THROWS_AS(build_linear_lax(d), NotLinearCase);
}

TEST_CASE("rational limits reproduce the builder") {
    struct Case {
        std::vector<int> blambda, bmu;
    };
    for (const Case& c : std::vector<Case>{{{1, 0}, {0, -1}},
                                           {{2, 0}, {-1, -1}},
                                           {{1, 1, 0}, {0, -1, -1}},
                                           {{2, 1, 0}, {-1, -1, -1}},
                                           {{1, 0, 0}, {0, 0, -1}}}) {
        Divisor d = young(c.blambda, c.bmu);
        const std::size_t last = d.points().size() - 1;
        LaxMatrix lim = normalized_limit(build_lax(d), last);
        CHECK(lim.divisor.points().size() == last);
        CHECK(lim.T == build_lax(lim.divisor).T);
    }
    // A pure varpi_0 point leaves by the exact relation.
    Divisor d(Mode::Rational, 2,
              {{Poly::var(Var::x(1)), Coweight::varpi(2, 1)}, {Poly::var(Var::x(2)), Coweight::varpi(2, 0)}},
              Coweight::from_epsilon({2, 1}));
    LaxMatrix lim = normalized_limit(build_lax(d), 1);
    CHECK(lim.T == build_lax(lim.divisor).T);
    CHECK_THROWS_AS(normalized_limit(normalize_and_check_polynomial(build_lax(d)), 1), SizeMismatch);
}

TEST_CASE("commuting Hamiltonians for n = 2") {
    const RatFun eps = RatFun::var(Var::eps());
    OpMatrix toda = normalized(young({0, 0}, {1, -1}));
    auto single = commuting_hamiltonians_n2(toda, eps);
    CHECK(single.size() == 2);
    CHECK(pairwise_commute(single));

    auto chain = commuting_hamiltonians_n2(fuse(toda, toda), eps);
    CHECK(chain.size() == 3);
    CHECK(pairwise_commute(chain));

    OpMatrix doubled = normalized(Divisor(Mode::Rational, 2, {}, Coweight::alpha(2, 1) * 2));
    auto two = commuting_hamiltonians_n2(doubled, eps);
    CHECK(two.size() == 3);
    CHECK(pairwise_commute(two));

    CHECK_FALSE(pairwise_commute({rat_term(p1(1)), rat_term(RatFun(1), q_run(1, 1, 1))}));
}
