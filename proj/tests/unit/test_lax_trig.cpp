#include <doctest.h>

#include "lax/errors.hpp"
#include "lax/lax_trig.hpp"
#include "lax/parse.hpp"
#include "lax/rtt.hpp"

using namespace lax;

namespace {

Divisor trig_young(const std::vector<int>& blambda, const std::vector<int>& bmu_plus,
                   const std::vector<int>& bmu_minus) {
    return divisor_from_young(Mode::Trig, blambda, symbolic_points(int(transpose(blambda).size())), bmu_plus,
                              bmu_minus);
}

struct SixCase {
    int blambda1, bmu_plus1, bmu_minus1;
    std::string t12, t22, qdet;
};

const std::string kT11 = "z/wh[1,1] - v*wh[1,1]";
const std::string kT21 = "(-v*wh[1,1])*D[1,1]";

const std::vector<SixCase>& six_cases() {
    static const std::vector<SixCase> cases{
        {0, -1, 2, "(z*wh[1,1])*D[1,1]^{-1}", "z*wh[1,1]", "z^2/v^2"},
        {0, 0, 1, "(z/(v*wh[1,1]))*D[1,1]^{-1}", "0", "z/v^2"},
        {0, 1, 0, "(z/(v^2*wh[1,1]^3))*D[1,1]^{-1}", "-1/(v^3*wh[1,1])", "1/v^2"},
        {1, -1, 1, "(z*wh[1,1]*(1 - x[1]/(v*wh[1,1]^2)))*D[1,1]^{-1}", "z*wh[1,1]", "z*(z - x[1])/v^2"},
        {1, 0, 0, "(z/(v*wh[1,1])*(1 - x[1]/(v*wh[1,1]^2)))*D[1,1]^{-1}", "x[1]/(v^3*wh[1,1])", "(z - x[1])/v^2"},
        {2, -1, 0, "(z*wh[1,1]*(1 - x[1]/(v*wh[1,1]^2))*(1 - x[2]/(v*wh[1,1]^2)))*D[1,1]^{-1}",
         "z*wh[1,1] - x[1]*x[2]/(v^3*wh[1,1])", "(z - x[1])*(z - x[2])/v^2"},
    };
    return cases;
}

Divisor six_divisor(const SixCase& c) {
    return trig_young({c.blambda1, 0}, {c.bmu_plus1, -1}, {c.bmu_minus1, 0});
}

}  // namespace

TEST_CASE("six trigonometric n = 2 matrices and their quantum determinants") {
    for (const auto& c : six_cases()) {
        CAPTURE(c.blambda1);
        CAPTURE(c.bmu_plus1);
        Divisor d = six_divisor(c);
        OpMatrix t = normalize_and_check_polynomial_trig(build_lax_trig(d)).T;
        OpMatrix golden = matrix_from_rows({{kT11, c.t12}, {kT21, c.t22}}, Mode::Trig);
        CHECK(t == golden);
        CHECK(qdet2_trig(t) == parse_ratfun(c.qdet));
        CHECK(build_linear_lax_trig(d).T == t);
    }
}

TEST_CASE("trigonometric RTT and finite RTT for the six matrices") {
    for (const auto& c : six_cases()) {
        OpMatrix t = build_linear_lax_trig(six_divisor(c)).T;
        CHECK(verify_rtt(t, RKind::Trig).ok);
        FiniteSplit s = split_finite_rtt(t);
        for (const auto& rep : verify_finite_rtt(s)) CHECK(rep.ok);
    }
    FiniteSplit s = split_finite_rtt(build_linear_lax_trig(six_divisor(six_cases()[0])).T);
    CHECK(s.plus == matrix_from_rows({{"1/wh[1,1]", "wh[1,1]*D[1,1]^{-1}"}, {"0", "wh[1,1]"}}, Mode::Trig));
    CHECK(s.minus == matrix_from_rows({{"v*wh[1,1]", "0"}, {"v*wh[1,1]*D[1,1]", "0"}}, Mode::Trig));
}

TEST_CASE("n = 3 trigonometric matrices") {
    // a = (1,1)
    Divisor generic = trig_young({1, 0, 0}, {0, 0, -1}, {0, 0, 0});
    REQUIRE(generic.a() == std::vector<int>{1, 1});
    TrigLaxMatrix t = normalize_and_check_polynomial_trig(build_lax_trig(generic));
    CHECK(t.T == build_linear_lax_trig(generic).T);
    CHECK(verify_rtt(t.T, RKind::Trig).ok);

    for (auto [bl, bp, bm] : std::vector<std::tuple<std::vector<int>, std::vector<int>, std::vector<int>>>{
             {{0, 0, 0}, {0, 0, -1}, {1, 0, 0}},
             {{0, 0, 0}, {1, 0, -1}, {0, 0, 0}},
             {{0, 0, 0}, {0, -1, -1}, {1, 1, 0}},
             {{1, 1, 0}, {0, -1, -1}, {0, 0, 0}},
             {{2, 1, 0}, {-1, -1, -1}, {0, 0, 0}},
             {{1, 0, 0}, {-1, -1, -1}, {1, 1, 0}}}) {
        Divisor d = trig_young(bl, bp, bm);
        CAPTURE(d.to_json());
        TrigLaxMatrix full = normalize_and_check_polynomial_trig(build_lax_trig(d));
        CHECK(full.T == build_linear_lax_trig(d).T);
    }
}

TEST_CASE("normalization with a varpi_0 summand") {
    // -varpi_0 at x and 2 varpi_1 spread over two points: a = (1).
    Divisor d(Mode::Trig, 2,
              {{Poly::var(Var::x(1)), Coweight::varpi(2, 1)}, {Poly::var(Var::x(2)), Coweight::varpi(2, 0) * -1}},
              Coweight::from_epsilon({0, -1}), Coweight::zero(2));
    REQUIRE(d.a() == std::vector<int>{1});
    TrigLaxMatrix t = normalize_and_check_polynomial_trig(build_lax_trig(d));
    CHECK(verify_rtt(t.T, RKind::Trig).ok);
    CHECK_THROWS_AS(build_linear_lax_trig(d), NotLinearCase);
}

TEST_CASE("trigonometric limits") {
    const auto& cases = six_cases();
    auto unnormalized = [&](int k) { return build_lax_trig(six_divisor(cases[std::size_t(k)])); };

    // x_1 -> 0 moves the coefficient to mu^-.
    for (int k : {3, 4, 5}) {
        TrigLaxMatrix lim = limits_trig(unnormalized(k), 0, LimitDirection::ToZero);
        CHECK(lim.T == build_lax_trig(lim.divisor).T);
    }
    CHECK(limits_trig(unnormalized(3), 0, LimitDirection::ToZero).divisor.a() == std::vector<int>{1});

    // x_s -> infinity with column scaling.
    for (int k : {3, 4, 5}) {
        TrigLaxMatrix lim = limits_trig(unnormalized(k), cases[std::size_t(k)].blambda1 - 1,
                                        LimitDirection::ToInfinity);
        CHECK(lim.T == build_lax_trig(lim.divisor).T);
    }

    // A pure varpi_0 coefficient is divided out exactly.
    Divisor d(Mode::Trig, 2,
              {{Poly::var(Var::x(1)), Coweight::varpi(2, 1)}, {Poly::var(Var::x(2)), Coweight::varpi(2, 0)}},
              Coweight::from_epsilon({2, 1}), Coweight::zero(2));
    for (auto dir : {LimitDirection::ToZero, LimitDirection::ToInfinity}) {
        TrigLaxMatrix lim = limits_trig(build_lax_trig(d), 1, dir);
        CHECK(lim.T == build_lax_trig(lim.divisor).T);
    }
    CHECK_THROWS_AS(limits_trig(normalize_and_check_polynomial_trig(unnormalized(3)), 0, LimitDirection::ToZero),
                    SizeMismatch);
}

TEST_CASE("degeneration to the rational builder") {
    for (const auto& c : six_cases()) {
        CAPTURE(c.blambda1);
        CAPTURE(c.bmu_plus1);
        TrigLaxMatrix t = build_lax_trig(six_divisor(c));
        LaxMatrix r = degenerate_to_rational(t, 2);
        CHECK(r.T == build_lax(merged_rational_divisor(t.divisor)).T);
    }
    Divisor n3 = trig_young({1, 0, 0}, {0, 0, -1}, {0, 0, 0});
    CHECK_NOTHROW(degenerate_to_rational(build_lax_trig(n3), 2));
}

TEST_CASE("trigonometric checks reject perturbed matrices") {
    TrigLaxMatrix t = build_lax_trig(six_divisor(six_cases()[3]));
    TrigLaxMatrix bad = t;
    bad.T(1, 2) = AlgebraElement(RatFun::var(Var::v()), Mode::Trig) * bad.T(1, 2);
    CHECK_FALSE(verify_rtt(bad.T, RKind::Trig).ok);
    bad.T(2, 1) = AlgebraElement(RatFun(2), Mode::Trig) * bad.T(2, 1);
    CHECK_THROWS_AS(degenerate_to_rational(bad, 2), MismatchWithRational);
    bad = t;
    bad.T(2, 2) += AlgebraElement::term(RatFun(1), Shift::of(slot_var(Mode::Trig, 1, 1)), Mode::Trig);
    CHECK_THROWS_AS(qdet2_trig(bad.T), NotScalar);
    bad = t;
    bad.T(1, 1) = AlgebraElement(RatFun(Poly::var(Var::what(1, 1), 2) - Poly(1)).invert(), Mode::Trig) * bad.T(1, 1);
    CHECK_THROWS_AS(expand_in_eps(bad, 2), NegativeEpsPower);
}

TEST_CASE("trigonometric qdet image") {
    const Poly shifted = Poly::monomial(Monomial::of(Var::v(), -2) * Monomial::of(Var::z()));
    auto at_shifted = [&](const RatFun& f) { return f.substitute({{Var::z(), shifted}}); };
    std::vector<Divisor> divisors;
    for (const auto& c : six_cases()) divisors.push_back(six_divisor(c));
    divisors.push_back(trig_young({1, 0, 0}, {0, 0, -1}, {0, 0, 0}));
    divisors.push_back(trig_young({1, 1, 0}, {0, -1, -1}, {0, 0, 0}));
    divisors.push_back(Divisor(
        Mode::Trig, 2,
        {{Poly::var(Var::x(1)), Coweight::varpi(2, 1)}, {Poly::var(Var::x(2)), Coweight::varpi(2, 0) * -1}},
        Coweight::from_epsilon({0, -1}), Coweight::zero(2)));
    for (const Divisor& d : divisors) {
        CAPTURE(d.to_json());
        const RatFun image = qdet_image_trig(d);
        CHECK(image == qdet_closed_form_trig(d));
        if (d.n() != 2) continue;
        const RatFun norm = trig_normalization_factor(d);
        CHECK(qdet2_trig(normalize_and_check_polynomial_trig(build_lax_trig(d)).T) ==
              at_shifted(image) * norm * at_shifted(norm));
    }
}
