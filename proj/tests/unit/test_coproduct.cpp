#include <doctest.h>

#include "lax/coproduct.hpp"
#include "lax/errors.hpp"
#include "lax/lax_rational.hpp"
#include "lax/rtt.hpp"

using namespace lax;

namespace {

Divisor at_infinity(const std::vector<int>& eps) {
    return Divisor(Mode::Rational, int(eps.size()), {}, Coweight::from_epsilon(eps));
}

void require_ok(const CoproductReport& rep) {
    for (const auto& c : rep.checks) {
        CAPTURE(c.generator);
        CAPTURE(c.difference);
        CHECK(c.ok);
    }
    CHECK(rep.ok);
}

}  // namespace

TEST_CASE("series Gauss decomposition recovers known factors") {
    Divisor d = divisor_from_young(Mode::Rational, {1, 1, 0}, symbolic_points(1), {0, -1, -1});
    LaxMatrix t = build_lax(d);
    const int prec = 5;
    SeriesGauss g = series_gauss_decompose(expand_at_infinity(t.T, prec));
    SeriesMatrix f = expand_at_infinity(t.gauss.F, prec), gg = expand_at_infinity(t.gauss.G, prec),
                 e = expand_at_infinity(t.gauss.E, prec);
    for (int i = 1; i <= 3; ++i) {
        CHECK(agrees(g.G(i, i), gg(i, i)));
        for (int j = i + 1; j <= 3; ++j) {
            CHECK(agrees(g.E(i, j), e(i, j)));
            CHECK(agrees(g.F(j, i), f(j, i)));
        }
    }
}

TEST_CASE("singular pivots are reported") {
    OpMatrix m = matrix_from_rows({{"0", "1"}, {"1", "0"}}, Mode::Rational);
    CHECK_THROWS_AS(series_gauss_decompose(expand_at_infinity(m, 3)), SingularLeadingMode);
}

TEST_CASE("coproduct generator images, n = 2") {
    require_ok(verify_coproduct_generators(at_infinity({1, -1}), at_infinity({1, -1})));
    // alpha(mu_2) = 0: the first E mode is already mixed.
    Divisor d2(Mode::Rational, 2,
               {{Poly::var(Var::x(1)), Coweight::varpi(2, 1)}, {Poly::var(Var::x(2)), Coweight::varpi(2, 1)}},
               Coweight::from_epsilon({1, 1}));
    require_ok(verify_coproduct_generators(at_infinity({1, -1}), d2));
}

TEST_CASE("coproduct generator images, n = 3") {
    require_ok(verify_coproduct_generators(at_infinity({1, 0, -1}), at_infinity({1, 0, -1})));
}

TEST_CASE("coproduct is coassociative and preserves RTT") {
    OpMatrix toda = build_lax(at_infinity({1, -1})).T;
    OpMatrix dst = normalize_and_check_polynomial(
                       build_lax(divisor_from_young(Mode::Rational, {1, 0}, symbolic_points(1), {0, -1})))
                       .T;
    CHECK(check_coassociativity(toda, dst, toda));
    CHECK(verify_rtt(coproduct(toda, dst), RKind::Rational).ok);
    CHECK(coproduct(OpMatrix::identity(2), toda) == embed(toda, 2));
}
