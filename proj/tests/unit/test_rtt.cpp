#include <doctest.h>

#include "lax/lax_rational.hpp"
#include "lax/rtt.hpp"

using namespace lax;

namespace {

Divisor young(const std::vector<int>& blambda, const std::vector<int>& bmu) {
    return divisor_from_young(Mode::Rational, blambda, symbolic_points(int(transpose(blambda).size())), bmu);
}

}  // namespace

TEST_CASE("Yang-Baxter equations") {
    for (int n : {2, 3}) {
        CHECK(check_yang_baxter(RKind::Rational, n));
        CHECK(check_yang_baxter(RKind::Trig, n));
        CHECK(check_yang_baxter(RKind::Finite, n));
    }
}

TEST_CASE("RTT for the identity and for rational Lax matrices") {
    CHECK(verify_rtt(OpMatrix::identity(2), RKind::Rational).ok);
    CHECK(verify_rtt(build_lax(young({0, 0}, {1, -1})).T, RKind::Rational).ok);
    CHECK(verify_rtt(build_lax(young({2, 0}, {-1, -1})).T, RKind::Rational).ok);
    CHECK(verify_rtt(build_lax(young({1, 1, 0}, {0, -1, -1})).T, RKind::Rational).ok);
}

TEST_CASE("a corrupted matrix fails RTT") {
    OpMatrix t = build_lax(young({1, 0}, {0, -1})).T;
    t(2, 2) = t(2, 2) + AlgebraElement(RatFun(1));
    auto rep = verify_rtt(t, RKind::Rational);
    CHECK_FALSE(rep.ok);
    CHECK(!rep.failures.empty());
}

TEST_CASE("coproduct of Toda blocks satisfies RTT") {
    OpMatrix toda = build_lax(young({0, 0}, {1, -1})).T;
    CHECK(verify_rtt(coproduct(toda, toda), RKind::Rational).ok);
}

TEST_CASE("RTT for the block example at n = 4") {
    CHECK(verify_rtt(build_lax(young({0, 0, 0, 0}, {1, 1, -1, -1})).T, RKind::Rational).ok);
}
