#include <doctest.h>

#include "lax/errors.hpp"
#include "lax/gt.hpp"
#include "lax/lax_rational.hpp"

using namespace lax;

namespace {

const std::vector<std::pair<std::vector<int>, int>>& diagrams() {
    static const std::vector<std::pair<std::vector<int>, int>> all{
        {{2, 0}, 2}, {{2, 1, 0}, 3}, {{3, 0, 0}, 3}, {{3, 1, 0, 0}, 4}, {{2, 2, 0, 0}, 4}, {{2, 1, 1, 0}, 4}};
    return all;
}

RatFun pv(int i, int r) { return RatFun::var(Var::p(unsigned(i), unsigned(r))); }
RatFun xv(int k) { return RatFun::var(Var::x(unsigned(k))); }

}  // namespace

TEST_CASE("frozen coordinates") {
    GTLayout l = layout({2, 1, 0}, 3);
    CHECK(l.columns == std::vector<int>{2, 1});
    CHECK(l.J == std::vector<std::vector<int>>{{1}, {2}, {}});
    CHECK(l.frozen == std::vector<std::vector<int>>{{}, {1}, {1, 2, 3}});
    CHECK(l.a == std::vector<int>{1, 1});
    CHECK(l.y_prime(1) == Poly::var(Var::y(1)) + Poly(2));
    CHECK(l.y_prime(2) == Poly::var(Var::y(2)) + Poly(1));

    GTLayout two = layout({2}, 2);
    CHECK(two.a == std::vector<int>{1});
    CHECK(two.J[0] == std::vector<int>{1});

    for (const auto& [blambda, n] : diagrams()) {
        GTLayout g = layout(blambda, n);
        for (int i = 1; i < n; ++i) {
            CHECK(int(g.nonfrozen(i).size()) == g.a[std::size_t(i - 1)]);
            CHECK(g.beta(i) % 2 != 0);
        }
    }
}

TEST_CASE("diagrams outside the hypothesis are rejected") {
    CHECK_THROWS_AS(layout({1, 1}, 2), BadDiagram);
    CHECK_THROWS_AS(layout({1, 1, 1}, 3), BadDiagram);
    CHECK_THROWS_AS(layout({2, 0, 0}, 3), BadDiagram);
    CHECK_THROWS_AS(layout({1, 2, 0}, 3), BadDiagram);
    CHECK_THROWS_AS(layout({2, 1, 0, 0}, 3), BadDiagram);
}

TEST_CASE("the Gelfand-Tsetlin images satisfy the gl_n relations") {
    for (const auto& [blambda, n] : diagrams()) {
        if (n > 3) continue;
        CAPTURE(n);
        CHECK(failed_gl_relations(gt_images(layout(blambda, n))).empty());
    }
    GTImages bad = gt_images(layout({2, 1, 0}, 3));
    bad.diagonal[0] += AlgebraElement(1);
    CHECK_FALSE(failed_gl_relations(bad).empty());
}

TEST_CASE("gauged Lax entries in closed form") {
    for (const auto& [blambda, n] : diagrams()) {
        CAPTURE(n);
        GTLayout l = layout(blambda, n);
        OpMatrix g = gauged_tridiagonal(l);
        auto a = [&](int i) { return i < 1 || i >= n ? 0 : l.a[std::size_t(i - 1)]; };
        for (int i = 1; i <= n; ++i) {
            RatFun want = RatFun::var(Var::z()) + RatFun(long(i * (l.blambda[std::size_t(n - i)] - 1)));
            for (int r = 1; r <= a(i - 1); ++r) want += pv(i - 1, r);
            for (int r = 1; r <= a(i); ++r) want -= pv(i, r);
            for (int k = 1; k <= int(l.columns.size()); ++k)
                if (l.row_of_point(k) <= i - 1) want -= xv(k);
            CHECK(g(i, i) == AlgebraElement(want));
        }
        for (int i = 1; i < n; ++i) {
            AlgebraElement up;
            for (int r = 1; r <= a(i); ++r) {
                RatFun c(-1);
                for (int s = 1; s <= a(i + 1); ++s) c *= pv(i + 1, s) - pv(i, r) + RatFun(1);
                for (int s = 1; s <= a(i); ++s)
                    if (s != r) c *= (pv(i, s) - pv(i, r) + RatFun(1)).invert();
                for (int k = 1; k <= int(l.columns.size()); ++k)
                    if (l.row_of_point(k) <= i) c *= xv(k) - pv(i, r) - RatFun(long(i));
                up += AlgebraElement::term(c, Shift::of(slot_var(Mode::Rational, i, r)), Mode::Rational);
            }
            CHECK(g(i, i + 1) == up);
        }
    }
}

TEST_CASE("gauged Lax matrix equals the twisted evaluation") {
    for (const auto& [blambda, n] : diagrams()) {
        GTReport r = gauge_and_compare(blambda, n);
        CAPTURE(r.to_json());
        CHECK(r.ok);
        CHECK_FALSE(r.first_mismatch().has_value());
        CHECK(int(r.entries.size()) == 3 * n - 2);
    }
}
