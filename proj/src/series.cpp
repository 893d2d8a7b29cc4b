#include "lax/series.hpp"

namespace lax {

namespace {

// Exact series of a polynomial (Laurent in var) in t, with precision prec.
Series<RatFun> poly_series(const Poly& p, Var var, Expansion where, int prec) {
    Series<RatFun> s(prec);
    for (const auto& [deg, c] : p.coefficients_in(var)) s.set(where == Expansion::AtInfinity ? -deg : deg, RatFun(c));
    return s;
}

}  // namespace

Series<RatFun> series_expand(const RatFun& f, Var var, Expansion where, int order) {
    constexpr int exact = INT_MAX / 8;
    if (f.is_zero()) return Series<RatFun>(order);
    Series<RatFun> num = poly_series(f.num(), var, where, exact);
    Series<RatFun> inv_den = Series<RatFun>::constant(RatFun(1), exact);
    for (const auto& [atom, k] : f.den()) {
        Series<RatFun> a = poly_series(atom.poly(), var, where, exact);
        const int v = a.valuation();
        Series<RatFun> ai = a.truncated(v + order).inverse(a.coefficient(v).invert());
        for (int m = 0; m < k; ++m) inv_den = inv_den * ai;
    }
    Series<RatFun> out = num * inv_den;
    const int v = num.valuation() + inv_den.valuation();
    return out.truncated(v + order);
}

}  // namespace lax
