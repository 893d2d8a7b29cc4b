#include "linear_factor.hpp"

#include <algorithm>
#include <vector>

namespace lax::detail {

namespace {

Poly derivative(const Poly& p, Var v) {
    std::vector<Term> out;
    for (const auto& t : p.terms()) {
        int e = t.mono.exponent(v);
        if (e == 0) continue;
        out.push_back({t.mono * Monomial::of(v, -1), t.coef * e});
    }
    return Poly::from_terms(std::move(out));
}

Rational evaluate(const Poly& p, const std::map<Var, Poly>& point) {
    return p.substitute(point).constant_value();
}

std::vector<mpz_class> divisors(mpz_class n) {
    if (n < 0) n = -n;
    std::vector<mpz_class> primes;
    std::vector<int> mult;
    for (unsigned long d = 2; d < 100000 && mpz_class(d) * d <= n; ++d) {
        if (mpz_divisible_ui_p(n.get_mpz_t(), d) == 0) continue;
        primes.emplace_back(d);
        mult.push_back(0);
        while (mpz_divisible_ui_p(n.get_mpz_t(), d) != 0) {
            n /= d;
            ++mult.back();
        }
    }
    if (n > 1) {
        primes.push_back(n);
        mult.push_back(1);
    }
    std::vector<mpz_class> out{1};
    for (std::size_t k = 0; k < primes.size(); ++k) {
        std::size_t base = out.size();
        mpz_class pk = 1;
        for (int e = 1; e <= mult[k]; ++e) {
            pk *= primes[k];
            for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
        }
    }
    return out;
}

// Distinct rational roots with multiplicities of a univariate polynomial
// given by its coefficients c[0..d].
std::vector<std::pair<Rational, int>> rational_roots(std::vector<Rational> c) {
    std::vector<std::pair<Rational, int>> roots;
    int zero_mult = 0;
    while (c.size() > 1 && c.front() == 0) {
        c.erase(c.begin());
        ++zero_mult;
    }
    if (zero_mult) roots.emplace_back(0, zero_mult);
    if (c.size() < 2) return roots;
    mpz_class l = 1;
    for (const auto& q : c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    std::vector<mpz_class> ic;
    for (const auto& q : c) ic.push_back(mpz_class(q * l));
    auto num_div = divisors(ic.front());
    auto den_div = divisors(ic.back());
    auto horner_divide = [](std::vector<Rational>& poly, const Rational& r) {
        // Returns true and replaces poly by poly/(t - r) when r is a root.
        std::vector<Rational> q(poly.size() - 1);
        Rational acc = 0;
        for (std::size_t k = poly.size(); k-- > 0;) {
            acc = acc * r + poly[k];
            if (k > 0) q[k - 1] = acc;
        }
        if (acc != 0) return false;
        poly = std::move(q);
        return true;
    };
    std::vector<Rational> rest = c;
    for (const auto& a : num_div) {
        for (const auto& b : den_div) {
            for (int sign : {1, -1}) {
                if (rest.size() < 2) return roots;
                Rational r(a * sign, b);
                r.canonicalize();
                if (std::any_of(roots.begin(), roots.end(), [&](const auto& e) { return e.first == r; }))
                    continue;
                int m = 0;
                while (rest.size() >= 2 && horner_divide(rest, r)) ++m;
                if (m) roots.emplace_back(r, m);
            }
        }
    }
    return roots;
}

}  // namespace

std::vector<Poly> linear_factor_candidates(const Poly& p) {
    std::vector<Poly> out;
    auto vs = p.variables();
    if (vs.empty()) return out;
    std::vector<Var> vars(vs.begin(), vs.end());
    const Var t = vars.front();
    std::vector<Var> others(vars.begin() + 1, vars.end());
    const int deg = p.degree(t);
    if (deg < 1) return out;

    for (int attempt = 0; attempt < 6; ++attempt) {
        std::map<Var, Poly> y0;
        for (std::size_t j = 0; j < others.size(); ++j)
            y0.emplace(others[j], Poly(long(attempt == 0 ? 0 : (attempt * 7 + 3 * long(j)) % 11 - 5)));
        auto cf = p.substitute(y0).coefficients_in(t);
        std::vector<Rational> c(std::size_t(deg) + 1);
        for (const auto& [e, q] : cf) c[std::size_t(e)] = q.constant_value();
        if (c.back() == 0) continue;
        for (const auto& [b, m] : rational_roots(c)) {
            Poly f = p;
            for (int k = 1; k < m; ++k) f = derivative(f, t);
            std::map<Var, Poly> at = y0;
            at.emplace(t, Poly(b));
            Rational ft = evaluate(derivative(f, t), at);
            if (ft == 0) continue;
            Poly form = Poly::var(t) - Poly(b);
            for (Var y : others) {
                Rational a = -evaluate(derivative(f, y), at) / ft;
                if (a != 0) form -= (Poly::var(y) - y0.at(y)) * Poly(a);
            }
            if (std::none_of(out.begin(), out.end(), [&](const Poly& o) { return o == form; }))
                out.push_back(std::move(form));
        }
    }
    return out;
}

}  // namespace lax::detail
