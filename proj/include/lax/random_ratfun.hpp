#pragma once

#include <random>
#include <vector>

#include "lax/ratfun.hpp"

namespace lax::sampling {

// Small random rational functions in a handful of variables whose
// denominators are products of linear forms.
class RandomRatFun {
public:
    explicit RandomRatFun(unsigned seed) : rng_(seed) {}

    Rational coef() {
        std::uniform_int_distribution<int> n(-5, 5), d(1, 3);
        int a = n(rng_);
        if (a == 0) a = 1;
        Rational q(a, d(rng_));
        q.canonicalize();
        return q;
    }

    Poly linear() {
        std::uniform_int_distribution<std::size_t> pick(0, vars_.size() - 1);
        std::uniform_int_distribution<int> len(1, 3);
        Poly p = Poly(coef());
        int k = len(rng_);
        for (int j = 0; j < k; ++j) p += Poly::var(vars_[pick(rng_)]) * Poly(coef());
        if (p.is_constant()) p += Poly::var(vars_[0]);
        return p;
    }

    Poly poly() {
        std::uniform_int_distribution<int> factors(0, 2), terms(1, 3);
        Poly p;
        int t = terms(rng_);
        for (int j = 0; j < t; ++j) {
            Poly m = Poly(coef());
            int f = factors(rng_);
            for (int k = 0; k < f; ++k) m *= linear();
            p += m;
        }
        return p;
    }

    // Coefficient ring used for algebra elements: includes the rational slots.
    RatFun ratfun() {
        std::uniform_int_distribution<int> dens(0, 2);
        RatFun r(poly());
        int d = dens(rng_);
        for (int j = 0; j < d; ++j) r = r * RatFun(linear()).invert();
        return r;
    }

    // Nonzero and invertible: numerator and denominator are products of
    // linear forms.
    RatFun invertible() {
        std::uniform_int_distribution<int> count(0, 2);
        Poly num(coef());
        int a = count(rng_);
        for (int j = 0; j < a; ++j) num *= linear();
        RatFun r(num);
        int d = count(rng_);
        for (int j = 0; j < d; ++j) r = r * RatFun(linear()).invert();
        return r;
    }

    std::mt19937& rng() { return rng_; }

private:
    std::mt19937 rng_;
    std::vector<Var> vars_{Var::z(), Var::p(1, 1), Var::p(1, 2), Var::x(1)};
};

}  // namespace lax::sampling
