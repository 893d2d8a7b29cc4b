#pragma once

#include "lax/algebra.hpp"
#include "lax/random_ratfun.hpp"

namespace lax::sampling {

// Random elements of the rational or trig algebra with two rows of slots.
class RandomAlgebra {
public:
    RandomAlgebra(unsigned seed, Mode mode) : gen_(seed), mode_(mode) {}

    RatFun coefficient() {
        if (mode_ == Mode::Rational) return gen_.ratfun();
        std::uniform_int_distribution<int> e(-2, 2), count(0, 1);
        auto mono = [&] {
            Monomial m;
            for (Var v : slots_) m = m * Monomial::of(v, e(gen_.rng()));
            m = m * Monomial::of(Var::v(), e(gen_.rng()));
            m = m * Monomial::of(Var::z(), e(gen_.rng()) > 0 ? 1 : 0);
            return m;
        };
        RatFun r(Poly::monomial(mono(), gen_.coef()) + Poly::monomial(mono(), gen_.coef()));
        int d = count(gen_.rng());
        for (int j = 0; j < d; ++j)
            r = r * RatFun(Poly::monomial(mono()) - Poly::monomial(mono(), gen_.coef())).invert();
        return r;
    }

    Shift shift() {
        std::uniform_int_distribution<int> e(-1, 1);
        Shift s;
        for (Var v : slots_) s = s * Shift::of(v, e(gen_.rng()));
        return s;
    }

    AlgebraElement element() {
        std::uniform_int_distribution<int> terms(1, 3);
        AlgebraElement x = AlgebraElement::term(RatFun(), Shift{}, mode_);
        int t = terms(gen_.rng());
        for (int j = 0; j < t; ++j) x += AlgebraElement::term(coefficient(), shift(), mode_);
        return x;
    }

    std::mt19937& rng() { return gen_.rng(); }

private:
    RandomRatFun gen_;
    Mode mode_;
    std::vector<Var> slots_ = mode_ == Mode::Rational
                                  ? std::vector<Var>{Var::p(1, 1), Var::p(1, 2), Var::p(2, 1)}
                                  : std::vector<Var>{Var::what(1, 1), Var::what(1, 2), Var::what(2, 1)};
};

}  // namespace lax::sampling
