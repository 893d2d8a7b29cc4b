#include "lax/lax_rational.hpp"

#include <functional>

#include "lax/errors.hpp"
#include "slot_tuples.hpp"

namespace lax {

namespace {

Poly P(int i, int r) { return Poly::var(Var::p(unsigned(i), unsigned(r))); }
Poly Zv() { return Poly::var(Var::z()); }

// Building blocks of the entry formulas for a fixed divisor.
class RationalBlocks {
public:
    explicit RationalBlocks(const Divisor& d) : d_(d), summands_(d.summands()) {}

    int a(int j) const { return d_.a(j); }

    // P_j(y) = prod_r (y - p_{j,r}); P_0 = P_n = 1.
    Poly Pj(int j, const Poly& y) const {
        Poly out(1);
        for (int r = 1; r <= a(j); ++r) out *= y - P(j, r);
        return out;
    }
    // P_{j,r}(y): the same product without slot r.
    Poly Pjr(int j, int r, const Poly& y) const {
        Poly out(1);
        for (int s = 1; s <= a(j); ++s)
            if (s != r) out *= y - P(j, s);
        return out;
    }
    // 1 / P_{j,r}(p_{j,r})
    RatFun inv_Pjr_self(int j, int r) const {
        RatFun out(1);
        for (int s = 1; s <= a(j); ++s)
            if (s != r) out = out * RatFun(P(j, r) - P(j, s)).invert();
        return out;
    }
    // Z_i(y) = prod_{i_s = i} (y - x_s)^{gamma_s}
    RatFun Zi(int i, const Poly& y) const {
        RatFun out(1);
        for (const auto& s : summands_)
            if (s.i == i) out = out * RatFun(y - s.x).pow(s.gamma);
        return out;
    }

    void for_tuples(int i, int j, const std::function<void(const std::vector<int>&)>& f) const {
        detail::for_each_slot_tuple(i, j, [this](int k) { return a(k); }, f);
    }

    RatFun g(int i) const {
        RatFun out = RatFun(Pj(i, Zv())) / RatFun(Pj(i - 1, Zv() - Poly(1)));
        for (int k = 0; k < i; ++k) out = out * Zi(k, Zv());
        return out;
    }

    // Sum over tuples of the e_{ij} summands; `with_pole` keeps the
    // 1 / (z - p_{i,r_i}) factor.
    AlgebraElement e(int i, int j, bool with_pole) const {
        AlgebraElement out(RatFun(), Mode::Rational);
        for_tuples(i, j, [&](const std::vector<int>& r) {
            Poly num = Pj(i - 1, P(i, r[i]) - Poly(1));
            for (int k = i; k <= j - 2; ++k) num *= Pjr(k, r[k], P(k + 1, r[k + 1]) - Poly(1));
            RatFun c(num);
            if (c.is_zero()) return;
            if (with_pole) c = c * RatFun(Zv() - P(i, r[i])).invert();
            Monomial shift;
            for (int k = i; k <= j - 1; ++k) {
                c = c * inv_Pjr_self(k, r[k]) * Zi(k, P(k, r[k]));
                shift = shift * Monomial::of(Var::p(unsigned(k), unsigned(r[k])));
            }
            out += AlgebraElement::term(-c, shift_of(shift), Mode::Rational);
        });
        return out;
    }

    AlgebraElement f(int j, int i, bool with_pole) const {
        AlgebraElement out(RatFun(), Mode::Rational);
        for_tuples(i, j, [&](const std::vector<int>& r) {
            Poly num = Pj(j, P(j - 1, r[j - 1]) + Poly(1));
            for (int k = i + 1; k <= j - 1; ++k) num *= Pjr(k, r[k], P(k - 1, r[k - 1]) + Poly(1));
            RatFun c(num);
            if (c.is_zero()) return;
            if (with_pole) c = c * RatFun(Zv() - P(i, r[i]) - Poly(1)).invert();
            Monomial shift;
            for (int k = i; k <= j - 1; ++k) {
                c = c * inv_Pjr_self(k, r[k]);
                shift = shift * Monomial::of(Var::p(unsigned(k), unsigned(r[k])), -1);
            }
            out += AlgebraElement::term(c, shift_of(shift), Mode::Rational);
        });
        return out;
    }

    const std::vector<Summand>& summands() const { return summands_; }

private:
    static Shift shift_of(const Monomial& m) {
        Shift s;
        for (const auto& f : m.factors()) s = s * Shift::of(f.var, f.exp);
        return s;
    }

    const Divisor& d_;
    std::vector<Summand> summands_;
};

}  // namespace

Signature signature_of(const Divisor& d) { return Signature{d.mode(), d.n(), {d.a()}}; }

GaussFactors build_gauss_factors(const Divisor& d) {
    if (d.mode() != Mode::Rational) throw SignatureMismatch("rational builder called on a trig divisor");
    const int n = d.n();
    RationalBlocks b(d);
    GaussFactors out{OpMatrix::identity(n), OpMatrix(n, n), OpMatrix::identity(n)};
    for (int i = 1; i <= n; ++i) {
        out.G(i, i) = AlgebraElement(b.g(i));
        for (int j = i + 1; j <= n; ++j) {
            out.E(i, j) = b.e(i, j, true);
            out.F(j, i) = b.f(j, i, true);
        }
    }
    return out;
}

LaxMatrix build_lax(const Divisor& d) {
    GaussFactors g = build_gauss_factors(d);
    OpMatrix t = g.F * g.G * g.E;
    return LaxMatrix{d, std::move(t), std::move(g), false};
}

void check_polynomial_in_z(const OpMatrix& m) {
    for (int i = 1; i <= m.rows(); ++i)
        for (int j = 1; j <= m.cols(); ++j)
            for (const auto& [s, c] : m(i, j).terms()) {
                if (c.is_polynomial_in(Var::z())) continue;
                std::string atom;
                for (const auto& [a, k] : c.den())
                    if (a.involves(Var::z())) atom = a.poly().to_string();
                throw NotPolynomial("entry (" + std::to_string(i) + "," + std::to_string(j) + ") keeps the pole " +
                                    (atom.empty() ? "z^-1" : "(" + atom + ")") + " in " + c.to_string());
            }
}

LaxMatrix normalize_and_check_polynomial(const LaxMatrix& t) {
    if (t.normalized) return t;
    RationalBlocks b(t.divisor);
    RatFun scale = b.Zi(0, Zv()).invert();
    LaxMatrix out = t;
    out.T = t.T.map_coefficients([&](const RatFun& c) { return c * scale; });
    out.normalized = true;
    check_polynomial_in_z(out.T);
    return out;
}

LaxMatrix build_linear_lax(const Divisor& d) {
    if (d.mode() != Mode::Rational) throw NotLinearCase("rational fast path needs a rational divisor");
    const int n = d.n();
    for (const auto& p : d.points())
        if (p.coweight.fundamental()[0] != 0) throw NotLinearCase("a finite point carries a varpi_0 coefficient");
    if (d.lambda().eps(1) != 0) throw NotLinearCase("blambda_n must be 0");
    const Coweight& mu = d.infinity();
    if (mu.eps(1) != 1) throw NotLinearCase("bmu_n must be -1");
    int m = 0, m2 = 0;
    for (int i = 1; i <= n; ++i) {
        if (mu.eps(i) == 1) m = i;
        if (mu.eps(i) >= 0) m2 = i;
    }
    RationalBlocks b(d);
    OpMatrix t(n, n);
    for (int i = 1; i <= n; ++i) {
        if (i <= m) {
            Poly diag = Zv();
            for (int r = 1; r <= d.a(i - 1); ++r) diag += P(i - 1, r) + Poly(1);
            for (int r = 1; r <= d.a(i); ++r) diag -= P(i, r);
            for (const auto& p : d.points()) diag += p.x * Poly(long(p.coweight.eps(i)));
            t(i, i) = AlgebraElement(RatFun(diag));
            for (int j = i + 1; j <= n; ++j) {
                t(i, j) = b.e(i, j, false);
                t(j, i) = b.f(j, i, false);
            }
        } else if (i <= m2) {
            t(i, i) = AlgebraElement(RatFun(1));
        }
    }
    return LaxMatrix{d, std::move(t), {}, true};
}

RatFun qdet_image(const Divisor& d) {
    GaussFactors g = build_gauss_factors(d);
    RatFun out(1);
    for (int i = 1; i <= d.n(); ++i) {
        RatFun gi = g.G(i, i).scalar_value();
        out = out * gi.substitute({{Var::z(), Zv() + Poly(long(i - 1))}});
    }
    return out;
}

RatFun qdet_closed_form(const Divisor& d) {
    RatFun out(1);
    for (const auto& s : d.summands())
        for (int k = s.i; k <= d.n() - 1; ++k) out = out * RatFun(Zv() - s.x + Poly(long(k))).pow(s.gamma);
    return out;
}

Divisor divisor_moved_to_infinity(const Divisor& d, std::size_t s) {
    if (s >= d.points().size()) throw SizeMismatch("no finite point with index " + std::to_string(s));
    std::vector<DivisorPoint> pts = d.points();
    Coweight moved = pts[s].coweight;
    pts.erase(pts.begin() + long(s));
    std::optional<Coweight> zero;
    if (d.mode() == Mode::Trig) zero = d.at_zero();
    return Divisor(d.mode(), d.n(), std::move(pts), d.infinity() + moved, zero);
}

LaxMatrix normalized_limit(const LaxMatrix& t, std::size_t s) {
    const Divisor& d = t.divisor;
    if (t.normalized) throw SizeMismatch("normalized_limit expects the unnormalized matrix");
    const DivisorPoint& pt = d.points().at(s);
    if (pt.x.is_constant()) throw SizeMismatch("the limit needs a symbolic point");
    const Var x = pt.x.leading().mono.factors()[0].var;
    Divisor moved = divisor_moved_to_infinity(d, s);
    const auto c = pt.coweight.fundamental();
    bool pure_varpi0 = true;
    for (int i = 1; i < d.n(); ++i) pure_varpi0 = pure_varpi0 && c[std::size_t(i)] == 0;
    LaxMatrix out{moved, {}, {}, false};
    if (pure_varpi0) {
        RatFun f = RatFun(Zv() - pt.x).pow(-c[0]);
        out.T = t.T.map_coefficients([&](const RatFun& r) { return r * f; });
        return out;
    }
    const int n = d.n();
    OpMatrix scaled(n, n);
    for (int j = 1; j <= n; ++j) {
        RatFun col = RatFun(-pt.x).pow(pt.coweight.eps(j));
        for (int i = 1; i <= n; ++i)
            scaled(i, j) = t.T(i, j).map_coefficients([&](const RatFun& r) { return (r * col).limit_leading(x); });
    }
    out.T = std::move(scaled);
    return out;
}

OpMatrix fuse(const OpMatrix& a, const OpMatrix& b, unsigned left_factors) {
    if (a.cols() != b.rows()) throw SignatureMismatch("fusing matrices of different sizes");
    OpMatrix right = b.map([&](const AlgebraElement& x) {
        return x.map_factors([&](unsigned f) { return f + left_factors; });
    });
    return a * right;
}

int z_degree(const AlgebraElement& e, Var z) {
    int deg = -1;
    for (const auto& [s, c] : e.terms()) {
        if (!c.is_polynomial_in(z)) throw NotPolynomial("coefficient " + c.to_string() + " is not polynomial in z");
        deg = std::max(deg, c.num().degree(z));
    }
    return deg;
}

AlgebraElement z_coefficient(const AlgebraElement& e, int k, Var z) {
    return e.map_coefficients([&](const RatFun& c) {
        if (!c.is_polynomial_in(z)) throw NotPolynomial("coefficient " + c.to_string() + " is not polynomial in z");
        auto coeffs = c.num().coefficients_in(z);
        auto it = coeffs.find(k);
        return it == coeffs.end() ? RatFun() : RatFun::make(it->second, c.den());
    });
}

std::vector<AlgebraElement> commuting_hamiltonians_n2(const OpMatrix& t, const RatFun& eps) {
    if (t.rows() != 2 || t.cols() != 2) throw SizeMismatch("commuting Hamiltonians are defined for n = 2");
    AlgebraElement gen = t(1, 1) + AlgebraElement(eps) * t(2, 2);
    const int deg = z_degree(gen);
    std::vector<AlgebraElement> out;
    for (int k = 0; k <= deg; ++k) out.push_back(z_coefficient(gen, k));
    return out;
}

bool pairwise_commute(const std::vector<AlgebraElement>& xs) {
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j)
            if (!commutator(xs[i], xs[j]).is_zero()) return false;
    return true;
}

}  // namespace lax
