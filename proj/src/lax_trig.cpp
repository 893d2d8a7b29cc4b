#include "lax/lax_trig.hpp"

#include "lax/errors.hpp"
#include "lax/series.hpp"
#include "slot_tuples.hpp"

namespace lax {

namespace {

constexpr Mode kTrig = Mode::Trig;

RatFun zv(int e = 1) { return RatFun::var(Var::z(), e); }
RatFun vpow(int e) { return RatFun::var(Var::v(), e); }
// w_{i,r}^{e/2}
RatFun what(int i, int r, int e = 1) { return RatFun::var(Var::what(unsigned(i), unsigned(r)), e); }
RatFun w(int i, int r) { return what(i, r, 2); }
RatFun sign(int k) { return RatFun(k % 2 == 0 ? 1 : -1); }

Shift d_shift(int i, int r, int m) { return Shift::of(slot_var(kTrig, i, r), m); }

// Building blocks of the trigonometric entry formulas for a fixed divisor.
class TrigBlocks {
public:
    explicit TrigBlocks(const Divisor& d) : d_(d), summands_(d.summands()) {}

    int a(int j) const { return d_.a(j); }
    const Coweight& mu_plus() const { return d_.infinity(); }

    // prod_t w_{k,t}^{e/2}
    RatFun what_product(int k, int e) const {
        RatFun out(1);
        for (int t = 1; t <= a(k); ++t) out *= what(k, t, e);
        return out;
    }

    // W_j(y) = prod_r (1 - w_{j,r}/y), skipping slot `skip`; W_0 = W_n = 1.
    RatFun W(int j, const RatFun& y, int skip = 0) const {
        RatFun out(1);
        for (int r = 1; r <= a(j); ++r)
            if (r != skip) out *= RatFun(1) - w(j, r) / y;
        return out;
    }
    // 1 / W_{j,r}(w_{j,r}), inverted one factor at a time.
    RatFun inv_W_self(int j, int r) const {
        RatFun out(1);
        for (int s = 1; s <= a(j); ++s)
            if (s != r) out *= (RatFun(1) - w(j, s) / w(j, r)).invert();
        return out;
    }
    // Z_i(y) = prod_{i_s = i} (1 - v^{-i} x_s / y)^{gamma_s}
    RatFun Z(int i, const RatFun& y) const {
        RatFun out(1);
        for (const auto& s : summands_)
            if (s.i == i) out *= (RatFun(1) - vpow(-i) * RatFun(s.x) / y).pow(s.gamma);
        return out;
    }

    void for_tuples(int i, int j, const std::function<void(const std::vector<int>&)>& f) const {
        detail::for_each_slot_tuple(i, j, [this](int k) { return a(k); }, f);
    }

    RatFun g(int i) const {
        RatFun out = what_product(i, -1) * what_product(i - 1, 1) * zv(mu_plus().eps(i));
        out *= W(i, vpow(-i) * zv());
        for (int r = 1; r <= a(i - 1); ++r) out *= (RatFun(1) - vpow(i + 1) * w(i - 1, r) / zv()).invert();
        for (const auto& s : summands_)
            if (s.i < i) out *= (RatFun(1) - RatFun(s.x) / zv()).pow(s.gamma);
        return out;
    }

    // Tuple sum of e_{ij} without the scalar prefactor. `with_pole` keeps
    // 1 / (1 - v^i w_{i,r_i} / z).
    AlgebraElement e_sum(int i, int j, bool with_pole) const {
        AlgebraElement out(RatFun(), kTrig);
        for_tuples(i, j, [&](const std::vector<int>& r) {
            RatFun c = W(i - 1, vpow(-1) * w(i, r[i]));
            for (int k = i; k <= j - 2; ++k) c *= W(k, vpow(-1) * w(k + 1, r[k + 1]), r[k]);
            if (c.is_zero()) return;
            if (with_pole) c *= (RatFun(1) - vpow(i) * w(i, r[i]) / zv()).invert();
            Shift sh;
            for (int k = i; k <= j - 1; ++k) {
                c *= (vpow(k) * w(k, r[k])).pow(-mu_plus().alpha_value(k));
                c *= inv_W_self(k, r[k]) * Z(k, w(k, r[k]));
                sh = sh * d_shift(k, r[k], -1);
            }
            c *= w(i, r[i]) / w(j - 1, r[j - 1]);
            out += AlgebraElement::term(c, sh, kTrig);
        });
        return out;
    }

    // (-1)^{i-j+1} prod_t w_{j-1,t} prod_{k=i}^{j-2} prod_t w_{k,t}^{1/2}
    RatFun e_prefactor(int i, int j) const {
        RatFun out = sign(i - j + 1) * what_product(j - 1, 2);
        for (int k = i; k <= j - 2; ++k) out *= what_product(k, 1);
        return out;
    }

    AlgebraElement e(int i, int j) const {
        return AlgebraElement(e_prefactor(i, j) * what_product(i - 1, -1), kTrig) * e_sum(i, j, true);
    }

    // Tuple sum of f_{ji} without the scalar prefactor. `with_pole` keeps
    // 1 / (1 - z / (v^{i+2} w_{i,r_i})).
    AlgebraElement f_sum(int j, int i, bool with_pole) const {
        AlgebraElement out(RatFun(), kTrig);
        for_tuples(i, j, [&](const std::vector<int>& r) {
            RatFun c = W(j, vpow(1) * w(j - 1, r[j - 1]));
            for (int k = i + 1; k <= j - 1; ++k) c *= W(k, vpow(1) * w(k - 1, r[k - 1]), r[k]);
            if (c.is_zero()) return;
            if (with_pole) c *= (RatFun(1) - zv() / (vpow(i + 2) * w(i, r[i]))).invert();
            Shift sh;
            for (int k = i; k <= j - 1; ++k) {
                c *= inv_W_self(k, r[k]);
                sh = sh * d_shift(k, r[k], 1);
            }
            c *= w(j - 1, r[j - 1]) / w(i, r[i]);
            out += AlgebraElement::term(c, sh, kTrig);
        });
        return out;
    }

    AlgebraElement f(int j, int i) const {
        RatFun pre = sign(i - j + 1) * vpow(i - j);
        for (int k = i + 1; k <= j; ++k) pre *= what_product(k, -1);
        return AlgebraElement(pre, kTrig) * f_sum(j, i, true);
    }

    // (-v^i)^{a_i} / (-v^{i+1})^{a_{i-1}} prod_{i_s <= i-1} (-x_s)
    RatFun linear_constant(int i) const {
        RatFun out = (-vpow(i)).pow(a(i)) * (-vpow(i + 1)).pow(-a(i - 1));
        for (const auto& s : summands_)
            if (s.i <= i - 1) out *= RatFun(-s.x);
        return out;
    }

    const std::vector<Summand>& summands() const { return summands_; }

private:
    const Divisor& d_;
    std::vector<Summand> summands_;
};

void require_trig(const Divisor& d, const char* what_for) {
    if (d.mode() != kTrig) throw SignatureMismatch(std::string(what_for) + " needs a trigonometric divisor");
}

}  // namespace

GaussFactors build_gauss_factors_trig(const Divisor& d) {
    require_trig(d, "the trigonometric builder");
    const int n = d.n();
    TrigBlocks b(d);
    GaussFactors out{OpMatrix::identity(n, kTrig), OpMatrix(n, n, kTrig), OpMatrix::identity(n, kTrig)};
    for (int i = 1; i <= n; ++i) {
        out.G(i, i) = AlgebraElement(b.g(i), kTrig);
        for (int j = i + 1; j <= n; ++j) {
            out.E(i, j) = b.e(i, j);
            out.F(j, i) = b.f(j, i);
        }
    }
    return out;
}

TrigLaxMatrix build_lax_trig(const Divisor& d) {
    GaussFactors g = build_gauss_factors_trig(d);
    OpMatrix t = g.F * g.G * g.E;
    return TrigLaxMatrix{d, std::move(t), std::move(g), false};
}

RatFun trig_normalization_factor(const Divisor& d) {
    require_trig(d, "trigonometric normalization");
    RatFun out = zv(d.at_zero().eps(1));
    for (const auto& s : d.summands())
        if (s.i == 0) out *= RatFun(Poly::var(Var::z()) - s.x).pow(-s.gamma);
    return out;
}

TrigLaxMatrix normalize_and_check_polynomial_trig(const TrigLaxMatrix& t) {
    if (t.normalized) return t;
    const RatFun scale = trig_normalization_factor(t.divisor);
    TrigLaxMatrix out = t;
    out.T = t.T.map_coefficients([&](const RatFun& c) { return c * scale; });
    out.normalized = true;
    check_polynomial_in_z(out.T);
    return out;
}

TrigLaxMatrix build_linear_lax_trig(const Divisor& d) {
    if (d.mode() != kTrig) throw NotLinearCase("trigonometric fast path needs a trigonometric divisor");
    for (const auto& p : d.points())
        if (p.coweight.fundamental()[0] != 0) throw NotLinearCase("a finite point carries a varpi_0 coefficient");
    if (d.lambda().eps(1) != 0) throw NotLinearCase("blambda_n must be 0");
    if (d.at_zero().eps(1) != 0) throw NotLinearCase("bmu^-_n must be 0");
    if (d.infinity().eps(1) != 1) throw NotLinearCase("bmu^+_n must be -1");
    const int n = d.n();
    TrigBlocks b(d);
    OpMatrix t(n, n, kTrig);
    for (int i = 1; i <= n; ++i) {
        const bool plus = d.infinity().eps(i) == 1;
        const bool minus = d.at_zero().eps(i) == 0;
        RatFun diag;
        if (plus) diag += zv() * b.what_product(i, -1) * b.what_product(i - 1, 1);
        if (minus) diag += b.what_product(i, 1) * b.what_product(i - 1, -1) * b.linear_constant(i);
        t(i, i) = AlgebraElement(diag, kTrig);
        for (int j = i + 1; j <= n; ++j) {
            if (plus)
                t(i, j) = AlgebraElement(zv() * b.e_prefactor(i, j) * b.what_product(i, -1), kTrig) *
                          b.e_sum(i, j, false);
            if (minus) {
                RatFun pre = sign(i - j + 1) * vpow(i - j + 1) * b.linear_constant(i);
                for (int k = i - 1; k <= j; ++k) pre *= b.what_product(k, k == i ? 1 : -1);
                t(j, i) = AlgebraElement(pre, kTrig) * b.f_sum(j, i, false);
            }
        }
    }
    return TrigLaxMatrix{d, std::move(t), {}, true};
}

RatFun qdet2_trig(const OpMatrix& t) {
    if (t.rows() != 2 || t.cols() != 2) throw SizeMismatch("qdet2_trig is defined for n = 2");
    const Poly shifted = Poly::monomial(Monomial::of(Var::v(), -2) * Monomial::of(Var::z()));
    auto at_shifted = [&](const AlgebraElement& e) { return e.substitute({{Var::z(), shifted}}); };
    AlgebraElement q = t(1, 1) * at_shifted(t(2, 2)) -
                       AlgebraElement(vpow(-1), kTrig) * t(1, 2) * at_shifted(t(2, 1));
    return q.scalar_value();
}

RatFun qdet_image_trig(const Divisor& d) {
    require_trig(d, "qdet_image_trig");
    const GaussFactors g = build_gauss_factors_trig(d);
    RatFun out(1);
    for (int i = 1; i <= d.n(); ++i) {
        const Poly scaled = Poly::monomial(Monomial::of(Var::v(), 2 * (i - 1)) * Monomial::of(Var::z()));
        out *= g.G(i, i).scalar_value().substitute({{Var::z(), scaled}});
    }
    return out;
}

RatFun qdet_closed_form_trig(const Divisor& d) {
    require_trig(d, "qdet_closed_form_trig");
    const RatFun z = RatFun::var(Var::z());
    RatFun out(1);
    for (int i = 1; i <= d.n(); ++i) out *= (vpow(2 * (i - 1)) * z).pow(d.infinity().eps(i));
    for (const auto& s : d.summands())
        for (int k = s.i; k <= d.n() - 1; ++k) out *= (RatFun(1) - vpow(-2 * k) * RatFun(s.x) / z).pow(s.gamma);
    return out;
}

Divisor divisor_moved_to_zero(const Divisor& d, std::size_t s) {
    require_trig(d, "moving a point to zero");
    if (s >= d.points().size()) throw SizeMismatch("no finite point with index " + std::to_string(s));
    std::vector<DivisorPoint> pts = d.points();
    Coweight moved = pts[s].coweight;
    pts.erase(pts.begin() + long(s));
    return Divisor(kTrig, d.n(), std::move(pts), d.infinity(), d.at_zero() + moved);
}

TrigLaxMatrix limits_trig(const TrigLaxMatrix& t, std::size_t s, LimitDirection direction) {
    const Divisor& d = t.divisor;
    require_trig(d, "limits_trig");
    if (t.normalized) throw SizeMismatch("limits_trig expects the unnormalized matrix");
    const DivisorPoint& pt = d.points().at(s);
    if (pt.x.is_constant()) throw SizeMismatch("the limit needs a symbolic point");
    const Var x = pt.x.leading().mono.factors()[0].var;
    const auto c = pt.coweight.fundamental();
    bool pure_varpi0 = true;
    for (int i = 1; i < d.n(); ++i) pure_varpi0 = pure_varpi0 && c[std::size_t(i)] == 0;

    if (direction == LimitDirection::ToZero) {
        TrigLaxMatrix out{divisor_moved_to_zero(d, s), {}, {}, false};
        RatFun f(1);
        if (pure_varpi0) f = (RatFun(1) - RatFun(pt.x) / zv()).pow(-c[0]);
        out.T = t.T.map_coefficients([&](const RatFun& r) { return (r * f).limit_at_zero(x); });
        return out;
    }

    TrigLaxMatrix out{divisor_moved_to_infinity(d, s), {}, {}, false};
    if (pure_varpi0) {
        RatFun f = RatFun(Poly::var(Var::z()) - pt.x).pow(-c[0]);
        out.T = t.T.map_coefficients([&](const RatFun& r) { return r * f; });
        return out;
    }
    const int n = d.n();
    OpMatrix scaled(n, n, kTrig);
    for (int j = 1; j <= n; ++j) {
        RatFun col = RatFun(-pt.x).pow(pt.coweight.eps(j));
        for (int i = 1; i <= n; ++i)
            scaled(i, j) = t.T(i, j).map_coefficients([&](const RatFun& r) { return (r * col).limit_leading(x); });
    }
    out.T = std::move(scaled);
    return out;
}

Divisor merged_rational_divisor(const Divisor& d) {
    require_trig(d, "the merged divisor");
    return Divisor(Mode::Rational, d.n(), d.points(), d.infinity() + d.at_zero());
}

namespace {

// Exponent of a trigonometric Laurent monomial under the eps substitution:
// v -> 1/2, z -> z, x_s -> x_s, w_{i,r}^{1/2} -> (p_{i,r} - i/2)/2.
Poly eps_exponent(const Monomial& m) {
    Poly out;
    for (const auto& [var, e] : m.factors()) {
        switch (var.kind()) {
            case VarKind::V: out += Poly(Rational(e, 2)); break;
            case VarKind::Z:
            case VarKind::X: out += Poly::var(var) * Poly(long(e)); break;
            case VarKind::WHat: {
                Poly p = Poly::var(Var::p(var.i(), var.r(), var.factor())) - Poly(Rational(int(var.i()), 2));
                out += p * Poly(Rational(e, 2));
                break;
            }
            default:
                throw SignatureMismatch("variable " + var.name() + " has no eps-degeneration image");
        }
    }
    return out;
}

// sum_m c_m e^{eps L_m} as a series in eps, from its lowest nonzero order up
// to (but excluding) eps^{prec}; the lowest order is always kept.
Series<RatFun> exp_series(const Poly& p, int prec) {
    std::vector<std::pair<Poly, Rational>> forms;
    for (const auto& t : p.terms()) forms.emplace_back(eps_exponent(t.mono), t.coef);
    std::vector<Poly> powers(forms.size(), Poly(1));
    Rational factorial = 1;
    std::map<int, RatFun> found;
    int valuation = -1;
    for (int k = 0;; ++k) {
        if (k > 0) factorial *= k;
        if (valuation >= 0 && k >= prec) break;
        Poly c;
        for (std::size_t m = 0; m < forms.size(); ++m) {
            if (k > 0) powers[m] *= forms[m].first;
            c += powers[m] * Poly(Rational(forms[m].second / factorial));
        }
        if (!c.is_zero()) {
            if (valuation < 0) valuation = k;
            found.emplace(k, RatFun(c));
        }
    }
    Series<RatFun> s(std::max(prec, valuation + 1));
    for (const auto& [k, c] : found) s.set(k, c);
    return s;
}

// Series of a coefficient to absolute precision `prec` in eps.
Series<RatFun> eps_series(const RatFun& c, int prec) {
    if (c.is_zero()) return Series<RatFun>(prec);
    // Valuations first, so each factor is expanded exactly as far as needed.
    const int num_valuation = exp_series(c.num(), 0).valuation();
    int valuation = num_valuation;
    std::vector<int> den_valuations;
    for (const auto& [atom, k] : c.den()) {
        den_valuations.push_back(exp_series(atom.poly(), 0).valuation());
        valuation -= k * den_valuations.back();
    }
    const int rel = std::max(prec - valuation, 1);
    Series<RatFun> out = exp_series(c.num(), num_valuation + rel);
    std::size_t idx = 0;
    for (const auto& [atom, k] : c.den()) {
        Series<RatFun> a = exp_series(atom.poly(), den_valuations[idx++] + rel);
        Series<RatFun> inv = a.inverse(a.coefficient(a.valuation()).invert());
        for (int m = 0; m < k; ++m) out = out * inv;
    }
    return out.truncated(prec);
}

}  // namespace

EpsExpansion expand_in_eps(const TrigLaxMatrix& t, int order) {
    const Divisor& d = t.divisor;
    require_trig(d, "expand_in_eps");
    if (order < 1) throw SizeMismatch("the eps order must be at least 1");
    for (const auto& p : d.points())
        if (p.x.is_constant()) throw SizeMismatch("the eps expansion needs symbolic divisor points");
    const int n = d.n();
    const Coweight framing = d.infinity() + d.at_zero();
    EpsExpansion out;
    std::map<std::pair<int, int>, Series<AlgebraElement>> entries;
    int lowest = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            Series<AlgebraElement> entry(order);
            for (const auto& [sh, c] : t.T(i, j).terms()) {
                int eps_power = -framing.eps(j);
                Shift rational_shift;
                int sign_power = 0;
                for (const auto& [slot, m] : sh.exps().factors()) {
                    const int row = int(slot.i());
                    eps_power += m * (d.a(row) - d.a(row + 1));
                    sign_power += m;
                    rational_shift = rational_shift * Shift::of(Var::p(slot.i(), slot.r(), slot.factor()), -m);
                }
                Series<RatFun> cs = eps_series(c, order - eps_power).shifted(eps_power);
                const RatFun sgn = sign(sign_power);
                entry = entry + cs.map([&](const RatFun& x) {
                    return AlgebraElement::term(sgn * x, rational_shift, Mode::Rational);
                });
            }
            lowest = std::min(lowest, entry.valuation());
            entries.emplace(std::pair{i, j}, std::move(entry));
        }
    if (lowest < 0) {
        for (const auto& [ij, s] : entries)
            if (s.valuation() < 0)
                throw NegativeEpsPower("entry (" + std::to_string(ij.first) + "," + std::to_string(ij.second) +
                                       ") starts at eps^" + std::to_string(s.valuation()));
    }
    for (int k = 0; k < order; ++k) {
        OpMatrix m(n, n, Mode::Rational);
        for (const auto& [ij, s] : entries) m(ij.first, ij.second) = s.coefficient(k);
        out.orders.push_back(std::move(m));
    }
    return out;
}

LaxMatrix degenerate_to_rational(const TrigLaxMatrix& t, int order) {
    if (t.normalized) throw SizeMismatch("degenerate_to_rational expects the unnormalized matrix");
    EpsExpansion e = expand_in_eps(t, order);
    LaxMatrix expected = build_lax(merged_rational_divisor(t.divisor));
    const int n = t.divisor.n();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (!(e.orders[0](i, j) == expected.T(i, j)))
                throw MismatchWithRational("entry (" + std::to_string(i) + "," + std::to_string(j) + "): got " +
                                           e.orders[0](i, j).to_string() + ", expected " +
                                           expected.T(i, j).to_string());
    expected.T = e.orders[0];
    return expected;
}

}  // namespace lax
