#include "lax/coproduct.hpp"

#include <json.hpp>

#include <algorithm>

#include "lax/errors.hpp"
#include "lax/lax_rational.hpp"

namespace lax {

namespace {

using Entry = SeriesMatrix::Entry;

// Lowest power of t = 1/z in the expansion of c at infinity.
int valuation_at_infinity(const RatFun& c, Var z) {
    int v = -c.num().degree(z);
    for (const auto& [atom, k] : c.den()) v += k * atom.poly().degree(z);
    return v;
}

// c S -> S^{-1} c^{-1}; SingularLeadingMode unless x is a single term.
AlgebraElement unit_inverse(const AlgebraElement& x) {
    if (x.terms().size() != 1)
        throw SingularLeadingMode("leading mode " + x.to_string() + " is not a single invertible term");
    const auto& [s, c] = *x.terms().begin();
    return AlgebraElement::term(RatFun(1), s.inverse(), x.mode()) * AlgebraElement(c.invert(), x.mode());
}

Entry one(int prec) { return Entry::constant(AlgebraElement(RatFun(1)), prec); }

}  // namespace

SeriesMatrix expand_at_infinity(const OpMatrix& t, int prec) {
    const Var z = Var::z();
    SeriesMatrix out(t.rows(), prec);
    for (int i = 1; i <= t.rows(); ++i)
        for (int j = 1; j <= t.cols(); ++j) {
            Entry entry(prec);
            for (const auto& [s, c] : t(i, j).terms()) {
                const int v = valuation_at_infinity(c, z);
                if (v >= prec) continue;
                Series<RatFun> cs = series_expand(c, z, Expansion::AtInfinity, prec - v);
                const Shift shift = s;
                const Mode mode = t.mode();
                entry = entry + cs.map([&](const RatFun& x) { return AlgebraElement::term(x, shift, mode); });
            }
            out(i, j) = std::move(entry);
        }
    return out;
}

SeriesGauss series_gauss_decompose(const SeriesMatrix& t) {
    const int n = t.n();
    SeriesMatrix a = t;
    SeriesGauss out{SeriesMatrix(n), SeriesMatrix(n), SeriesMatrix(n)};
    for (int k = 1; k <= n; ++k) {
        const Entry& g = a(k, k);
        if (g.is_zero()) throw SingularLeadingMode("pivot " + std::to_string(k) + " vanishes to working precision");
        const Entry ginv = g.inverse(unit_inverse(g.coefficient(g.valuation())));
        out.G(k, k) = g;
        out.F(k, k) = one(g.precision());
        out.E(k, k) = one(g.precision());
        for (int j = k + 1; j <= n; ++j) {
            out.E(k, j) = ginv * a(k, j);
            out.F(j, k) = a(j, k) * ginv;
        }
        for (int i = k + 1; i <= n; ++i)
            for (int j = k + 1; j <= n; ++j) a(i, j) = a(i, j) - a(i, k) * ginv * a(k, j);
    }
    return out;
}

std::string CoproductReport::to_json() const {
    nlohmann::ordered_json j;
    j["ok"] = ok;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json item{{"generator", c.generator}, {"ok", c.ok}};
        if (!c.ok) item["difference"] = c.difference;
        arr.push_back(std::move(item));
    }
    j["checks"] = arr;
    return j.dump(2);
}

namespace {

// Modes of the exact Gauss factors of one tensor factor.
struct FactorModes {
    SeriesMatrix F, G, E;
    unsigned factor;

    AlgebraElement placed(const AlgebraElement& x) const { return factor == 1 ? x : embed(x, factor); }
    AlgebraElement f(int j, int i, int r) const { return placed(F(j, i).coefficient(r)); }
    AlgebraElement e(int i, int j, int r) const { return placed(E(i, j).coefficient(r)); }
    AlgebraElement g(int i, int r) const { return placed(G(i, i).coefficient(r)); }
};

FactorModes factor_modes(const Divisor& d, unsigned factor, int prec) {
    GaussFactors gf = build_gauss_factors(d);
    return FactorModes{expand_at_infinity(gf.F, prec), expand_at_infinity(gf.G, prec), expand_at_infinity(gf.E, prec),
                       factor};
}

class Checker {
public:
    void expect(const std::string& name, const AlgebraElement& got, const AlgebraElement& want) {
        GeneratorCheck c{name, got == want, {}};
        if (!c.ok) c.difference = (got - want).to_string();
        report.ok = report.ok && c.ok;
        report.checks.push_back(std::move(c));
    }
    CoproductReport report;
};

std::string mode_name(const std::string& gen, int i, int r) {
    return gen + "_" + std::to_string(i) + "^(" + std::to_string(r) + ")";
}

CoproductReport coproduct_report(const Divisor& d1, const Divisor& d2, int order, int prec);

}  // namespace

CoproductReport verify_coproduct_generators(const Divisor& d1, const Divisor& d2, int order) {
    if (d1.mode() != Mode::Rational || d2.mode() != Mode::Rational)
        throw SignatureMismatch("generator-level coproduct checks use rational divisors");
    if (d1.n() != d2.n()) throw SignatureMismatch("coproduct of divisors of different rank");
    if (order < 2) throw SizeMismatch("at least two modes are needed");
    const int n = d1.n();
    const Coweight &mu1 = d1.infinity(), &mu2 = d2.infinity();
    const Coweight mu = mu1 + mu2;

    int needed = 0;
    for (int i = 1; i <= n; ++i) needed = std::max(needed, -mu.eps(i) + 3);
    for (int i = 1; i < n; ++i) needed = std::max({needed, mu1.alpha_value(i) + 2, mu2.alpha_value(i) + 2});
    // Pivot inversions lose precision; retry with more terms until every
    // requested mode is available.
    for (int prec = needed;; prec += 2) {
        try {
            return coproduct_report(d1, d2, order, prec);
        } catch (const PrecisionExhausted&) {
            if (prec > needed + 8 * n + 16) throw;
        }
    }
}

namespace {

CoproductReport coproduct_report(const Divisor& d1, const Divisor& d2, int order, int prec) {
    const int n = d1.n();
    const Coweight &mu1 = d1.infinity(), &mu2 = d2.infinity();
    const Coweight mu = mu1 + mu2;
    const FactorModes m1 = factor_modes(d1, 1, prec), m2 = factor_modes(d2, 2, prec);
    const OpMatrix delta = fuse(build_lax(d1).T, build_lax(d2).T, 1);
    const SeriesGauss dg = series_gauss_decompose(expand_at_infinity(delta, prec));
    const AlgebraElement unit(RatFun(1));

    Checker chk;
    // Gauss-mode contract for the shift mu1 + mu2.
    for (int i = 1; i <= n; ++i) {
        chk.expect(mode_name("leading D", i, -mu.eps(i)), dg.G(i, i).coefficient(-mu.eps(i)), unit);
        for (int r = -mu.eps(i) - order; r < -mu.eps(i); ++r)
            chk.expect(mode_name("D", i, r), dg.G(i, i).coefficient(r), AlgebraElement());
        for (int j = i + 1; j <= n; ++j) {
            chk.expect("e_" + std::to_string(i) + std::to_string(j) + "^(0)", dg.E(i, j).coefficient(0),
                       AlgebraElement());
            chk.expect("f_" + std::to_string(j) + std::to_string(i) + "^(0)", dg.F(j, i).coefficient(0),
                       AlgebraElement());
        }
    }

    for (int i = 1; i < n; ++i) {
        const int a1 = mu1.alpha_value(i), a2 = mu2.alpha_value(i);
        for (int r = 1; r <= a1; ++r) chk.expect(mode_name("F", i, r), dg.F(i + 1, i).coefficient(r), m1.f(i + 1, i, r));
        chk.expect(mode_name("F", i, a1 + 1), dg.F(i + 1, i).coefficient(a1 + 1),
                   m1.f(i + 1, i, a1 + 1) + m2.f(i + 1, i, 1));
        for (int r = 1; r <= a2; ++r) chk.expect(mode_name("E", i, r), dg.E(i, i + 1).coefficient(r), m2.e(i, i + 1, r));
        chk.expect(mode_name("E", i, a2 + 1), dg.E(i, i + 1).coefficient(a2 + 1),
                   m2.e(i, i + 1, a2 + 1) + m1.e(i, i + 1, 1));
    }

    // E_gamma = [E_{b-1}, ..., [E_{a+1}, E_a]...] in factor 1 and
    // F_gamma = [...[F_a, F_{a+1}], ..., F_{b-1}] in factor 2.
    auto e_root = [&](int a, int b) {
        AlgebraElement x = m1.e(a, a + 1, 1);
        for (int k = a + 1; k < b; ++k) x = commutator(m1.e(k, k + 1, 1), x);
        return x;
    };
    auto f_root = [&](int a, int b) {
        AlgebraElement x = m2.f(a + 1, a, 1);
        for (int k = a + 1; k < b; ++k) x = commutator(x, m2.f(k + 1, k, 1));
        return x;
    };
    for (int a = 1; a < n; ++a)
        for (int b = a + 2; b <= n; ++b) {
            const std::string tag = std::to_string(a) + std::to_string(b);
            chk.expect("e_" + tag + "^(1) bracket", m1.e(a, b, 1), e_root(a, b));
            chk.expect("f_" + std::to_string(b) + std::to_string(a) + "^(1) bracket", m2.f(b, a, 1), f_root(a, b));
        }

    for (int i = 1; i <= n; ++i) {
        const int s = -mu.eps(i), s1 = -mu1.eps(i), s2 = -mu2.eps(i);
        chk.expect(mode_name("D", i, s + 1), dg.G(i, i).coefficient(s + 1), m1.g(i, s1 + 1) + m2.g(i, s2 + 1));
        AlgebraElement want = m1.g(i, s1 + 2) + m2.g(i, s2 + 2) + m1.g(i, s1 + 1) * m2.g(i, s2 + 1);
        for (int a = 1; a < n; ++a)
            for (int b = a + 1; b <= n; ++b) {
                const int weight = (i == a ? 1 : 0) - (i == b ? 1 : 0);
                if (weight != 0) want += AlgebraElement(RatFun(weight)) * e_root(a, b) * f_root(a, b);
            }
        chk.expect(mode_name("D", i, s + 2), dg.G(i, i).coefficient(s + 2), want);
    }
    return chk.report;
}

}  // namespace

bool check_coassociativity(const OpMatrix& t1, const OpMatrix& t2, const OpMatrix& t3) {
    return fuse(fuse(t1, t2, 1), t3, 2) == fuse(t1, fuse(t2, t3, 1), 1);
}

}  // namespace lax
