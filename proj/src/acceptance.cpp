#include "lax/acceptance.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>

#include "lax/coproduct.hpp"
#include "lax/errors.hpp"
#include "lax/gt.hpp"
#include "lax/identities.hpp"
#include "lax/lax_rational.hpp"
#include "lax/lax_trig.hpp"
#include "lax/parse.hpp"
#include "lax/random_algebra.hpp"
#include "lax/rtt.hpp"

namespace lax {

namespace {

// Collects failures of one criterion; only the first few are kept verbatim.
class Tally {
public:
    void expect(bool good, const std::string& what) {
        ++checks_;
        if (good) return;
        ++failures_;
        if (failures_ <= 3) failed_.push_back(what);
    }
    bool ok() const { return failures_ == 0; }
    std::string detail() const {
        if (ok()) return std::to_string(checks_) + " checks";
        std::string out = std::to_string(failures_) + "/" + std::to_string(checks_) + " failed: ";
        for (std::size_t k = 0; k < failed_.size(); ++k) out += (k ? "; " : "") + failed_[k];
        return out;
    }
    void note(const std::string& s) { notes_ += (notes_.empty() ? "" : "; ") + s; }
    const std::string& notes() const { return notes_; }

private:
    int checks_ = 0, failures_ = 0;
    std::vector<std::string> failed_;
    std::string notes_;
};

std::string bracket(const std::vector<int>& v) {
    std::string out = "(";
    for (std::size_t k = 0; k < v.size(); ++k) out += (k ? "," : "") + std::to_string(v[k]);
    return out + ")";
}

// ------------------------------------------------------------- divisors

Divisor rational_young(const std::vector<int>& blambda, const std::vector<int>& bmu) {
    return divisor_from_young(Mode::Rational, blambda, symbolic_points(int(transpose(blambda).size())), bmu);
}

Divisor trig_young(const std::vector<int>& blambda, const std::vector<int>& plus, const std::vector<int>& minus) {
    return divisor_from_young(Mode::Trig, blambda, symbolic_points(int(transpose(blambda).size())), plus, minus);
}

std::string describe(const Divisor& d) { return d.to_json(); }

// Weakly decreasing sequences of length n with entries in [lo, hi].
void decreasing(int n, int lo, int hi, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
    if (int(prefix.size()) == n) {
        out.push_back(prefix);
        return;
    }
    const int top = prefix.empty() ? hi : prefix.back();
    for (int v = top; v >= lo; --v) {
        prefix.push_back(v);
        decreasing(n, lo, hi, prefix, out);
        prefix.pop_back();
    }
}

// Every divisor from pseudo Young diagrams with blambda_n = 0 and
// bmu_n = -1 whose a-vector is bounded by max_a. Since bmu >= -1, the
// bound a_{n-1} = blambda_1 + bmu_1 <= max_a caps every row by max_a + 1.
std::vector<Divisor> linear_rational_divisors(int n, int max_a) {
    std::vector<std::vector<int>> lambdas, mus;
    std::vector<int> scratch;
    decreasing(n, 0, max_a + 1, scratch, lambdas);
    decreasing(n, -1, max_a + 1, scratch, mus);
    std::vector<Divisor> out;
    for (const auto& bl : lambdas) {
        if (bl.back() != 0) continue;
        for (const auto& bm : mus) {
            if (bm.back() != -1) continue;
            int size = 0;
            for (int k = 0; k < n; ++k) size += bl[std::size_t(k)] + bm[std::size_t(k)];
            if (size != 0) continue;
            try {
                Divisor d = rational_young(bl, bm);
                bool small = true;
                for (int a : d.a()) small = small && a <= max_a;
                if (small) out.push_back(std::move(d));
            } catch (const NotAdmissible&) {
            }
        }
    }
    return out;
}

Divisor varpi0_rational() {
    return Divisor(Mode::Rational, 2,
                   {{Poly::var(Var::x(1)), Coweight::varpi(2, 1)}, {Poly::var(Var::x(2)), Coweight::varpi(2, 0) * -1}},
                   Coweight::from_epsilon({0, -1}));
}

Divisor varpi0_trig() {
    return Divisor(Mode::Trig, 2,
                   {{Poly::var(Var::x(1)), Coweight::varpi(2, 1)}, {Poly::var(Var::x(2)), Coweight::varpi(2, 0) * -1}},
                   Coweight::from_epsilon({0, -1}), Coweight::zero(2));
}

std::vector<Divisor> rational_acceptance_divisors() {
    std::vector<Divisor> out = linear_rational_divisors(2, 2);
    for (auto& d : linear_rational_divisors(3, 2)) out.push_back(std::move(d));
    out.push_back(Divisor(Mode::Rational, 2, {}, Coweight::alpha(2, 1) * 2));
    out.push_back(rational_young({0, 0, 0, 0}, {1, 1, -1, -1}));
    out.push_back(varpi0_rational());
    return out;
}

struct TrigGolden {
    int blambda1, plus1, minus1;
    std::string t12, t22, qdet;
};

const std::vector<TrigGolden>& trig_goldens() {
    static const std::vector<TrigGolden> all{
        {0, -1, 2, "(z*wh[1,1])*D[1,1]^{-1}", "z*wh[1,1]", "z^2/v^2"},
        {0, 0, 1, "(z/(v*wh[1,1]))*D[1,1]^{-1}", "0", "z/v^2"},
        {0, 1, 0, "(z/(v^2*wh[1,1]^3))*D[1,1]^{-1}", "-1/(v^3*wh[1,1])", "1/v^2"},
        {1, -1, 1, "(z*wh[1,1]*(1 - x[1]/(v*wh[1,1]^2)))*D[1,1]^{-1}", "z*wh[1,1]", "z*(z - x[1])/v^2"},
        {1, 0, 0, "(z/(v*wh[1,1])*(1 - x[1]/(v*wh[1,1]^2)))*D[1,1]^{-1}", "x[1]/(v^3*wh[1,1])", "(z - x[1])/v^2"},
        {2, -1, 0, "(z*wh[1,1]*(1 - x[1]/(v*wh[1,1]^2))*(1 - x[2]/(v*wh[1,1]^2)))*D[1,1]^{-1}",
         "z*wh[1,1] - x[1]*x[2]/(v^3*wh[1,1])", "(z - x[1])*(z - x[2])/v^2"},
    };
    return all;
}

Divisor trig_six(const TrigGolden& g) { return trig_young({g.blambda1, 0}, {g.plus1, -1}, {g.minus1, 0}); }

std::vector<Divisor> trig_acceptance_divisors() {
    std::vector<Divisor> out;
    for (const auto& g : trig_goldens()) out.push_back(trig_six(g));
    out.push_back(trig_young({1, 0, 0}, {0, 0, -1}, {0, 0, 0}));
    out.push_back(varpi0_trig());
    return out;
}

OpMatrix normalized(const Divisor& d) { return normalize_and_check_polynomial(build_lax(d)).T; }
OpMatrix normalized_trig(const Divisor& d) { return normalize_and_check_polynomial_trig(build_lax_trig(d)).T; }

// --------------------------------------------------------------- criteria

// The matrix with blambda = 0 and bmu = (1, 0, ..., 0, -1), written out
// entry by entry.
OpMatrix first_row_column_matrix(int n) {
    auto q_run = [](int from, int to, int sign) {
        Shift s;
        for (int k = from; k <= to; ++k) s = s * Shift::of(slot_var(Mode::Rational, k, 1), sign);
        return s;
    };
    auto p = [](int i) { return RatFun::var(Var::p(unsigned(i), 1)); };
    auto term = [](const RatFun& c, const Shift& s) { return AlgebraElement::term(c, s, Mode::Rational); };
    OpMatrix m(n, n);
    m(1, 1) = term(RatFun::var(Var::z()) - p(1), Shift{});
    for (int j = 2; j <= n; ++j) m(1, j) = term(RatFun(-1), q_run(1, j - 1, 1));
    for (int i = 2; i < n; ++i) {
        m(i, 1) = term(p(i - 1) + RatFun(1) - p(i), q_run(1, i - 1, -1));
        m(i, i) = term(RatFun(1), Shift{});
    }
    m(n, 1) = term(RatFun(1), q_run(1, n - 1, -1));
    return m;
}

void golden_rational(Tally& t) {
    t.expect(normalized(rational_young({0, 0}, {1, -1})) ==
                 matrix_from_rows({{"z - p[1,1]", "-e^{q[1,1]}"}, {"e^{q[1,1]}^{-1}", "0"}}, Mode::Rational),
             "Toda");
    t.expect(normalized(rational_young({1, 0}, {0, -1})) ==
                 matrix_from_rows({{"z - p[1,1]", "-(p[1,1] - x[1])*e^{q[1,1]}"}, {"e^{q[1,1]}^{-1}", "1"}},
                                  Mode::Rational),
             "DST");
    t.expect(normalized(rational_young({2, 0}, {-1, -1})) ==
                 matrix_from_rows({{"z - p[1,1]", "-(p[1,1] - x[1])*(p[1,1] - x[2])*e^{q[1,1]}"},
                                   {"e^{q[1,1]}^{-1}", "z + p[1,1] + 1 - x[1] - x[2]"}},
                                  Mode::Rational),
             "Heisenberg");
    for (int n : {3, 4}) {
        std::vector<int> bmu(std::size_t(n), 0);
        bmu.front() = 1;
        bmu.back() = -1;
        t.expect(normalized(rational_young(std::vector<int>(std::size_t(n), 0), bmu)) == first_row_column_matrix(n),
                 "bmu = (1,0,...,0,-1) at n = " + std::to_string(n));
    }
}

void golden_trig(Tally& t) {
    for (const auto& g : trig_goldens()) {
        const std::string tag = "case " + bracket({g.blambda1, g.plus1, g.minus1});
        const OpMatrix m = normalized_trig(trig_six(g));
        t.expect(m == matrix_from_rows({{"z/wh[1,1] - v*wh[1,1]", g.t12}, {"(-v*wh[1,1])*D[1,1]", g.t22}},
                                       Mode::Trig),
                 tag + " matrix");
        t.expect(qdet2_trig(m) == parse_ratfun(g.qdet), tag + " qdet");
    }
}

void rtt_suite(Tally& t) {
    int rational = 0;
    for (const Divisor& d : rational_acceptance_divisors()) {
        ++rational;
        t.expect(verify_rtt(normalized(d), RKind::Rational).ok, "rational " + describe(d));
    }
    int trig = 0;
    for (const Divisor& d : trig_acceptance_divisors()) {
        ++trig;
        t.expect(verify_rtt(normalized_trig(d), RKind::Trig).ok, "trig " + describe(d));
    }
    t.note(std::to_string(rational) + " rational and " + std::to_string(trig) + " trigonometric divisors");
}

void yang_baxter(Tally& t) {
    for (int n : {2, 3})
        for (RKind k : {RKind::Rational, RKind::Trig, RKind::Finite})
            t.expect(check_yang_baxter(k, n), to_string(k) + " n = " + std::to_string(n));
}

void polynomiality(Tally& t) {
    auto attempt = [&](const std::string& what, auto&& f) {
        try {
            f();
            t.expect(true, what);
        } catch (const NotPolynomial& e) {
            t.expect(false, what + ": " + e.what());
        }
    };
    for (const Divisor& d : rational_acceptance_divisors())
        attempt("rational " + describe(d), [&] { normalize_and_check_polynomial(build_lax(d)); });
    for (const Divisor& d : trig_acceptance_divisors())
        attempt("trig " + describe(d), [&] { normalize_and_check_polynomial_trig(build_lax_trig(d)); });
    // The varpi_0 point is removed exactly by the normalization.
    t.expect(normalized(varpi0_rational()) == build_lax(divisor_moved_to_infinity(varpi0_rational(), 1)).T,
             "rational varpi_0 relation");
}

void qdet(Tally& t) {
    for (const Divisor& d : rational_acceptance_divisors())
        t.expect(qdet_image(d) == qdet_closed_form(d), "rational " + describe(d));
    const Poly shifted = Poly::monomial(Monomial::of(Var::v(), -2) * Monomial::of(Var::z()));
    auto at_shifted = [&](const RatFun& f) { return f.substitute({{Var::z(), shifted}}); };
    for (const Divisor& d : trig_acceptance_divisors()) {
        const RatFun image = qdet_image_trig(d);
        t.expect(image == qdet_closed_form_trig(d), "trig " + describe(d));
        if (d.n() == 2) {
            const RatFun norm = trig_normalization_factor(d);
            t.expect(qdet2_trig(normalized_trig(d)) == at_shifted(image) * norm * at_shifted(norm),
                     "trig qdet2 " + describe(d));
        }
    }
}

void blocks(Tally& t) {
    for (const IdentityReport& rep :
         {check_kk_blocks(2), check_kk_pq_blocks(1, 1), check_pqf_blocks(1, 1), check_pqf_blocks(2, 1)})
        for (const auto& c : rep.checks) t.expect(c.ok, c.name + (c.detail.empty() ? "" : ": " + c.detail));
}

void simplifications(Tally& t) {
    for (const auto& c : simplification_cases(3)) t.expect(simplification_defect(c).is_zero(), c.to_string());
}

void limits(Tally& t) {
    int rational = 0, trig = 0;
    for (const auto& [bl, bm] : std::vector<std::pair<std::vector<int>, std::vector<int>>>{
             {{1, 0}, {0, -1}}, {{2, 0}, {-1, -1}}, {{1, 1, 0}, {0, -1, -1}}, {{2, 1, 0}, {-1, -1, -1}},
             {{1, 0, 0}, {0, 0, -1}}}) {
        const Divisor d = rational_young(bl, bm);
        const LaxMatrix lim = normalized_limit(build_lax(d), d.points().size() - 1);
        t.expect(lim.T == build_lax(lim.divisor).T, "rational " + describe(d));
        ++rational;
    }
    const Divisor pure(Mode::Rational, 2,
                       {{Poly::var(Var::x(1)), Coweight::varpi(2, 1)}, {Poly::var(Var::x(2)), Coweight::varpi(2, 0)}},
                       Coweight::from_epsilon({2, 1}));
    const LaxMatrix lim = normalized_limit(build_lax(pure), 1);
    t.expect(lim.T == build_lax(lim.divisor).T, "rational varpi_0 point");
    ++rational;

    for (std::size_t k : {3u, 4u, 5u}) {
        const TrigGolden& g = trig_goldens()[k];
        const TrigLaxMatrix m = build_lax_trig(trig_six(g));
        const TrigLaxMatrix zero = limits_trig(m, 0, LimitDirection::ToZero);
        t.expect(zero.T == build_lax_trig(zero.divisor).T, "trig to zero, case " + std::to_string(k + 1));
        const TrigLaxMatrix inf = limits_trig(m, std::size_t(g.blambda1 - 1), LimitDirection::ToInfinity);
        t.expect(inf.T == build_lax_trig(inf.divisor).T, "trig to infinity, case " + std::to_string(k + 1));
        trig += 2;
    }
    const Divisor trig_pure(Mode::Trig, 2,
                            {{Poly::var(Var::x(1)), Coweight::varpi(2, 1)}, {Poly::var(Var::x(2)), Coweight::varpi(2, 0)}},
                            Coweight::from_epsilon({2, 1}), Coweight::zero(2));
    for (auto dir : {LimitDirection::ToZero, LimitDirection::ToInfinity}) {
        const TrigLaxMatrix l = limits_trig(build_lax_trig(trig_pure), 1, dir);
        t.expect(l.T == build_lax_trig(l.divisor).T, "trig varpi_0 point");
        ++trig;
    }
    t.note(std::to_string(rational) + " rational and " + std::to_string(trig) + " trigonometric limits");
}

void coproducts(Tally& t) {
    auto at_infinity = [](const std::vector<int>& eps) {
        return Divisor(Mode::Rational, int(eps.size()), {}, Coweight::from_epsilon(eps));
    };
    const OpMatrix toda = build_lax(at_infinity({1, -1})).T;
    const OpMatrix dst = normalized(rational_young({1, 0}, {0, -1}));
    t.expect(verify_rtt(coproduct(toda, toda), RKind::Rational).ok, "RTT of Delta(Toda)");
    t.expect(verify_rtt(coproduct(dst, dst), RKind::Rational).ok, "RTT of Delta(DST)");
    auto generators = [&](const Divisor& a, const Divisor& b, const std::string& tag) {
        const CoproductReport rep = verify_coproduct_generators(a, b);
        for (const auto& c : rep.checks) t.expect(c.ok, tag + " " + c.generator);
    };
    generators(at_infinity({1, -1}), at_infinity({1, -1}), "n = 2");
    generators(at_infinity({1, 0, -1}), at_infinity({1, 0, -1}), "n = 3");
    t.expect(check_coassociativity(toda, toda, toda), "coassociativity Toda^3");
    t.expect(check_coassociativity(toda, dst, toda), "coassociativity Toda, DST, Toda");
}

void degeneration(Tally& t) {
    for (const auto& g : trig_goldens()) {
        const std::string tag = "case " + bracket({g.blambda1, g.plus1, g.minus1});
        try {
            const TrigLaxMatrix m = build_lax_trig(trig_six(g));
            const LaxMatrix r = degenerate_to_rational(m, 2);
            t.expect(r.T == build_lax(merged_rational_divisor(m.divisor)).T, tag);
        } catch (const NegativeEpsPower& e) {
            t.expect(false, tag + ": " + e.what());
        } catch (const MismatchWithRational& e) {
            t.expect(false, tag + ": " + e.what());
        }
    }
}

void gelfand_tsetlin(Tally& t) {
    // The size-two diagram with two boxes and an empty second row; its
    // transpose is (1,1). A literal (1,1) has n rows and is rejected.
    for (const auto& [bl, n] : std::vector<std::pair<std::vector<int>, int>>{{{2, 0}, 2}, {{2, 1, 0}, 3}}) {
        const GTReport rep = gauge_and_compare(bl, n);
        std::string what = "n = " + std::to_string(n) + ", blambda = " + bracket(bl);
        if (auto bad = rep.first_mismatch())
            what += ": entry (" + std::to_string(bad->i) + "," + std::to_string(bad->j) + ") " + bad->gauged +
                    " vs " + bad->expected;
        t.expect(rep.ok, what);
        t.expect(failed_gl_relations(gt_images(rep.layout)).empty(), "gl_n relations " + bracket(bl));
    }
    bool rejected = false;
    try {
        layout({1, 1}, 2);
    } catch (const BadDiagram&) {
        rejected = true;
    }
    t.expect(rejected, "blambda = (1,1) at n = 2 must be rejected (blambda_n != 0)");
    t.note("(1,1) read as blambda^t, i.e. blambda = (2,0); the literal (1,1) is rejected");
}

void hamiltonians(Tally& t) {
    const RatFun eps = RatFun::var(Var::eps());
    const OpMatrix toda = normalized(rational_young({0, 0}, {1, -1}));
    const auto chain = commuting_hamiltonians_n2(fuse(toda, toda), eps);
    t.expect(chain.size() == 3 && pairwise_commute(chain), "N = 2 Toda monodromy");
    const auto two = commuting_hamiltonians_n2(normalized(Divisor(Mode::Rational, 2, {}, Coweight::alpha(2, 1) * 2)), eps);
    t.expect(two.size() == 3 && pairwise_commute(two), "D = 2 alpha at infinity");
}

void kernel_properties(Tally& t) {
    constexpr int kCases = 200;
    for (Mode mode : {Mode::Rational, Mode::Trig}) {
        const std::string tag = mode == Mode::Rational ? "rational" : "trig";
        sampling::RandomAlgebra gen(101, mode);
        int bad = 0;
        for (int k = 0; k < kCases; ++k) {
            const auto a = gen.element(), b = gen.element(), c = gen.element();
            if (!((a * b) * c == a * (b * c)) || !(a * (b + c) == a * b + a * c) || !((a + b) * c == a * c + b * c) ||
                !(a * AlgebraElement(RatFun(1), mode) == a))
                ++bad;
        }
        t.expect(bad == 0, tag + " algebra axioms: " + std::to_string(bad) + " bad cases");

        sampling::RandomAlgebra shifts(103, mode);
        const Var slot = slot_var(mode, 1, 1);
        bad = 0;
        for (int k = 0; k < kCases; ++k) {
            const RatFun f = shifts.coefficient(), g = shifts.coefficient();
            const int j = int(shifts.rng()() % 5) - 2, m = int(shifts.rng()() % 5) - 2;
            if (!(shift(f * g, slot, j, mode) == shift(f, slot, j, mode) * shift(g, slot, j, mode)) ||
                !(shift(f + g, slot, j, mode) == shift(f, slot, j, mode) + shift(g, slot, j, mode)) ||
                !(shift(shift(f, slot, j, mode), slot, m, mode) == shift(f, slot, j + m, mode)))
                ++bad;
        }
        t.expect(bad == 0, tag + " shift automorphism: " + std::to_string(bad) + " bad cases");
    }

    const GammaGauge s{{{Poly::var(Var::p(1, 1)) - Poly::var(Var::p(1, 2)) + Poly(1), 1},
                        {Poly::var(Var::p(1, 1)) - Poly::var(Var::x(1)) + Poly(1), 1},
                        {Poly::var(Var::p(2, 1)) - Poly::var(Var::p(1, 2)), -1}}};
    const MonomialGauge u{{0, 1, 2}, {1, -1, 1}};
    sampling::RandomAlgebra gen(107, Mode::Rational);
    int bad = 0;
    for (int k = 0; k < kCases; ++k) {
        const auto a = gen.element(), b = gen.element();
        if (!(conjugate_by_gauge(s, a * b) == conjugate_by_gauge(s, a) * conjugate_by_gauge(s, b)) ||
            !(conjugate_by_gauge(u, a * b) == conjugate_by_gauge(u, a) * conjugate_by_gauge(u, b)))
            ++bad;
    }
    t.expect(bad == 0, "gauge automorphism: " + std::to_string(bad) + " bad cases");
    t.note(std::to_string(kCases) + " random cases per property");
}

struct Criterion {
    int id;
    const char* title;
    double budget;
    void (*run)(Tally&);
};

const Criterion kCriteria[] = {
    {1, "golden matrices, rational", 10, golden_rational},
    {2, "golden matrices, trigonometric", 10, golden_trig},
    {3, "RTT suite", 300, rtt_suite},
    {4, "Yang-Baxter equations", 30, yang_baxter},
    {5, "polynomiality", 0, polynomiality},
    {6, "quantum determinants", 0, qdet},
    {7, "block identities", 0, blocks},
    {8, "simplification identities", 0, simplifications},
    {9, "limits", 0, limits},
    {10, "coproduct", 300, coproducts},
    {11, "degeneration to rational", 0, degeneration},
    {12, "Gelfand-Tsetlin comparison", 0, gelfand_tsetlin},
    {13, "commuting Hamiltonians", 60, hamiltonians},
    {14, "kernel properties", 0, kernel_properties},
};

}  // namespace

std::vector<CriterionResult> run_acceptance_suite(const std::function<void(const CriterionResult&)>& on_result) {
    std::vector<CriterionResult> out;
    for (const Criterion& c : kCriteria) {
        CriterionResult r{c.id, c.title, false, {}, 0, c.budget};
        Tally tally;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.run(tally);
            r.ok = tally.ok();
            r.detail = tally.detail();
            if (!tally.notes().empty()) r.detail += "; " + tally.notes();
        } catch (const std::exception& e) {
            r.detail = std::string("raised ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (r.budget > 0 && r.seconds > r.budget) {
            r.ok = false;
            r.detail += "; over the " + std::to_string(int(r.budget)) + " s budget";
        }
        if (on_result) on_result(r);
        out.push_back(std::move(r));
    }
    return out;
}

std::string format_line(const CriterionResult& r) {
    char time[32];
    std::snprintf(time, sizeof time, "%.2f s", r.seconds);
    return std::string(r.ok ? "PASS" : "FAIL") + "  " + (r.id < 10 ? " " : "") + std::to_string(r.id) + "  " +
           r.title + " (" + time + ") - " + r.detail;
}

std::string summary_table(const std::vector<CriterionResult>& results) {
    std::ostringstream out;
    char line[160];
    std::snprintf(line, sizeof line, "%-3s %-32s %-6s %9s\n", "#", "criterion", "result", "seconds");
    out << line;
    int passed = 0;
    for (const auto& r : results) {
        std::snprintf(line, sizeof line, "%-3d %-32s %-6s %9.2f\n", r.id, r.title.c_str(), r.ok ? "pass" : "FAIL",
                      r.seconds);
        out << line;
        passed += r.ok ? 1 : 0;
    }
    out << passed << "/" << results.size() << " criteria passed\n";
    return out.str();
}

}  // namespace lax
