#include "lax/gt.hpp"

#include <json.hpp>

#include <algorithm>
#include <numeric>

#include "lax/errors.hpp"
#include "lax/lax_rational.hpp"

namespace lax {

namespace {

const std::vector<int> kNoCoordinates;

RatFun p(int i, int r) { return RatFun::var(Var::p(unsigned(i), unsigned(r))); }

AlgebraElement scalar(const RatFun& c) { return AlgebraElement(c, Mode::Rational); }

AlgebraElement shift_q(int i, int r, int m) {
    return AlgebraElement::term(RatFun(1), Shift::of(slot_var(Mode::Rational, i, r), m), Mode::Rational);
}

int parity_sign(int k) { return k % 2 == 0 ? 1 : -1; }

}  // namespace

const std::vector<int>& GTLayout::nonfrozen(int i) const {
    return i < 1 || i > n ? kNoCoordinates : J[std::size_t(i - 1)];
}

int GTLayout::slot(int i, int k) const {
    const auto& row = nonfrozen(i);
    auto it = std::find(row.begin(), row.end(), k);
    if (it == row.end())
        throw BadDiagram("(" + std::to_string(i) + "," + std::to_string(k) + ") is frozen");
    return int(it - row.begin()) + 1;
}

Poly GTLayout::y_prime(int column) const {
    const int prefix = std::accumulate(columns.begin(), columns.begin() + column, 0);
    return Poly::var(Var::y(unsigned(column))) + Poly(long(n + 1 - prefix));
}

int GTLayout::beta(int i) const {
    auto a_at = [&](int k) { return k < 1 || k >= n ? 0 : a[std::size_t(k - 1)]; };
    auto row = [&](int k) { return k < 1 || k > n ? 0 : blambda[std::size_t(k - 1)]; };
    return a_at(i - 1) + a_at(i + 1) + 1 + row(n - i) + row(n - i + 1);
}

Divisor GTLayout::divisor() const {
    return divisor_from_young(Mode::Rational, blambda, symbolic_points(int(columns.size())),
                              std::vector<int>(std::size_t(n), -1));
}

GTLayout layout(const std::vector<int>& blambda, int n) {
    if (n < 2) throw BadDiagram("rank must be at least 2");
    if (int(blambda.size()) > n) throw BadDiagram("more than n rows");
    GTLayout l;
    l.n = n;
    l.blambda = blambda;
    l.blambda.resize(std::size_t(n), 0);
    if (!std::is_sorted(l.blambda.rbegin(), l.blambda.rend()) || l.blambda.back() < 0)
        throw BadDiagram("rows must be non-negative and weakly decreasing");
    if (std::accumulate(l.blambda.begin(), l.blambda.end(), 0) != n)
        throw BadDiagram("the diagram must have n boxes");
    if (l.blambda.back() != 0) throw BadDiagram("the diagram must have fewer than n rows");
    l.columns = transpose(l.blambda);

    std::vector<int> prefix{0};
    for (int c : l.columns) prefix.push_back(prefix.back() + c);
    for (int i = 1; i <= n; ++i) {
        std::vector<int> frozen, open;
        for (int k = 1; k <= i; ++k) {
            bool is_frozen = false;
            for (std::size_t c = 1; c < prefix.size(); ++c)
                is_frozen = is_frozen || (prefix[c - 1] < k && k <= prefix[c] - (n - i));
            (is_frozen ? frozen : open).push_back(k);
        }
        l.frozen.push_back(std::move(frozen));
        l.J.push_back(std::move(open));
    }

    l.a = l.divisor().a();
    for (int i = 1; i < n; ++i)
        if (int(l.J[std::size_t(i - 1)].size()) != l.a[std::size_t(i - 1)])
            throw BadDiagram("row " + std::to_string(i) + " has " + std::to_string(l.J[std::size_t(i - 1)].size()) +
                             " free coordinates but a_i = " + std::to_string(l.a[std::size_t(i - 1)]));
    if (!l.J[std::size_t(n - 1)].empty()) throw BadDiagram("row n must be entirely frozen");
    return l;
}

const AlgebraElement& GTImages::E(int i, int j) const {
    if (i == j) return diagonal.at(std::size_t(i - 1));
    if (j == i + 1) return raising.at(std::size_t(i - 1));
    if (i == j + 1) return lowering.at(std::size_t(j - 1));
    throw SizeMismatch("only tridiagonal images are available");
}

GTImages gt_images(const GTLayout& l) {
    const int n = l.n;
    auto columns_at_least = [&](int height) {
        std::vector<int> out;
        for (int c = 1; c <= int(l.columns.size()); ++c)
            if (l.columns[std::size_t(c - 1)] >= height) out.push_back(c);
        return out;
    };
    auto pk = [&](int i, int k) { return p(i, l.slot(i, k)); };

    GTImages out;
    for (int i = 1; i <= n; ++i) {
        RatFun e(long(i - 1));
        for (int k : l.nonfrozen(i)) e += pk(i, k);
        for (int k : l.nonfrozen(i - 1)) e -= pk(i - 1, k);
        for (int c : columns_at_least(n - i + 1)) e += RatFun(l.y_prime(c)) - RatFun(long(i));
        out.diagonal.push_back(scalar(e));
    }
    // Shifts written to the left of their coefficients, as in the module
    // action; normal ordering moves them right.
    for (int i = 1; i < n; ++i) {
        AlgebraElement up, down;
        for (int k : l.nonfrozen(i)) {
            RatFun cu(-1), cd(1);
            for (int m : l.nonfrozen(i + 1)) cu *= pk(i + 1, m) - pk(i, k);
            for (int m : l.nonfrozen(i - 1)) cd *= pk(i - 1, m) - pk(i, k);
            for (int m : l.nonfrozen(i))
                if (m != k) {
                    cu *= (pk(i, m) - pk(i, k)).invert();
                    cd *= (pk(i, m) - pk(i, k)).invert();
                }
            for (int c : columns_at_least(n - i)) cu *= RatFun(l.y_prime(c)) - pk(i, k) - RatFun(long(i + 1));
            for (int c : columns_at_least(n - i + 1))
                cd *= (RatFun(l.y_prime(c)) - pk(i, k) - RatFun(long(i))).invert();
            up += shift_q(i, l.slot(i, k), 1) * scalar(cu);
            down += shift_q(i, l.slot(i, k), -1) * scalar(cd);
        }
        out.raising.push_back(std::move(up));
        out.lowering.push_back(std::move(down));
    }
    return out;
}

std::vector<std::string> failed_gl_relations(const GTImages& im) {
    const int n = int(im.diagonal.size());
    std::vector<std::string> failed;
    auto expect = [&](const std::string& name, const AlgebraElement& lhs, const AlgebraElement& rhs) {
        if (!(lhs == rhs)) failed.push_back(name);
    };
    auto tag = [](const char* head, int i, int j) {
        return std::string(head) + "(" + std::to_string(i) + "," + std::to_string(j) + ")";
    };
    auto delta = [](int i, int j) { return long(i == j ? 1 : 0); };

    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) expect(tag("[Eii,Ejj]", i, j), commutator(im.E(i, i), im.E(j, j)), {});
        for (int j = 1; j < n; ++j) {
            const AlgebraElement weight(delta(i, j) - delta(i, j + 1));
            expect(tag("[Eii,Ej,j+1]", i, j), commutator(im.E(i, i), im.E(j, j + 1)), weight * im.E(j, j + 1));
            expect(tag("[Eii,Ej+1,j]", i, j), commutator(im.E(i, i), im.E(j + 1, j)), -(weight * im.E(j + 1, j)));
        }
    }
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j) {
            const AlgebraElement want =
                i == j ? im.E(i, i) - im.E(i + 1, i + 1) : AlgebraElement();
            expect(tag("[Ei,i+1,Ej+1,j]", i, j), commutator(im.E(i, i + 1), im.E(j + 1, j)), want);
            if (std::abs(i - j) > 1) {
                expect(tag("[Ei,i+1,Ej,j+1]", i, j), commutator(im.E(i, i + 1), im.E(j, j + 1)), {});
                expect(tag("[Ei+1,i,Ej+1,j]", i, j), commutator(im.E(i + 1, i), im.E(j + 1, j)), {});
            } else if (std::abs(i - j) == 1) {
                const auto& ei = im.E(i, i + 1);
                const auto& fi = im.E(i + 1, i);
                expect(tag("serre+", i, j), commutator(ei, commutator(ei, im.E(j, j + 1))), {});
                expect(tag("serre-", i, j), commutator(fi, commutator(fi, im.E(j + 1, j))), {});
            }
        }
    return failed;
}

GammaGauge gt_gamma_gauge(const GTLayout& l) {
    const int n = l.n;
    auto a = [&](int i) { return l.a[std::size_t(i - 1)]; };
    auto pv = [](int i, int r) { return Poly::var(Var::p(unsigned(i), unsigned(r))); };
    GammaGauge s;
    for (int i = 1; i <= n - 2; ++i)
        for (int r = 1; r <= a(i); ++r)
            for (int t = 1; t <= a(i + 1); ++t) s.factors.push_back({pv(i, r) - pv(i + 1, t) + Poly(1), 1});
    for (int i = 1; i < n; ++i)
        for (int r = 1; r <= a(i); ++r) {
            for (int k = 1; k <= int(l.columns.size()); ++k)
                if (l.row_of_point(k) <= i - 1)
                    s.factors.push_back({pv(i, r) - Poly::var(Var::x(unsigned(k))) + Poly(1), 1});
            for (int t = 1; t <= a(i); ++t)
                if (t != r) s.factors.push_back({pv(i, t) - pv(i, r), -1});
        }
    return s;
}

MonomialGauge gt_monomial_gauge(const GTLayout& l) {
    MonomialGauge u;
    u.row_shift.assign(std::size_t(l.n), 0);
    u.row_sign.assign(std::size_t(l.n), 1);
    for (int i = 1; i < l.n; ++i) {
        u.row_shift[std::size_t(i)] = i;
        u.row_sign[std::size_t(i)] = parity_sign(l.blambda[std::size_t(l.n - i)]);
    }
    return u;
}

OpMatrix gauged_tridiagonal(const GTLayout& l) {
    const OpMatrix t = normalize_and_check_polynomial(build_lax(l.divisor())).T;
    const GammaGauge s = gt_gamma_gauge(l);
    const MonomialGauge u = gt_monomial_gauge(l);
    OpMatrix out(l.n, l.n);
    for (int i = 1; i <= l.n; ++i)
        for (int j = std::max(1, i - 1); j <= std::min(l.n, i + 1); ++j)
            out(i, j) = conjugate_by_gauge(u, conjugate_by_gauge(s, t(i, j)));
    return out;
}

std::optional<GTEntryCheck> GTReport::first_mismatch() const {
    for (const auto& e : entries)
        if (!e.ok) return e;
    return std::nullopt;
}

std::string GTReport::to_json() const {
    nlohmann::ordered_json j;
    j["n"] = layout.n;
    j["blambda"] = layout.blambda;
    j["a"] = layout.a;
    j["J"] = layout.J;
    j["ok"] = ok;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& e : entries)
        arr.push_back({{"entry", {e.i, e.j}}, {"ok", e.ok}, {"gauged", e.gauged}, {"expected", e.expected}});
    j["entries"] = arr;
    return j.dump(2);
}

GTReport gauge_and_compare(const std::vector<int>& blambda, int n) {
    GTReport report;
    report.layout = layout(blambda, n);
    const GTLayout& l = report.layout;
    const GTImages images = gt_images(l);
    const OpMatrix gauged = gauged_tridiagonal(l);

    std::map<Var, Poly> identify;
    for (int k = 1; k <= int(l.columns.size()); ++k) identify.emplace(Var::x(unsigned(k)), l.y_prime(k));
    const AlgebraElement z = scalar(RatFun::var(Var::z()));

    auto compare = [&](int i, int j, const AlgebraElement& expected) {
        const AlgebraElement got = gauged(i, j).substitute(identify);
        GTEntryCheck c{i, j, got.to_string(), expected.to_string(), got == expected};
        report.ok = report.ok && c.ok;
        report.entries.push_back(std::move(c));
    };
    for (int i = 1; i <= n; ++i) {
        compare(i, i, z - images.E(i, i) - AlgebraElement(1));
        if (i < n) {
            compare(i, i + 1, images.E(i, i + 1));
            compare(i + 1, i, images.E(i + 1, i));
        }
    }
    return report;
}

}  // namespace lax
