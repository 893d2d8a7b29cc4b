#include "lax/identities.hpp"

#include "lax/lax_rational.hpp"

namespace lax {

namespace {

RatFun b(int t) { return RatFun::var(Var::p(1, unsigned(t))); }
RatFun c(int t) { return RatFun::var(Var::p(2, unsigned(t))); }

// prod_{t <= size, t != skip} (u - var(t))
RatFun partial_product(RatFun (*var)(int), int size, int skip, const RatFun& u) {
    RatFun out(1);
    for (int t = 1; t <= size; ++t)
        if (t != skip) out *= u - var(t);
    return out;
}

}  // namespace

std::string SimplificationCase::to_string() const {
    return "simplification " + std::to_string(identity) + " (a_{l-1}=" + std::to_string(a_prev) +
           ", a_l=" + std::to_string(a_cur) + ", r'=" + std::to_string(r) + ", s'=" + std::to_string(s) + ")";
}

RatFun simplification_defect(const SimplificationCase& k) {
    RatFun sum;
    for (int r = 1; r <= k.a_cur; ++r) {
        // P_{l-1} for identity 6, P_{l-1,r'} otherwise.
        RatFun term = partial_product(b, k.a_prev, k.identity == 6 ? 0 : k.r, c(r) - RatFun(1)) *
                      partial_product(c, k.a_cur, r, c(r)).invert();
        if (k.identity == 1 || k.identity == 3) term *= (RatFun(1) + b(k.s) - c(r)).invert();
        if (k.identity == 2 || k.identity == 4) term *= (b(k.r) - c(r)).invert();
        sum += term;
    }
    switch (k.identity) {
        case 1: return RatFun(1) + sum;
        case 2:
            return RatFun(1) + sum - partial_product(b, k.a_prev, k.r, b(k.r) - RatFun(1)) *
                                         partial_product(c, k.a_cur, 0, b(k.r)).invert();
        case 4:
            return sum - partial_product(b, k.a_prev, k.r, b(k.r) - RatFun(1)) *
                             partial_product(c, k.a_cur, 0, b(k.r)).invert();
        case 6: return sum - RatFun(1);
        default: return sum;
    }
}

std::vector<SimplificationCase> simplification_cases(int max_a) {
    std::vector<SimplificationCase> out;
    auto add_all = [&](int id, int a_prev, int a_cur, bool needs_s) {
        if (a_prev < 1 || a_cur < 1) return;
        for (int r = 1; r <= a_prev; ++r) {
            if (!needs_s) {
                out.push_back({id, a_prev, a_cur, r, 0});
                continue;
            }
            for (int s = 1; s <= a_prev; ++s)
                if (s != r) out.push_back({id, a_prev, a_cur, r, s});
        }
    };
    for (int a = 1; a <= max_a; ++a) {
        add_all(1, a + 1, a, true);
        add_all(2, a + 1, a, true);
        for (int prev : {a - 1, a}) {
            add_all(3, prev, a, true);
            add_all(4, prev, a, true);
        }
        add_all(5, a - 1, a, false);
        add_all(6, a - 1, a, false);
    }
    return out;
}

void IdentityReport::add(std::string name, bool good, std::string detail) {
    ok = ok && good;
    checks.push_back({std::move(name), good, good ? std::string() : std::move(detail)});
}

namespace {

bool z_free(const OpMatrix& m) {
    for (int i = 1; i <= m.rows(); ++i)
        for (int j = 1; j <= m.cols(); ++j)
            if (!(z_coefficient(m(i, j), 0) == m(i, j))) return false;
    return true;
}

// Entries pairwise commute.
bool commuting_entries(const OpMatrix& m) {
    std::vector<AlgebraElement> all;
    for (int i = 1; i <= m.rows(); ++i)
        for (int j = 1; j <= m.cols(); ++j) all.push_back(m(i, j));
    return pairwise_commute(all);
}

// [P_ij, Q_j'i'] = delta_ii' delta_jj' with P of size s x r, Q of size r x s.
bool canonical_pairs(const OpMatrix& p, const OpMatrix& q) {
    for (int i = 1; i <= p.rows(); ++i)
        for (int j = 1; j <= p.cols(); ++j)
            for (int i2 = 1; i2 <= p.rows(); ++i2)
                for (int j2 = 1; j2 <= p.cols(); ++j2) {
                    const AlgebraElement want(long(i == i2 && j == j2 ? 1 : 0));
                    if (!(commutator(p(i, j), q(j2, i2)) == want)) return false;
                }
    return true;
}

OpMatrix scalar_identity(int n, const RatFun& c) {
    OpMatrix out(n, n);
    for (int i = 1; i <= n; ++i) out(i, i) = AlgebraElement(c);
    return out;
}

OpMatrix negated(const OpMatrix& m) {
    return m.map([](const AlgebraElement& e) { return -e; });
}

OpMatrix lax_of(const Divisor& d) { return normalize_and_check_polynomial(build_lax(d)).T; }

std::string shape(int r, int s) { return "(r=" + std::to_string(r) + ", s=" + std::to_string(s) + ")"; }

}  // namespace

IdentityReport check_kk_blocks(int r) {
    const int n = 2 * r;
    std::vector<int> bmu(std::size_t(n), -1);
    for (int i = 0; i < r; ++i) bmu[std::size_t(i)] = 1;
    const OpMatrix t = lax_of(divisor_from_young(Mode::Rational, std::vector<int>(std::size_t(n), 0), {}, bmu));
    const RatFun z = RatFun::var(Var::z());
    const OpMatrix f = scalar_identity(r, z) - t.block(1, 1, r, r);
    const OpMatrix kbar = t.block(1, r + 1, r, r), k = t.block(r + 1, 1, r, r);
    const std::string tag = " (r=" + std::to_string(r) + ")";

    IdentityReport rep;
    rep.add("block shape" + tag, z_free(f) && z_free(k) && z_free(kbar) && t.block(r + 1, r + 1, r, r).is_zero());
    rep.add("K Kbar = -I" + tag, k * kbar == scalar_identity(r, RatFun(-1)), (k * kbar).to_string());
    rep.add("K entries commute" + tag, commuting_entries(k));
    rep.add("Kbar entries commute" + tag, commuting_entries(kbar));
    return rep;
}

IdentityReport check_kk_pq_blocks(int r, int s) {
    const int n = 2 * r + s;
    std::vector<int> bmu(std::size_t(n), 0);
    for (int i = 0; i < r; ++i) {
        bmu[std::size_t(i)] = 1;
        bmu[std::size_t(n - 1 - i)] = -1;
    }
    const OpMatrix t = lax_of(divisor_from_young(Mode::Rational, std::vector<int>(std::size_t(n), 0), {}, bmu));
    const RatFun z = RatFun::var(Var::z());
    const OpMatrix f = scalar_identity(r, z) - t.block(1, 1, r, r);
    const OpMatrix q = t.block(1, r + 1, r, s), kbar = t.block(1, r + s + 1, r, r);
    const OpMatrix p = negated(t.block(r + 1, 1, s, r));
    const OpMatrix k = t.block(r + s + 1, 1, r, r);
    const std::string tag = " " + shape(r, s);

    IdentityReport rep;
    const bool zeros = t.block(r + 1, r + s + 1, s, r).is_zero() && t.block(r + s + 1, r + 1, r, r + s).is_zero();
    rep.add("block shape" + tag, zeros && t.block(r + 1, r + 1, s, s) == OpMatrix::identity(s) && z_free(f) &&
                                     z_free(p) && z_free(q) && z_free(k) && z_free(kbar));
    rep.add("K Kbar = -I" + tag, k * kbar == scalar_identity(r, RatFun(-1)), (k * kbar).to_string());
    OpMatrix kp(r + s, r), kbarq(r, r + s);
    for (int j = 1; j <= r; ++j) {
        for (int i = 1; i <= r; ++i) kp(i, j) = k(i, j), kbarq(j, i) = kbar(j, i);
        for (int i = 1; i <= s; ++i) kp(r + i, j) = p(i, j), kbarq(j, r + i) = q(j, i);
    }
    rep.add("K and P entries commute" + tag, commuting_entries(kp));
    rep.add("Kbar and Q entries commute" + tag, commuting_entries(kbarq));
    rep.add("[P_ij, Q_j'i'] = delta delta" + tag, canonical_pairs(p, q));
    return rep;
}

IdentityReport check_pqf_blocks(int r, int s) {
    const int n = r + s;
    std::vector<int> blambda(std::size_t(n), 0), bmu(std::size_t(n), 0);
    for (int i = 0; i < r; ++i) {
        blambda[std::size_t(i)] = 1;
        bmu[std::size_t(n - 1 - i)] = -1;
    }
    const OpMatrix t = lax_of(divisor_from_young(Mode::Rational, blambda, symbolic_points(1), bmu));
    const RatFun z = RatFun::var(Var::z());
    const OpMatrix f = scalar_identity(r, z) - t.block(1, 1, r, r);
    const OpMatrix q = t.block(1, r + 1, r, s);
    const OpMatrix p = negated(t.block(r + 1, 1, s, r));
    const std::string tag = " " + shape(r, s);

    IdentityReport rep;
    rep.add("block shape" + tag,
            t.block(r + 1, r + 1, s, s) == OpMatrix::identity(s) && z_free(f) && z_free(p) && z_free(q));
    const OpMatrix want = scalar_identity(r, RatFun::var(Var::x(1))) + q * p;
    rep.add("F = x_1 I + Q P" + tag, f == want, (f - want).to_string());
    rep.add("P entries commute" + tag, commuting_entries(p));
    rep.add("Q entries commute" + tag, commuting_entries(q));
    rep.add("[P_ij, Q_j'i'] = delta delta" + tag, canonical_pairs(p, q));
    return rep;
}

}  // namespace lax
