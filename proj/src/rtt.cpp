#include "lax/rtt.hpp"

#include <json.hpp>

#include <array>

#include "lax/errors.hpp"
#include "lax/lax_rational.hpp"

namespace lax {

std::string to_string(RKind k) {
    switch (k) {
        case RKind::Rational: return "rational";
        case RKind::Trig: return "trig";
        case RKind::Finite: return "finite";
    }
    return "?";
}

namespace {

RatFun var(Var x) { return RatFun::var(x); }
RatFun v() { return RatFun::var(Var::v()); }

}  // namespace

RMatrix rational_r(int n, Var z, Var w) {
    RMatrix r(n);
    for (int i = 1; i <= n; ++i)
        for (int k = 1; k <= n; ++k) {
            r.at(i, k, i, k) = var(z) - var(w);
            r.at(i, k, k, i) = r.at(i, k, k, i) + RatFun(1);
        }
    return r;
}

RMatrix trig_r(int n, Var z, Var w) {
    RMatrix r(n);
    const RatFun vinv = v().invert();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) {
                r.at(i, i, i, i) = v() * var(z) - vinv * var(w);
            } else {
                r.at(i, j, i, j) = var(z) - var(w);
                r.at(i, j, j, i) = (v() - vinv) * (i < j ? var(z) : var(w));
            }
        }
    return r;
}

RMatrix finite_r(int n) {
    RMatrix r(n);
    const RatFun vinv = v().invert();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) {
                r.at(i, i, i, i) = vinv;
            } else {
                r.at(i, j, i, j) = RatFun(1);
                if (i > j) r.at(i, j, j, i) = vinv - v();
            }
        }
    return r;
}

namespace {

// Dense scalar matrix on (C^n)^{(x)3}.
struct Cube {
    int n;
    std::vector<RatFun> e;
    explicit Cube(int n_) : n(n_), e(std::size_t(n_ * n_ * n_ * n_ * n_ * n_)) {}
    int dim() const { return n * n * n; }
    RatFun& at(int row, int col) { return e[std::size_t(row * dim() + col)]; }
    const RatFun& at(int row, int col) const { return e[std::size_t(row * dim() + col)]; }
};

// R acting on tensor legs (a, b) of three.
Cube on_legs(const RMatrix& r, int a, int b) {
    const int n = r.n();
    Cube c(n);
    auto digits = [n](int idx) {
        return std::array<int, 3>{idx / (n * n) + 1, (idx / n) % n + 1, idx % n + 1};
    };
    const int c_leg = 3 - a - b;  // legs are 0,1,2
    for (int row = 0; row < c.dim(); ++row)
        for (int col = 0; col < c.dim(); ++col) {
            auto di = digits(row), dj = digits(col);
            if (di[std::size_t(c_leg)] != dj[std::size_t(c_leg)]) continue;
            const RatFun& x = r.at(di[std::size_t(a)], di[std::size_t(b)], dj[std::size_t(a)], dj[std::size_t(b)]);
            if (!x.is_zero()) c.at(row, col) = x;
        }
    return c;
}

Cube operator*(const Cube& x, const Cube& y) {
    Cube out(x.n);
    const int d = x.dim();
    for (int i = 0; i < d; ++i)
        for (int k = 0; k < d; ++k) {
            const RatFun& a = x.at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < d; ++j) {
                const RatFun& b = y.at(k, j);
                if (!b.is_zero()) out.at(i, j) = out.at(i, j) + a * b;
            }
        }
    return out;
}

}  // namespace

bool check_yang_baxter(RKind kind, int n) {
    const Var z = Var::z(), w = Var::w(), u = Var::u();
    auto make = [&](Var a, Var b) {
        switch (kind) {
            case RKind::Rational: return rational_r(n, a, b);
            case RKind::Trig: return trig_r(n, a, b);
            case RKind::Finite: return finite_r(n);
        }
        return finite_r(n);
    };
    Cube r12 = on_legs(make(z, w), 0, 1);
    Cube r13 = on_legs(make(z, u), 0, 2);
    Cube r23 = on_legs(make(w, u), 1, 2);
    Cube lhs = r12 * r13 * r23;
    Cube rhs = r23 * r13 * r12;
    for (std::size_t k = 0; k < lhs.e.size(); ++k)
        if (!(lhs.e[k] == rhs.e[k])) return false;
    return true;
}

std::string RttReport::to_json() const {
    nlohmann::ordered_json j;
    j["ok"] = ok;
    j["components"] = components;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& f : failures)
        arr.push_back({{"row", {f.i, f.k}}, {"col", {f.j, f.l}}, {"difference", f.difference}});
    j["failures"] = arr;
    return j.dump(2);
}

RttReport verify_rtt(const RMatrix& r, const OpMatrix& a, const OpMatrix& b) {
    const int n = r.n();
    if (a.rows() != n || b.rows() != n) throw SizeMismatch("R-matrix and Lax matrix sizes differ");
    RttReport rep;
    // Products A_{xj} B_{yl} and B_{ky} A_{ix} are shared across components.
    std::vector<AlgebraElement> ab(std::size_t(n * n * n * n)), ba(std::size_t(n * n * n * n));
    auto idx = [n](int p, int q, int s, int t) { return std::size_t((((p - 1) * n + (q - 1)) * n + (s - 1)) * n + (t - 1)); };
    for (int x = 1; x <= n; ++x)
        for (int j = 1; j <= n; ++j)
            for (int y = 1; y <= n; ++y)
                for (int l = 1; l <= n; ++l) {
                    ab[idx(x, j, y, l)] = a(x, j) * b(y, l);
                    ba[idx(y, l, x, j)] = b(y, l) * a(x, j);
                }
    for (int i = 1; i <= n; ++i)
        for (int k = 1; k <= n; ++k)
            for (int j = 1; j <= n; ++j)
                for (int l = 1; l <= n; ++l) {
                    AlgebraElement diff;
                    for (int x = 1; x <= n; ++x)
                        for (int y = 1; y <= n; ++y) {
                            const RatFun& left = r.at(i, k, x, y);
                            if (!left.is_zero()) diff += AlgebraElement(left) * ab[idx(x, j, y, l)];
                            const RatFun& right = r.at(x, y, j, l);
                            if (!right.is_zero()) diff -= ba[idx(k, y, i, x)] * AlgebraElement(right);
                        }
                    ++rep.components;
                    if (!diff.is_zero()) {
                        rep.ok = false;
                        rep.failures.push_back({i, k, j, l, diff.to_string()});
                    }
                }
    return rep;
}

RttReport verify_rtt(const OpMatrix& t, RKind kind) {
    const int n = t.rows();
    OpMatrix tw = t.map_coefficients([](const RatFun& c) { return c.substitute({{Var::z(), Poly::var(Var::w())}}); });
    switch (kind) {
        case RKind::Rational: return verify_rtt(rational_r(n), t, tw);
        case RKind::Trig: return verify_rtt(trig_r(n), t, tw);
        case RKind::Finite: break;
    }
    throw SizeMismatch("the finite R-matrix has no spectral parameter; use verify_finite_rtt");
}

FiniteSplit split_finite_rtt(const OpMatrix& t) {
    const int n = t.rows();
    FiniteSplit s{OpMatrix(n, n, t.mode()), OpMatrix(n, n, t.mode())};
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            const auto& e = t(i, j);
            int deg = 0;
            try {
                deg = z_degree(e);
            } catch (const NotPolynomial& err) {
                throw NotLinearCase(err.what());
            }
            if (deg > 1) throw NotLinearCase("entry (" + std::to_string(i) + "," + std::to_string(j) + ") has z-degree " +
                                             std::to_string(deg));
            s.plus(i, j) = z_coefficient(e, 1);
            s.minus(i, j) = -z_coefficient(e, 0);
        }
    return s;
}

std::vector<RttReport> verify_finite_rtt(const FiniteSplit& s) {
    const RMatrix r = finite_r(s.plus.rows());
    return {verify_rtt(r, s.plus, s.plus), verify_rtt(r, s.minus, s.minus), verify_rtt(r, s.minus, s.plus)};
}

OpMatrix coproduct(const OpMatrix& t1, const OpMatrix& t2) { return fuse(t1, t2, 1); }

}  // namespace lax
