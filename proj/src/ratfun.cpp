#include "lax/ratfun.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "lax/errors.hpp"
#include "linear_factor.hpp"

namespace lax {

namespace {

Poly normalize_content(const Poly& p, AtomFactorization& unit) {
    Monomial m = p.content_monomial();
    Poly q = p.mul_term(m.inverse(), 1);
    Rational c = q.leading().coef;
    q = q.mul_term({}, Rational(1 / c));
    unit.coef *= c;
    unit.mono = unit.mono * m;
    return q;
}

bool is_linear_shape(const Poly& p) {
    if (p.is_constant()) return false;
    for (const auto& t : p.terms()) {
        const auto& f = t.mono.factors();
        if (f.size() > 1) return false;
        if (f.size() == 1 && f[0].exp != 1) return false;
    }
    return true;
}

bool rational_sqrt(const Rational& c, Rational& out) {
    if (c <= 0) return false;
    mpz_class n = c.get_num(), d = c.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    out = Rational(rn, rd);
    out.canonicalize();
    return true;
}

Monomial halve(const Monomial& m) {
    Monomial out;
    for (const auto& f : m.factors()) out = out * Monomial::of(f.var, f.exp / 2);
    return out;
}

// p is content free with leading coefficient 1.
void split_normalized(const Poly& p, std::vector<std::pair<Atom, int>>& out) {
    if (is_linear_shape(p)) {
        out.emplace_back(Atom::from_normalized(p), 1);
        return;
    }
    if (p.size() == 2) {
        const auto& t1 = p.terms()[0];
        const auto& t2 = p.terms()[1];
        int g = 0;
        for (const auto& f : t1.mono.factors()) g = std::gcd(g, f.exp);
        for (const auto& f : t2.mono.factors()) g = std::gcd(g, f.exp);
        Rational s;
        if (g % 2 == 0 && rational_sqrt(Rational(-t2.coef), s)) {
            Monomial h1 = halve(t1.mono), h2 = halve(t2.mono);
            split_normalized(Poly::monomial(h1) - Poly::monomial(h2, s), out);
            split_normalized(Poly::monomial(h1) + Poly::monomial(h2, s), out);
            return;
        }
        out.emplace_back(Atom::from_normalized(p), 1);
        return;
    }
    // Peel along a variable of degree one: p = A*t + B.
    std::vector<Var> candidates;
    for (Var v : p.variables())
        if (p.degree(v) == 1) candidates.push_back(v);
    for (Var t : candidates) {
        auto cf = p.coefficients_in(t);
        if (cf[1].is_monomial()) {
            out.emplace_back(Atom::from_normalized(p), 1);
            return;
        }
    }
    for (Var t : candidates) {
        auto cf = p.coefficients_in(t);
        AtomFactorization fa;
        try {
            fa = factor_atoms(cf[1]);
        } catch (const NotAtomFactorable&) {
            continue;
        }
        Poly q = p;
        std::vector<std::pair<Atom, int>> found;
        for (const auto& [a, k] : fa.atoms) {
            for (int j = 0; j < k; ++j) {
                auto d = a.divide(q);
                if (!d) break;
                q = std::move(*d);
                found.emplace_back(a, 1);
            }
        }
        if (found.empty()) continue;
        AtomFactorization unit;
        Poly rest = normalize_content(q, unit);
        for (auto& f : found) out.push_back(std::move(f));
        if (!rest.is_constant()) split_normalized(rest, out);
        return;
    }
    if (!p.content_monomial().has_negative()) {
        for (const Poly& form : detail::linear_factor_candidates(p)) {
            AtomFactorization unit;
            Atom a = Atom::from_normalized(normalize_content(form, unit));
            auto q = a.divide(p);
            if (!q) continue;
            out.emplace_back(a, 1);
            AtomFactorization rest_unit;
            Poly rest = normalize_content(*q, rest_unit);
            if (!rest.is_constant()) split_normalized(rest, out);
            return;
        }
    }
    throw NotAtomFactorable(p.to_string());
}

void sort_merge(RatFun::Den& den) {
    std::sort(den.begin(), den.end(),
              [](const auto& a, const auto& b) { return compare(a.first, b.first) > 0; });
    RatFun::Den out;
    for (auto& e : den) {
        if (!out.empty() && out.back().first == e.first)
            out.back().second += e.second;
        else
            out.push_back(std::move(e));
    }
    std::erase_if(out, [](const auto& e) { return e.second == 0; });
    den = std::move(out);
}

void cancel(Poly& num, RatFun::Den& den) {
    if (num.is_zero()) {
        den.clear();
        return;
    }
    for (auto& [a, k] : den) {
        while (k > 0) {
            auto q = a.divide(num);
            if (!q) break;
            num = std::move(*q);
            --k;
        }
    }
    std::erase_if(den, [](const auto& e) { return e.second == 0; });
}

Poly den_product(const RatFun::Den& den) {
    Poly p(1);
    for (const auto& [a, k] : den) p *= a.poly().pow(unsigned(k));
    return p;
}

// num / poly^k with poly split into atoms; the unit goes into num.
void divide_into(Poly& num, RatFun::Den& den, const Poly& poly, int k) {
    auto f = factor_atoms(poly);
    Rational c = 1;
    for (int j = 0; j < k; ++j) c /= f.coef;
    num = num.mul_term(f.mono.inverse().pow(k), c);
    for (auto& [a, m] : f.atoms) den.emplace_back(a, m * k);
}

}  // namespace

// -------------------------------------------------------------------- Atom

bool Atom::involves(Var v) const { return std::binary_search(d_->vars.begin(), d_->vars.end(), v); }

bool Atom::involves_kind(VarKind k) const {
    return std::any_of(d_->vars.begin(), d_->vars.end(), [&](Var v) { return v.kind() == k; });
}

Atom Atom::from_normalized(Poly p) {
    auto d = std::make_shared<Data>();
    auto vs = p.variables();
    d->vars.assign(vs.begin(), vs.end());
    bool found = false;
    for (Var v : d->vars) {
        int deg = p.degree(v);
        int count = 0;
        const Term* lead = nullptr;
        for (const auto& t : p.terms()) {
            if (t.mono.exponent(v) == deg) {
                ++count;
                lead = &t;
            }
        }
        if (count != 1) continue;
        if (!found || deg < d->pivot_degree) {
            found = true;
            d->pivot = v;
            d->pivot_degree = deg;
            d->lead_mono = lead->mono.without(v);
            d->lead_coef = lead->coef;
        }
    }
    if (!found) throw NotAtomFactorable("no pivot variable in " + p.to_string());
    d->rest = p.coefficients_in(d->pivot);
    d->rest.erase(d->pivot_degree);
    d->poly = std::move(p);
    Atom a;
    a.d_ = std::move(d);
    return a;
}

std::optional<Poly> Atom::divide(const Poly& n) const {
    if (n.is_zero()) return Poly{};
    for (Var v : d_->vars)
        if (!n.involves(v)) return std::nullopt;
    const Var t = d_->pivot;
    const int d = d_->pivot_degree;
    auto coeffs = n.coefficients_in(t);
    const int lo = coeffs.begin()->first;
    const int hi = coeffs.rbegin()->first;
    if (hi - lo < d) return std::nullopt;
    const Monomial linv = d_->lead_mono.inverse();
    const Rational cinv = 1 / d_->lead_coef;
    std::vector<Term> quotient;
    for (int k = hi; k >= lo + d; --k) {
        auto it = coeffs.find(k);
        if (it == coeffs.end()) continue;
        if (it->second.is_zero()) {
            coeffs.erase(it);
            continue;
        }
        Poly q = it->second.mul_term(linv, cinv);
        coeffs.erase(it);
        for (const auto& [j, b] : d_->rest) coeffs[k - d + j] -= q * b;
        Monomial tk = Monomial::of(t, k - d);
        for (const auto& term : q.terms()) quotient.push_back({term.mono * tk, term.coef});
    }
    for (const auto& [k, c] : coeffs)
        if (!c.is_zero()) return std::nullopt;
    return Poly::from_terms(std::move(quotient));
}

AtomFactorization factor_atoms(const Poly& p) {
    if (p.is_zero()) throw DivisionByZero("reciprocal of zero");
    AtomFactorization out;
    Poly q = normalize_content(p, out);
    if (!q.is_constant()) split_normalized(q, out.atoms);
    sort_merge(out.atoms);
    return out;
}

// ------------------------------------------------------------------ RatFun

RatFun RatFun::make(Poly num, Den den) {
    RatFun r;
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    sort_merge(r.den_);
    r.reduce();
    return r;
}

RatFun RatFun::from_coprime(Poly num, Den den) {
    RatFun r;
    r.num_ = std::move(num);
    if (!r.num_.is_zero()) r.den_ = std::move(den);
    sort_merge(r.den_);
    return r;
}

void RatFun::reduce() { cancel(num_, den_); }

bool RatFun::involves(Var v) const {
    if (num_.involves(v)) return true;
    return std::any_of(den_.begin(), den_.end(), [&](const auto& e) { return e.first.involves(v); });
}

bool RatFun::involves_kind(VarKind k) const {
    if (num_.involves_kind(k)) return true;
    return std::any_of(den_.begin(), den_.end(),
                       [&](const auto& e) { return e.first.involves_kind(k); });
}

bool RatFun::is_polynomial_in(Var v) const {
    if (num_.min_degree(v) < 0) return false;
    return std::none_of(den_.begin(), den_.end(), [&](const auto& e) { return e.first.involves(v); });
}

RatFun RatFun::operator-() const {
    RatFun r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFun operator*(const RatFun& a, const RatFun& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.den_.empty() && b.den_.empty()) return RatFun(a.num_ * b.num_);
    Poly na = a.num_, nb = b.num_;
    RatFun::Den da = a.den_, db = b.den_;
    cancel(na, db);
    cancel(nb, da);
    RatFun r;
    r.num_ = na * nb;
    r.den_ = std::move(da);
    for (auto& e : db) r.den_.push_back(std::move(e));
    sort_merge(r.den_);
    return r;
}

namespace {

RatFun add_impl(const RatFun& a, const RatFun& b, bool subtract) {
    const auto& da = a.den();
    const auto& db = b.den();
    auto combine = [&](const Poly& x, const Poly& y) { return subtract ? x - y : x + y; };
    bool same = da.size() == db.size();
    for (std::size_t k = 0; same && k < da.size(); ++k)
        same = da[k].second == db[k].second && da[k].first == db[k].first;
    if (same) return RatFun::make(combine(a.num(), b.num()), da);

    // Both denominators are sorted; walk them together to build the lcm.
    RatFun::Den lcm, common;
    Poly fa(1), fb(1);
    std::size_t i = 0, j = 0;
    while (i < da.size() || j < db.size()) {
        int c = i == da.size() ? -1 : j == db.size() ? 1 : compare(da[i].first, db[j].first);
        if (c > 0) {
            fb *= da[i].first.poly().pow(unsigned(da[i].second));
            lcm.push_back(da[i++]);
        } else if (c < 0) {
            fa *= db[j].first.poly().pow(unsigned(db[j].second));
            lcm.push_back(db[j++]);
        } else {
            int ka = da[i].second, kb = db[j].second;
            const Atom& at = da[i].first;
            if (ka < kb) fa *= at.poly().pow(unsigned(kb - ka));
            if (kb < ka) fb *= at.poly().pow(unsigned(ka - kb));
            lcm.emplace_back(at, std::max(ka, kb));
            if (ka == kb) common.emplace_back(at, ka);
            ++i;
            ++j;
        }
    }
    Poly n = combine(a.num() * fa, b.num() * fb);
    if (n.is_zero()) return {};
    // Only atoms with equal multiplicity on both sides can cancel.
    RatFun::Den rest;
    for (auto& e : lcm) {
        bool in_common = std::any_of(common.begin(), common.end(),
                                     [&](const auto& c) { return c.first == e.first; });
        if (!in_common) rest.push_back(std::move(e));
    }
    cancel(n, common);
    for (auto& e : common) rest.push_back(std::move(e));
    return RatFun::from_coprime(std::move(n), std::move(rest));
}

}  // namespace

RatFun operator+(const RatFun& a, const RatFun& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    return add_impl(a, b, false);
}

RatFun operator-(const RatFun& a, const RatFun& b) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return -b;
    return add_impl(a, b, true);
}

RatFun RatFun::invert() const {
    if (is_zero()) throw DivisionByZero("reciprocal of zero");
    auto f = factor_atoms(num_);
    RatFun r;
    r.num_ = den_product(den_).mul_term(f.mono.inverse(), Rational(1 / f.coef));
    r.den_ = std::move(f.atoms);
    return r;
}

RatFun RatFun::pow(int k) const {
    if (k < 0) return invert().pow(-k);
    if (k == 0) return RatFun(1);
    RatFun r;
    r.num_ = num_.pow(unsigned(k));
    r.den_ = den_;
    for (auto& e : r.den_) e.second *= k;
    return r;
}

RatFun RatFun::substitute(const std::map<Var, Poly>& images) const {
    if (images.empty() || is_zero()) return *this;
    // Pull substituted negative powers out of the numerator so that they may
    // map to arbitrary polynomials.
    Monomial neg;
    const Monomial content = num_.content_monomial();
    for (const auto& f : content.factors())
        if (f.exp < 0 && images.count(f.var)) neg = neg * Monomial::of(f.var, f.exp);
    Poly n = num_.mul_term(neg.inverse(), 1).substitute(images);
    if (n.is_zero()) return {};
    Den den;
    for (const auto& f : neg.factors()) divide_into(n, den, images.at(f.var), -f.exp);
    for (const auto& [a, k] : den_) {
        bool touched = std::any_of(a.vars().begin(), a.vars().end(),
                                   [&](Var v) { return images.count(v) > 0; });
        if (!touched) {
            den.emplace_back(a, k);
            continue;
        }
        divide_into(n, den, a.poly().substitute(images), k);
    }
    return make(std::move(n), std::move(den));
}

RatFun RatFun::map_vars(const std::function<Var(Var)>& f) const {
    Poly n = num_.map_vars(f);
    Den den;
    for (const auto& [a, k] : den_) divide_into(n, den, a.poly().map_vars(f), k);
    return make(std::move(n), std::move(den));
}

RatFun RatFun::limit_leading(Var v) const {
    if (is_zero()) return {};
    int dnum = num_.degree(v);
    int dden = 0;
    for (const auto& [a, k] : den_) dden += k * a.poly().degree(v);
    if (dnum > dden) throw DivergesAtInfinity(v.name() + " in " + to_string());
    if (dnum < dden) return {};
    Poly n = num_.coefficients_in(v)[dnum];
    Den den;
    for (const auto& [a, k] : den_) {
        if (!a.involves(v)) {
            den.emplace_back(a, k);
            continue;
        }
        divide_into(n, den, a.poly().coefficients_in(v).rbegin()->second, k);
    }
    return make(std::move(n), std::move(den));
}

RatFun RatFun::limit_at_zero(Var v) const {
    if (is_zero()) return {};
    int ord = num_.min_degree(v);
    if (ord < 0) throw DivergesAtZero(v.name() + " in " + to_string());
    if (ord > 0) return {};
    Poly n = num_.coefficients_in(v)[0];
    Den den;
    for (const auto& [a, k] : den_) {
        if (!a.involves(v)) {
            den.emplace_back(a, k);
            continue;
        }
        divide_into(n, den, a.poly().coefficients_in(v).begin()->second, k);
    }
    return make(std::move(n), std::move(den));
}

bool RatFun::same_form(const RatFun& o) const {
    if (!(num_ == o.num_) || den_.size() != o.den_.size()) return false;
    for (std::size_t k = 0; k < den_.size(); ++k)
        if (den_[k].second != o.den_[k].second || !(den_[k].first == o.den_[k].first)) return false;
    return true;
}

bool equals(const RatFun& a, const RatFun& b) {
    if (a.same_form(b)) return true;
    return (a - b).is_zero();
}

std::string RatFun::to_string() const {
    if (den_.empty()) return num_.to_string();
    std::string s = "(" + num_.to_string() + ") / (";
    for (std::size_t k = 0; k < den_.size(); ++k) {
        if (k) s += " * ";
        s += "(" + den_[k].first.poly().to_string() + ")";
        if (den_[k].second != 1) s += "^" + std::to_string(den_[k].second);
    }
    return s + ")";
}

namespace {

Rational eval_poly(const Poly& p, const std::map<Var, Poly>& point) {
    Poly q = p.substitute(point);
    return q.constant_value();
}

}  // namespace

bool probably_equals(const RatFun& a, const RatFun& b, unsigned trials, unsigned long seed) {
    std::set<Var> vars;
    auto collect = [&](const RatFun& f) {
        for (Var v : f.num().variables()) vars.insert(v);
        for (const auto& [at, k] : f.den())
            for (Var v : at.vars()) vars.insert(v);
    };
    collect(a);
    collect(b);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-1000003, 1000003), den(1, 997);
    unsigned done = 0;
    for (unsigned attempt = 0; done < trials && attempt < 20 * trials; ++attempt) {
        std::map<Var, Poly> point;
        for (Var v : vars) {
            long n = num(rng);
            if (n == 0) n = 1;
            Rational q(n, den(rng));
            q.canonicalize();
            point.emplace(v, Poly(q));
        }
        auto value = [&](const RatFun& f, Rational& out) {
            Rational d = 1;
            for (const auto& [at, k] : f.den()) {
                Rational e = eval_poly(at.poly(), point);
                if (e == 0) return false;
                for (int j = 0; j < k; ++j) d *= e;
            }
            out = eval_poly(f.num(), point) / d;
            return true;
        };
        Rational va, vb;
        if (!value(a, va) || !value(b, vb)) continue;
        if (va != vb) return false;
        ++done;
    }
    return done == trials;
}

}  // namespace lax
