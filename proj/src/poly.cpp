#include "lax/poly.hpp"

#include <algorithm>
#include <sstream>

#include "lax/errors.hpp"

namespace lax {

std::string Var::name() const {
    auto idx = [&](unsigned a, unsigned b) {
        std::string s = "[" + std::to_string(a) + "," + std::to_string(b);
        if (factor() != 1) s += ";" + std::to_string(factor());
        return s + "]";
    };
    switch (kind()) {
        case VarKind::Z: return "z";
        case VarKind::W: return "w";
        case VarKind::U: return "u";
        case VarKind::V: return "v";
        case VarKind::Eps: return "eps";
        case VarKind::P: return "p" + idx(i(), r());
        case VarKind::WHat: return "wh" + idx(i(), r());
        case VarKind::X: return "x[" + std::to_string(i()) + "]";
        case VarKind::Y: return "y[" + std::to_string(i()) + "]";
    }
    return "?";
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

// ---------------------------------------------------------------- Monomial

Monomial Monomial::of(Var v, int e) {
    if (e == 0) return {};
    return Monomial({VarPow{v, e}});
}

int Monomial::exponent(Var v) const {
    for (const auto& f : f_) {
        if (f.var == v) return f.exp;
        if (v < f.var) break;
    }
    return 0;
}

bool Monomial::has_negative() const {
    return std::any_of(f_.begin(), f_.end(), [](const VarPow& f) { return f.exp < 0; });
}

int Monomial::total_degree() const {
    int d = 0;
    for (const auto& f : f_) d += f.exp;
    return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
    if (o.f_.empty()) return *this;
    if (f_.empty()) return o;
    std::vector<VarPow> out;
    out.reserve(f_.size() + o.f_.size());
    auto a = f_.begin(), b = o.f_.begin();
    while (a != f_.end() || b != o.f_.end()) {
        if (b == o.f_.end() || (a != f_.end() && a->var < b->var)) {
            out.push_back(*a++);
        } else if (a == f_.end() || b->var < a->var) {
            out.push_back(*b++);
        } else {
            int e = a->exp + b->exp;
            if (e != 0) out.push_back({a->var, e});
            ++a;
            ++b;
        }
    }
    return Monomial(std::move(out));
}

Monomial Monomial::inverse() const {
    auto out = f_;
    for (auto& f : out) f.exp = -f.exp;
    return Monomial(std::move(out));
}

Monomial Monomial::pow(int k) const {
    if (k == 0) return {};
    auto out = f_;
    for (auto& f : out) f.exp *= k;
    return Monomial(std::move(out));
}

Monomial Monomial::without(Var v) const {
    std::vector<VarPow> out;
    out.reserve(f_.size());
    for (const auto& f : f_)
        if (f.var != v) out.push_back(f);
    return Monomial(std::move(out));
}

Monomial Monomial::min_exponents(const Monomial& a, const Monomial& b) {
    std::vector<VarPow> out;
    auto x = a.f_.begin(), y = b.f_.begin();
    while (x != a.f_.end() || y != b.f_.end()) {
        if (y == b.f_.end() || (x != a.f_.end() && x->var < y->var)) {
            if (x->exp < 0) out.push_back(*x);
            ++x;
        } else if (x == a.f_.end() || y->var < x->var) {
            if (y->exp < 0) out.push_back(*y);
            ++y;
        } else {
            int e = std::min(x->exp, y->exp);
            if (e != 0) out.push_back({x->var, e});
            ++x;
            ++y;
        }
    }
    return Monomial(std::move(out));
}

std::string Monomial::to_string() const {
    if (f_.empty()) return "1";
    std::string s;
    for (std::size_t k = 0; k < f_.size(); ++k) {
        if (k) s += "*";
        s += f_[k].var.name();
        if (f_[k].exp != 1) s += "^" + std::to_string(f_[k].exp);
    }
    return s;
}

int lex_compare(const Monomial& a, const Monomial& b) {
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    auto x = fa.begin(), y = fb.begin();
    while (x != fa.end() || y != fb.end()) {
        if (y == fb.end() || (x != fa.end() && x->var < y->var)) {
            return x->exp > 0 ? 1 : -1;
        }
        if (x == fa.end() || y->var < x->var) {
            return y->exp > 0 ? -1 : 1;
        }
        if (x->exp != y->exp) return x->exp > y->exp ? 1 : -1;
        ++x;
        ++y;
    }
    return 0;
}

// -------------------------------------------------------------------- Poly

Poly::Poly(long c) {
    if (c != 0) terms_.push_back({Monomial{}, Rational(c)});
}

Poly::Poly(const Rational& c) {
    if (c != 0) terms_.push_back({Monomial{}, c});
}

Poly Poly::var(Var v, int e) { return monomial(Monomial::of(v, e)); }

Poly Poly::monomial(const Monomial& m, const Rational& c) {
    Poly p;
    if (c != 0) p.terms_.push_back({m, c});
    return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return lex_compare(a.mono, b.mono) > 0; });
    Poly p;
    p.terms_.reserve(terms.size());
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            p.terms_.back().coef += t.coef;
        } else {
            if (!p.terms_.empty() && p.terms_.back().coef == 0) p.terms_.pop_back();
            p.terms_.push_back(std::move(t));
        }
    }
    if (!p.terms_.empty() && p.terms_.back().coef == 0) p.terms_.pop_back();
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

Rational Poly::constant_value() const {
    if (terms_.empty()) return 0;
    return terms_[0].coef;
}

int Poly::degree(Var v) const {
    if (terms_.empty()) return 0;
    int d = terms_[0].mono.exponent(v);
    for (const auto& t : terms_) d = std::max(d, t.mono.exponent(v));
    return d;
}

int Poly::min_degree(Var v) const {
    if (terms_.empty()) return 0;
    int d = terms_[0].mono.exponent(v);
    for (const auto& t : terms_) d = std::min(d, t.mono.exponent(v));
    return d;
}

std::set<Var> Poly::variables() const {
    std::set<Var> out;
    for (const auto& t : terms_)
        for (const auto& f : t.mono.factors()) out.insert(f.var);
    return out;
}

bool Poly::involves(Var v) const {
    return std::any_of(terms_.begin(), terms_.end(),
                       [&](const Term& t) { return t.mono.has(v); });
}

bool Poly::involves_kind(VarKind k) const {
    for (const auto& t : terms_)
        for (const auto& f : t.mono.factors())
            if (f.var.kind() == k) return true;
    return false;
}

std::map<int, Poly> Poly::coefficients_in(Var v) const {
    std::map<int, std::vector<Term>> buckets;
    for (const auto& t : terms_) buckets[t.mono.exponent(v)].push_back({t.mono.without(v), t.coef});
    std::map<int, Poly> out;
    for (auto& [e, ts] : buckets) out.emplace(e, from_terms(std::move(ts)));
    return out;
}

Monomial Poly::content_monomial() const {
    if (terms_.empty()) return {};
    Monomial m = terms_[0].mono;
    for (std::size_t k = 1; k < terms_.size(); ++k) m = Monomial::min_exponents(m, terms_[k].mono);
    return m;
}

Poly Poly::operator-() const {
    Poly p = *this;
    for (auto& t : p.terms_) t.coef = -t.coef;
    return p;
}

Poly Poly::merge_add(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    auto x = a.begin(), y = b.begin();
    while (x != a.end() || y != b.end()) {
        int c;
        if (x == a.end()) c = -1;
        else if (y == b.end()) c = 1;
        else c = lex_compare(x->mono, y->mono);
        if (c > 0) {
            out.push_back(*x++);
        } else if (c < 0) {
            out.push_back(subtract ? Term{y->mono, -y->coef} : *y);
            ++y;
        } else {
            Rational s = subtract ? Rational(x->coef - y->coef) : Rational(x->coef + y->coef);
            if (s != 0) out.push_back({x->mono, std::move(s)});
            ++x;
            ++y;
        }
    }
    Poly p;
    p.terms_ = std::move(out);
    return p;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.terms_.empty()) return *this;
    if (terms_.empty()) return *this = o;
    *this = merge_add(terms_, o.terms_, false);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.terms_.empty()) return *this;
    *this = merge_add(terms_, o.terms_, true);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.terms_.empty() || b.terms_.empty()) return {};
    if (a.terms_.size() == 1) return b.mul_term(a.terms_[0].mono, a.terms_[0].coef);
    if (b.terms_.size() == 1) return a.mul_term(b.terms_[0].mono, b.terms_[0].coef);
    std::vector<Term> out;
    out.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& x : a.terms_)
        for (const auto& y : b.terms_) out.push_back({x.mono * y.mono, x.coef * y.coef});
    return Poly::from_terms(std::move(out));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly Poly::mul_term(const Monomial& m, const Rational& c) const {
    if (c == 0) return {};
    Poly p;
    p.terms_.reserve(terms_.size());
    // Multiplying by a monomial preserves the lexicographic order.
    for (const auto& t : terms_) p.terms_.push_back({t.mono * m, t.coef * c});
    return p;
}

Poly Poly::pow(unsigned k) const {
    Poly result(1), base = *this;
    while (k) {
        if (k & 1) result *= base;
        k >>= 1;
        if (k) base *= base;
    }
    return result;
}

Poly Poly::substitute(const std::map<Var, Poly>& images) const {
    if (images.empty()) return *this;
    std::map<std::pair<std::uint64_t, int>, Poly> cache;
    auto power = [&](Var v, const Poly& img, int e) -> const Poly& {
        auto key = std::make_pair(v.key(), e);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        Poly val;
        if (e >= 0) {
            val = img.pow(unsigned(e));
        } else {
            if (img.is_zero()) throw DivisionByZero("substituting zero for " + v.name() + " under a negative power");
            if (!img.is_monomial())
                throw NotAtomFactorable("negative power of " + v.name() + " mapped to a non-monomial");
            const auto& t = img.leading();
            Rational c = 1;
            for (int k = 0; k < -e; ++k) c /= t.coef;
            val = Poly::monomial(t.mono.inverse().pow(-e), c);
        }
        return cache.emplace(key, std::move(val)).first->second;
    };
    std::vector<Term> acc;
    Poly result;
    for (const auto& t : terms_) {
        Poly term = Poly::monomial({}, t.coef);
        Monomial kept;
        for (const auto& f : t.mono.factors()) {
            auto it = images.find(f.var);
            if (it == images.end()) {
                kept = kept * Monomial::of(f.var, f.exp);
            } else {
                term = term * power(f.var, it->second, f.exp);
            }
        }
        term = term.mul_term(kept, 1);
        for (auto& x : term.terms_) acc.push_back(std::move(x));
    }
    return from_terms(std::move(acc));
}

Poly Poly::map_vars(const std::function<Var(Var)>& f) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        Monomial m;
        for (const auto& vp : t.mono.factors()) m = m * Monomial::of(f(vp.var), vp.exp);
        out.push_back({m, t.coef});
    }
    return from_terms(std::move(out));
}

bool Poly::operator==(const Poly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t k = 0; k < terms_.size(); ++k)
        if (terms_[k].coef != o.terms_[k].coef || !(terms_[k].mono == o.terms_[k].mono)) return false;
    return true;
}

int compare(const Poly& a, const Poly& b) {
    std::size_t n = std::min(a.terms_.size(), b.terms_.size());
    for (std::size_t k = 0; k < n; ++k) {
        int c = lex_compare(a.terms_[k].mono, b.terms_[k].mono);
        if (c) return c;
        int d = cmp(a.terms_[k].coef, b.terms_[k].coef);
        if (d) return d > 0 ? 1 : -1;
    }
    if (a.terms_.size() == b.terms_.size()) return 0;
    return a.terms_.size() > b.terms_.size() ? 1 : -1;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (std::size_t k = 0; k < terms_.size(); ++k) {
        const auto& t = terms_[k];
        bool neg = t.coef < 0;
        Rational mag = neg ? Rational(-t.coef) : t.coef;
        if (k == 0) {
            if (neg) s += "-";
        } else {
            s += neg ? " - " : " + ";
        }
        if (t.mono.is_one()) {
            s += rational_to_string(mag);
        } else if (mag == 1) {
            s += t.mono.to_string();
        } else {
            s += rational_to_string(mag) + "*" + t.mono.to_string();
        }
    }
    return s;
}

}  // namespace lax
