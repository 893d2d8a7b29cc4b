#pragma once

#include <algorithm>
#include <climits>
#include <map>
#include <string>

#include "lax/errors.hpp"
#include "lax/ratfun.hpp"

namespace lax {

// Truncated Laurent series sum_{k < prec} c_k t^k in a formal variable t.
// C is a (possibly noncommutative) ring whose default value is zero;
// products keep the order of the factors.
template <class C>
class Series {
public:
    Series() = default;
    explicit Series(int prec) : prec_(prec) {}
    static Series constant(const C& c, int prec) {
        Series s(prec);
        s.set(0, c);
        return s;
    }

    int precision() const { return prec_; }
    const std::map<int, C>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    // Lowest exponent with a nonzero coefficient, or prec for the zero series.
    int valuation() const { return terms_.empty() ? prec_ : terms_.begin()->first; }

    C coefficient(int k) const {
        if (k >= prec_) throw PrecisionExhausted("coefficient t^" + std::to_string(k) + " beyond precision " +
                                                 std::to_string(prec_));
        auto it = terms_.find(k);
        return it == terms_.end() ? C() : it->second;
    }
    void set(int k, const C& c) {
        if (k >= prec_) return;
        if (is_zero_value(c))
            terms_.erase(k);
        else
            terms_[k] = c;
    }

    Series truncated(int prec) const {
        Series s(std::min(prec, prec_));
        for (const auto& [k, c] : terms_)
            if (k < s.prec_) s.terms_.emplace(k, c);
        return s;
    }

    friend Series operator+(const Series& a, const Series& b) { return a.combine(b, false); }
    friend Series operator-(const Series& a, const Series& b) { return a.combine(b, true); }
    Series operator-() const {
        Series s(prec_);
        for (const auto& [k, c] : terms_) s.terms_.emplace(k, -c);
        return s;
    }

    friend Series operator*(const Series& a, const Series& b) {
        Series s(std::min(a.prec_ + b.valuation(), b.prec_ + a.valuation()));
        for (const auto& [i, ca] : a.terms_)
            for (const auto& [j, cb] : b.terms_) {
                if (i + j >= s.prec_) break;
                C prod = ca * cb;
                auto it = s.terms_.find(i + j);
                if (it == s.terms_.end()) {
                    if (!is_zero_value(prod)) s.terms_.emplace(i + j, std::move(prod));
                } else {
                    it->second = it->second + prod;
                    if (is_zero_value(it->second)) s.terms_.erase(it);
                }
            }
        return s;
    }

    // Two-sided inverse given the inverse of the leading coefficient.
    Series inverse(const C& lead_inverse) const {
        const int v = valuation();
        if (terms_.empty()) throw PoleAtExpansionPoint("inverting a series that vanishes to the working precision");
        const int rel = prec_ - v;
        Series b(-v + rel);
        std::map<int, C> out;
        out.emplace(-v, lead_inverse);
        for (int m = 1; m < rel; ++m) {
            C acc{};
            for (int k = 1; k <= m; ++k) {
                auto ia = terms_.find(v + k);
                auto ib = out.find(-v + m - k);
                if (ia == terms_.end() || ib == out.end()) continue;
                acc = acc + ia->second * ib->second;
            }
            if (!is_zero_value(acc)) out.emplace(-v + m, -(lead_inverse * acc));
        }
        for (auto& [k, c] : out) b.set(k, c);
        return b;
    }

    // Multiplies by t^k.
    Series shifted(int k) const {
        Series s(prec_ + k);
        for (const auto& [e, c] : terms_) s.terms_.emplace(e + k, c);
        return s;
    }

    template <class F>
    auto map(F f) const {
        using D = decltype(f(std::declval<const C&>()));
        Series<D> s(prec_);
        for (const auto& [k, c] : terms_) s.set(k, f(c));
        return s;
    }

    // Equality up to the smaller precision.
    friend bool agrees(const Series& a, const Series& b) {
        const int p = std::min(a.prec_, b.prec_);
        Series d = a.truncated(p) - b.truncated(p);
        return d.is_zero();
    }

private:
    static bool is_zero_value(const C& c) { return c.is_zero(); }

    Series combine(const Series& b, bool subtract) const {
        Series s(std::min(prec_, b.prec_));
        for (const auto& [k, c] : terms_)
            if (k < s.prec_) s.terms_.emplace(k, c);
        for (const auto& [k, c] : b.terms_) {
            if (k >= s.prec_) continue;
            auto it = s.terms_.find(k);
            if (it == s.terms_.end()) {
                s.terms_.emplace(k, subtract ? -c : c);
            } else {
                it->second = subtract ? it->second - c : it->second + c;
                if (is_zero_value(it->second)) s.terms_.erase(it);
            }
        }
        return s;
    }

    int prec_ = INT_MAX / 4;
    std::map<int, C> terms_;
};

enum class Expansion {
    AtInfinity,  // powers of z^{-1}; t = 1/z
    AtZero,      // powers of z; t = z
};

// First `order` coefficients of f expanded in t, starting at its leading term.
// The result has precision valuation + order.
Series<RatFun> series_expand(const RatFun& f, Var var, Expansion where, int order);

}  // namespace lax
