#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lax/poly.hpp"

namespace lax {

// An irreducible denominator factor: a content-free Laurent polynomial with
// leading coefficient 1. Linear forms in the rational mode, binomials
// m1 - c*m2 in the trigonometric mode. Shared and immutable.
class Atom {
public:
    const Poly& poly() const { return d_->poly; }
    Var pivot() const { return d_->pivot; }
    int pivot_degree() const { return d_->pivot_degree; }
    const std::vector<Var>& vars() const { return d_->vars; }
    bool involves(Var v) const;
    bool involves_kind(VarKind k) const;

    friend bool operator==(const Atom& a, const Atom& b) {
        return a.d_ == b.d_ || a.d_->poly == b.d_->poly;
    }
    friend int compare(const Atom& a, const Atom& b) {
        if (a.d_ == b.d_) return 0;
        return compare(a.d_->poly, b.d_->poly);
    }

    // Builds an atom from an already normalized polynomial.
    static Atom from_normalized(Poly p);

    // Exact quotient n / atom, or nullopt if the atom does not divide n.
    std::optional<Poly> divide(const Poly& n) const;

private:
    struct Data {
        Poly poly;
        Var pivot;
        int pivot_degree = 0;
        std::vector<Var> vars;
        // poly = lead * pivot^pivot_degree + sum_j rest[j] * pivot^j
        Monomial lead_mono;
        Rational lead_coef;
        std::map<int, Poly> rest;
    };
    std::shared_ptr<const Data> d_;
};

// Splits a nonzero polynomial into unit * product of atoms (with
// multiplicities). Raises NotAtomFactorable if some factor is not an atom and
// DivisionByZero for the zero polynomial.
struct AtomFactorization {
    Rational coef = 1;
    Monomial mono;
    std::vector<std::pair<Atom, int>> atoms;
};
AtomFactorization factor_atoms(const Poly& p);

// Exact multivariate rational function with a factored denominator.
class RatFun {
public:
    using Den = std::vector<std::pair<Atom, int>>;

    RatFun() = default;
    RatFun(long c) : num_(c) {}  // NOLINT(google-explicit-constructor)
    RatFun(const Rational& c) : num_(c) {}  // NOLINT(google-explicit-constructor)
    RatFun(Poly p) : num_(std::move(p)) {}  // NOLINT(google-explicit-constructor)
    static RatFun var(Var v, int e = 1) { return RatFun(Poly::var(v, e)); }
    // num / (product of atoms); reduces.
    static RatFun make(Poly num, Den den);
    // Same, for parts already known to be coprime.
    static RatFun from_coprime(Poly num, Den den);

    const Poly& num() const { return num_; }
    const Den& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.empty(); }
    bool is_constant() const { return den_.empty() && num_.is_constant(); }
    Rational constant_value() const { return num_.constant_value(); }
    bool involves(Var v) const;
    bool involves_kind(VarKind k) const;
    // True when no denominator atom involves v and v has no negative power.
    bool is_polynomial_in(Var v) const;

    RatFun operator-() const;
    friend RatFun operator+(const RatFun& a, const RatFun& b);
    friend RatFun operator-(const RatFun& a, const RatFun& b);
    friend RatFun operator*(const RatFun& a, const RatFun& b);
    friend RatFun operator/(const RatFun& a, const RatFun& b) { return a * b.invert(); }
    RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
    RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
    RatFun& operator*=(const RatFun& o) { return *this = *this * o; }

    // Reciprocal; NotAtomFactorable when the numerator does not split into atoms.
    RatFun invert() const;
    RatFun pow(int k) const;

    RatFun substitute(const std::map<Var, Poly>& images) const;
    RatFun map_vars(const std::function<Var(Var)>& f) const;

    // Limit as v -> infinity (DivergesAtInfinity when the degree is positive).
    RatFun limit_leading(Var v) const;
    // Limit as v -> 0 (DivergesAtZero when the order is negative).
    RatFun limit_at_zero(Var v) const;

    // Mathematical equality of rational functions.
    friend bool equals(const RatFun& a, const RatFun& b);
    friend bool operator==(const RatFun& a, const RatFun& b) { return equals(a, b); }

    // Canonical text, e.g. "(z - p[1,1] + 1) / ((p[1,1] - p[1,2]) * (z - x[1]))".
    std::string to_string() const;

    // Structural identity of the canonical forms.
    bool same_form(const RatFun& o) const;

private:
    void reduce();
    Poly num_;
    Den den_;
};

// Evaluation-based equality test at random exact rational points. Never used
// by the acceptance suite. A false "equal" verdict has probability at most
// deg/|S| per trial (Schwartz-Zippel), with |S| the sample range size.
bool probably_equals(const RatFun& a, const RatFun& b, unsigned trials = 4,
                     unsigned long seed = 12345);

}  // namespace lax
