#pragma once

#include <gmpxx.h>

#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lax/var.hpp"

namespace lax {

using Rational = mpq_class;

struct VarPow {
    Var var;
    int exp;
    bool operator==(const VarPow&) const = default;
};

// Laurent monomial: variables in increasing key order, no zero exponents.
class Monomial {
public:
    Monomial() = default;
    static Monomial of(Var v, int e = 1);

    const std::vector<VarPow>& factors() const { return f_; }
    bool is_one() const { return f_.empty(); }
    int exponent(Var v) const;
    bool has(Var v) const { return exponent(v) != 0; }
    bool has_negative() const;
    int total_degree() const;

    Monomial operator*(const Monomial& o) const;
    Monomial inverse() const;
    Monomial pow(int k) const;
    Monomial without(Var v) const;
    // Per-variable minimum (the monomial gcd in the Laurent sense).
    static Monomial min_exponents(const Monomial& a, const Monomial& b);

    bool operator==(const Monomial&) const = default;

    std::string to_string() const;

private:
    explicit Monomial(std::vector<VarPow> f) : f_(std::move(f)) {}
    std::vector<VarPow> f_;
};

// Lexicographic comparison in the Var order; positive when a > b.
int lex_compare(const Monomial& a, const Monomial& b);

struct MonomialGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return lex_compare(a, b) > 0; }
};

struct Term {
    Monomial mono;
    Rational coef;
};

// Laurent polynomial over the rationals. Terms are kept in strictly decreasing
// lexicographic order, with no zero coefficients; the empty list is zero.
class Poly {
public:
    Poly() = default;
    Poly(long c);  // NOLINT(google-explicit-constructor)
    Poly(const Rational& c);  // NOLINT(google-explicit-constructor)
    static Poly var(Var v, int e = 1);
    static Poly monomial(const Monomial& m, const Rational& c = 1);
    static Poly from_terms(std::vector<Term> terms);  // sorts and combines

    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }
    Rational constant_value() const;  // requires is_constant()
    const Term& leading() const { return terms_.front(); }

    int degree(Var v) const;      // max exponent; 0 for zero poly
    int min_degree(Var v) const;  // min exponent; 0 for zero poly
    std::set<Var> variables() const;
    bool involves(Var v) const;
    bool involves_kind(VarKind k) const;
    // Coefficients with respect to one variable (exponent -> coefficient).
    std::map<int, Poly> coefficients_in(Var v) const;
    // Minimum exponent of each variable over all terms.
    Monomial content_monomial() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly mul_term(const Monomial& m, const Rational& c) const;
    Poly pow(unsigned k) const;

    // Simultaneous substitution. Variables with negative exponents need an
    // image that is a single term, otherwise DivisionByZero/NotAtomFactorable
    // semantics apply upstream; here a non-monomial image raises
    // NotAtomFactorable.
    Poly substitute(const std::map<Var, Poly>& images) const;
    Poly map_vars(const std::function<Var(Var)>& f) const;

    bool operator==(const Poly& o) const;
    // Total order used for canonical sorting of atoms.
    friend int compare(const Poly& a, const Poly& b);

    std::string to_string() const;

private:
    static Poly merge_add(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract);
    std::vector<Term> terms_;
};

std::string rational_to_string(const Rational& q);

}  // namespace lax
