#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "lax/mode.hpp"
#include "lax/ratfun.hpp"

namespace lax {

// Ranks and slot counts of the algebra an element lives in. One entry of
// `a` per tensor factor.
struct Signature {
    Mode mode = Mode::Rational;
    int n = 0;
    std::vector<std::vector<int>> a;

    int tensor_factors() const { return int(a.size()); }
    bool operator==(const Signature&) const = default;
};

using SignaturePtr = std::shared_ptr<const Signature>;

// The coordinate variable a shift slot acts on: p[i,r] (rational) or
// wh[i,r] (trig), in the given tensor factor.
Var slot_var(Mode mode, int i, int r, int factor = 1);

// Product of e^{m q[i,r]} (rational) or D[i,r]^m (trig), keyed by slot_var.
class Shift {
public:
    Shift() = default;
    static Shift of(Var slot, int m = 1) { return Shift(Monomial::of(slot, m)); }

    const Monomial& exps() const { return m_; }
    bool is_one() const { return m_.is_one(); }
    int exponent(Var slot) const { return m_.exponent(slot); }

    Shift operator*(const Shift& o) const { return Shift(m_ * o.m_); }
    Shift inverse() const { return Shift(m_.inverse()); }
    bool operator==(const Shift&) const = default;

    std::string to_string(Mode mode) const;

private:
    explicit Shift(Monomial m) : m_(std::move(m)) {}
    Monomial m_;
};

struct ShiftOrder {
    bool operator()(const Shift& a, const Shift& b) const { return lex_compare(a.exps(), b.exps()) > 0; }
};

// The automorphism f |-> S f S^{-1} on coefficients: p -> p - m (rational),
// wh -> v^m wh (trig).
RatFun shift(const RatFun& f, const Shift& s, Mode mode);
// Single-slot form used by the kernel tests.
RatFun shift(const RatFun& f, Var slot, int m, Mode mode);

// Normal-ordered element: coefficients to the left of shift monomials.
class AlgebraElement {
public:
    using Terms = std::map<Shift, RatFun, ShiftOrder>;

    AlgebraElement() = default;
    AlgebraElement(RatFun scalar, Mode mode = Mode::Rational);  // NOLINT(google-explicit-constructor)
    AlgebraElement(long c) : AlgebraElement(RatFun(c)) {}  // NOLINT(google-explicit-constructor)
    static AlgebraElement term(RatFun coef, Shift s, Mode mode, SignaturePtr sig = nullptr);

    Mode mode() const { return mode_; }
    const SignaturePtr& signature() const { return sig_; }
    AlgebraElement with_signature(SignaturePtr sig) const;
    const Terms& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    // True when the only shift monomial is the identity.
    bool is_scalar() const;
    RatFun scalar_value() const;  // NotScalar otherwise
    RatFun coefficient(const Shift& s) const;

    AlgebraElement operator-() const;
    friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b);
    friend AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b);
    friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
    AlgebraElement& operator+=(const AlgebraElement& o) { return *this = *this + o; }
    AlgebraElement& operator-=(const AlgebraElement& o) { return *this = *this - o; }
    AlgebraElement& operator*=(const AlgebraElement& o) { return *this = *this * o; }

    // Coefficient-wise operations that commute with every shift, such as
    // substitutions of spectral variables or of divisor points.
    AlgebraElement map_coefficients(const std::function<RatFun(const RatFun&)>& f) const;
    AlgebraElement substitute(const std::map<Var, Poly>& images) const;
    // Renames P/WHat variables and slots between tensor factors.
    AlgebraElement map_factors(const std::function<unsigned(unsigned)>& f) const;

    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);

    std::string to_string() const;

private:
    Mode mode_ = Mode::Rational;
    SignaturePtr sig_;
    Terms terms_;
};

AlgebraElement commutator(const AlgebraElement& a, const AlgebraElement& b);
// x placed in tensor factor k (all its P/WHat variables and slots move from 1 to k).
AlgebraElement embed(const AlgebraElement& x, unsigned k, SignaturePtr sig = nullptr);
// tensor(a, b) = embed(a, 1) * embed(b, 2) for plain elements.
AlgebraElement tensor(const AlgebraElement& a, const AlgebraElement& b, SignaturePtr sig = nullptr);

// prod Gamma(L)^{e}, acting by conjugation through Gamma(x+1) = x Gamma(x).
struct GammaGauge {
    struct Factor {
        Poly form;  // linear in P variables and divisor points
        int exponent;
    };
    std::vector<Factor> factors;
};

// Ad(S) X = S X S^{-1}: each e^{m.q} picks up prod_L [Gamma(L)/Gamma(L - k)]^e
// with k the total shift of L. Raises NonIntegerShift for fractional k.
AlgebraElement conjugate_by_gauge(const GammaGauge& g, const AlgebraElement& x);

// Monomial gauge U: p[i,r] -> p[i,r] + row_shift[i] and
// e^{m q[i,r]} -> sign[i]^m e^{m q[i,r]} (sign[i] = +1 or -1). Indexed by row.
struct MonomialGauge {
    std::vector<int> row_shift;
    std::vector<int> row_sign;
};
AlgebraElement conjugate_by_gauge(const MonomialGauge& u, const AlgebraElement& x);

// Parses the canonical text produced by AlgebraElement::to_string.
AlgebraElement parse_element(std::string_view text, Mode mode);

}  // namespace lax
