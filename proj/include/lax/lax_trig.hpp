#pragma once

#include <cstddef>

#include "lax/lax_rational.hpp"

namespace lax {

// Trigonometric Lax matrix over the v-difference algebra. The framing
// coweights are read off the divisor: mu^+ at infinity and mu^- at zero.
struct TrigLaxMatrix {
    Divisor divisor;
    OpMatrix T;
    GaussFactors gauss;
    bool normalized = false;

    const Coweight& mu_plus() const { return divisor.infinity(); }
    const Coweight& mu_minus() const { return divisor.at_zero(); }
};

GaussFactors build_gauss_factors_trig(const Divisor& d);
// Unnormalized T_D(z) = F G E.
TrigLaxMatrix build_lax_trig(const Divisor& d);

// z^{eps_1(lambda + mu^-)} / Z_0(z)
RatFun trig_normalization_factor(const Divisor& d);
// Applies the normalization factor; NotPolynomial if a pole in z survives.
TrigLaxMatrix normalize_and_check_polynomial_trig(const TrigLaxMatrix& t);

// Closed-form degree-one matrix; NotLinearCase unless blambda_n = 0,
// bmu^-_n = 0 and bmu^+_n = -1.
TrigLaxMatrix build_linear_lax_trig(const Divisor& d);

// T_11(z) T_22(v^-2 z) - v^-1 T_12(z) T_21(v^-2 z) for n = 2; NotScalar if
// a shift survives.
RatFun qdet2_trig(const OpMatrix& t);

// prod_i g_i(v^{2(i-1)} z) from the built diagonal; NotScalar if a shift
// survives.
RatFun qdet_image_trig(const Divisor& d);
// prod_i (v^{2(i-1)} z)^{eps_i(mu^+)} prod_s prod_{k=i_s}^{n-1} (1 - v^{-2k} x_s/z)^{gamma_s}
RatFun qdet_closed_form_trig(const Divisor& d);

enum class LimitDirection { ToZero, ToInfinity };

// Divisor with the coefficient of finite point s (0-based) moved to 0.
Divisor divisor_moved_to_zero(const Divisor& d, std::size_t s);
// x_s -> 0 or x_s -> infinity limit of the unnormalized matrix. Towards
// infinity the columns are first scaled by (-x_s)^{eps_j}; a pure varpi_0
// coefficient is divided out exactly instead.
TrigLaxMatrix limits_trig(const TrigLaxMatrix& t, std::size_t s, LimitDirection direction);

// The rational divisor with mu^+ + mu^- placed at infinity.
Divisor merged_rational_divisor(const Divisor& d);

// Expansion of T(z) diag(eps^{-d_j}) in eps under v = e^{eps/2},
// z = e^{eps z}, x_s = e^{eps x_s}, w_{i,r} = e^{eps (p_{i,r} - i/2)},
// D_{i,r} = -eps^{s_i} e^{-q_{i,r}}. Entry (i,j) of orders[k] is the
// eps^k coefficient, for k < order.
struct EpsExpansion {
    std::vector<OpMatrix> orders;
};
EpsExpansion expand_in_eps(const TrigLaxMatrix& t, int order);

// Runs expand_in_eps and checks that no negative power of eps appears and
// that the eps^0 term is build_lax of the merged divisor. Raises
// NegativeEpsPower or MismatchWithRational naming the entry.
LaxMatrix degenerate_to_rational(const TrigLaxMatrix& t, int order);

}  // namespace lax
