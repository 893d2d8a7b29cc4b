#pragma once

#include <vector>

#include "lax/coweight.hpp"
#include "lax/matrix.hpp"

namespace lax {

// T = F * G * E with F lower unitriangular, G diagonal, E upper unitriangular.
struct GaussFactors {
    OpMatrix F, G, E;
};

// A Lax matrix together with the divisor it was built from.
struct LaxMatrix {
    Divisor divisor;
    OpMatrix T;
    GaussFactors gauss;
    bool normalized = false;
};

// Slot data of the algebra attached to a divisor.
Signature signature_of(const Divisor& d);

GaussFactors build_gauss_factors(const Divisor& d);
// Unnormalized T_D(z).
LaxMatrix build_lax(const Divisor& d);
// T_D(z) / Z_0(z); raises NotPolynomial if any coefficient keeps a pole in z.
LaxMatrix normalize_and_check_polynomial(const LaxMatrix& t);
// The closed-form degree-one matrix; NotLinearCase unless the divisor comes
// from pseudo Young diagrams with blambda_n = 0 and bmu_n = -1.
LaxMatrix build_linear_lax(const Divisor& d);

// Throws NotPolynomial naming the entry and the surviving atom.
void check_polynomial_in_z(const OpMatrix& m);

// prod_i g_i(z + i - 1), asserted to be free of shifts.
RatFun qdet_image(const Divisor& d);
// prod_s prod_{k = i_s}^{n-1} (z - x_s + k)^{gamma_s}
RatFun qdet_closed_form(const Divisor& d);

// Divisor with the coefficient of finite point s (0-based) moved to infinity.
Divisor divisor_moved_to_infinity(const Divisor& d, std::size_t s);
// x_s -> infinity limit of T * (-x_s)^{lambda_s}; for a pure varpi_0
// coefficient this is the exact relation T' = (z - x_s)^{-gamma} T.
// Works on the unnormalized matrix; the result carries the moved divisor.
LaxMatrix normalized_limit(const LaxMatrix& t, std::size_t s);

// (A (x) B)_{ij} = sum_k a_{ik} (x) b_{kj}, B placed in the tensor factors
// after the `left_factors` used by A.
OpMatrix fuse(const OpMatrix& a, const OpMatrix& b, unsigned left_factors = 1);

// z-coefficients of T_11(z) + eps * T_22(z), lowest power first.
std::vector<AlgebraElement> commuting_hamiltonians_n2(const OpMatrix& t, const RatFun& eps);
bool pairwise_commute(const std::vector<AlgebraElement>& xs);

// Coefficient of z^k in an element whose coefficients are polynomial in z.
AlgebraElement z_coefficient(const AlgebraElement& e, int k, Var z = Var::z());
int z_degree(const AlgebraElement& e, Var z = Var::z());

}  // namespace lax
