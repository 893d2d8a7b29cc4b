#pragma once

#include <vector>

#include "lax/poly.hpp"

namespace lax::detail {

// Candidate linear forms that may divide p (p content free, nonnegative
// exponents). They come from rational roots of univariate restrictions lifted
// to first order, so the caller must confirm each by exact division.
std::vector<Poly> linear_factor_candidates(const Poly& p);

}  // namespace lax::detail
