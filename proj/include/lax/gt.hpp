#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lax/algebra.hpp"
#include "lax/coweight.hpp"
#include "lax/matrix.hpp"

namespace lax {

// Frozen-coordinate data of a parabolic Verma module of gl_n whose Levi
// blocks have the sizes of the columns of blambda. Rows are 1-based.
struct GTLayout {
    int n = 0;
    std::vector<int> blambda;    // padded to length n
    std::vector<int> columns;    // blambda^t
    std::vector<std::vector<int>> frozen;  // frozen[i - 1] for row i = 1..n
    std::vector<std::vector<int>> J;       // non-frozen coordinates of row i
    std::vector<int> a;                    // a_1..a_{n-1}

    const std::vector<int>& nonfrozen(int i) const;  // empty outside 1..n
    // Slot r of p[i, r] carrying the coordinate (i, k), k in J_i.
    int slot(int i, int k) const;
    // y'_a = y_a - (blambda^t_1 + ... + blambda^t_a) + n + 1
    Poly y_prime(int column) const;
    // i_k = n - blambda^t_k
    int row_of_point(int k) const { return n - columns[std::size_t(k - 1)]; }
    // a_{i-1} + a_{i+1} + 1 + blambda_{n-i} + blambda_{n-i+1}
    int beta(int i) const;
    // sum_k varpi_{i_k}[x_k] - varpi_0[infinity] with symbolic points.
    Divisor divisor() const;
};

// BadDiagram unless blambda is a partition of n with blambda_n = 0. The
// frozen rule's |J_i| is cross-checked against the divisor's a-vector.
GTLayout layout(const std::vector<int>& blambda, int n);

// Images of E_ii (i = 1..n), E_{i,i+1} and E_{i+1,i} (i = 1..n-1) in the
// difference algebra, with y'_a written in the symbols y[a].
struct GTImages {
    std::vector<AlgebraElement> diagonal, raising, lowering;

    const AlgebraElement& E(int i, int j) const;
};
GTImages gt_images(const GTLayout& l);

// Relations of gl_n among the tridiagonal images: Cartan and root commutators
// and the Serre relations. Returns the names of the relations that fail.
std::vector<std::string> failed_gl_relations(const GTImages& images);

// The gauges S (Gamma factors) and U (monomial) of the comparison.
GammaGauge gt_gamma_gauge(const GTLayout& l);
MonomialGauge gt_monomial_gauge(const GTLayout& l);

// Ad(U) Ad(S) applied to the tridiagonal entries of the normalized Lax
// matrix of l.divisor(); other entries are left zero.
OpMatrix gauged_tridiagonal(const GTLayout& l);

struct GTEntryCheck {
    int i = 0, j = 0;
    std::string gauged, expected;
    bool ok = true;
};

struct GTReport {
    GTLayout layout;
    bool ok = true;
    std::vector<GTEntryCheck> entries;

    std::optional<GTEntryCheck> first_mismatch() const;
    std::string to_json() const;
};

// Compares the gauged tridiagonal entries, with x_k replaced by y'_k, with
// the twisted evaluation T_ii -> z - E_ii - 1, T_{i,i+1} -> E_{i,i+1},
// T_{i+1,i} -> E_{i+1,i} followed by gt_images.
GTReport gauge_and_compare(const std::vector<int>& blambda, int n);

}  // namespace lax
