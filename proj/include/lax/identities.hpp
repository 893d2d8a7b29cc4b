#pragma once

#include <string>
#include <vector>

#include "lax/ratfun.hpp"

namespace lax {

// The rational-function identities behind K Kbar = -I and its relatives.
// Row l-1 carries the variables b_t = p[1,t] (t <= a_prev) and row l the
// variables c_t = p[2,t] (t <= a_cur). With P_l(u) = prod_t (u - c_t),
// P_{l,r}(u) = prod_{t != r} (u - c_t) and similarly for row l-1:
//   1: 1 + sum_r P_{l-1,r'}(c_r - 1)/P_{l,r}(c_r) / (1 + b_{s'} - c_r) = 0
//   2: 1 + sum_r P_{l-1,r'}(c_r - 1)/P_{l,r}(c_r) / (b_{r'} - c_r)
//        = P_{l-1,r'}(b_{r'} - 1)/P_l(b_{r'})
//   3, 4: as 1, 2 without the leading 1
//   5: sum_r P_{l-1,r'}(c_r - 1)/P_{l,r}(c_r) = 0
//   6: sum_r P_{l-1}(c_r - 1)/P_{l,r}(c_r) = 1
struct SimplificationCase {
    int identity;      // 1..6
    int a_prev, a_cur;
    int r, s;          // r' and s' (s' unused by 2, 4, 5, 6)

    std::string to_string() const;
};

// Left side minus right side; zero exactly when the identity holds.
RatFun simplification_defect(const SimplificationCase& c);

// Every size pattern under which the identities are stated, with
// a_cur <= max_a and all admissible choices of r' != s':
//   1, 2: a_prev = a_cur + 1;
//   3, 4: a_cur = a_prev + 1 or a_cur = a_prev;
//   5, 6: a_cur = a_prev + 1.
std::vector<SimplificationCase> simplification_cases(int max_a);

struct IdentityCheck {
    std::string name;
    bool ok = true;
    std::string detail;
};

struct IdentityReport {
    bool ok = true;
    std::vector<IdentityCheck> checks;

    void add(std::string name, bool ok, std::string detail = {});
};

// blambda = 0, bmu = (1^r, (-1)^r): T = [[z - F, Kbar], [K, 0]] with
// K Kbar = -I_r, and the entries of K (resp. Kbar) commuting.
IdentityReport check_kk_blocks(int r);

// blambda = 0, bmu = (1^r, 0^s, (-1)^r): T = [[z - F, Q, Kbar], [-P, I, 0],
// [K, 0, 0]] with K Kbar = -I_r and [P_ij, Q_j'i'] = delta delta.
IdentityReport check_kk_pq_blocks(int r, int s);

// blambda = (1^r, 0^s), bmu = (0^s, (-1)^r): T = [[z - F, Q], [-P, I_s]]
// with F = x_1 I_r + Q P and [P_ij, Q_j'i'] = delta delta.
IdentityReport check_pqf_blocks(int r, int s);

}  // namespace lax
