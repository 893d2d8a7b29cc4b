#include <doctest.h>

#include "lax/identities.hpp"

using namespace lax;

TEST_CASE("simplification identities for all sizes up to three") {
    const auto cases = simplification_cases(3);
    CHECK(cases.size() > 50);
    for (const auto& c : cases) {
        CAPTURE(c.to_string());
        CHECK(simplification_defect(c).is_zero());
    }
}

TEST_CASE("simplification identities fail outside their size conventions") {
    // Equal sizes for identity 6 and a longer previous row for identity 5.
    CHECK_FALSE(simplification_defect({6, 2, 2, 1, 0}).is_zero());
    CHECK_FALSE(simplification_defect({5, 3, 2, 1, 0}).is_zero());
    // Identity 1 with r' = s' is not covered either.
    CHECK_FALSE(simplification_defect({1, 3, 2, 1, 1}).is_zero());
}

TEST_CASE("block identities") {
    for (const IdentityReport& rep :
         {check_kk_blocks(1), check_kk_blocks(2), check_kk_pq_blocks(1, 1), check_kk_pq_blocks(1, 2),
          check_pqf_blocks(1, 1), check_pqf_blocks(2, 1), check_pqf_blocks(1, 2)}) {
        for (const auto& c : rep.checks) {
            CAPTURE(c.name);
            CAPTURE(c.detail);
            CHECK(c.ok);
        }
        CHECK(rep.ok);
    }
}
