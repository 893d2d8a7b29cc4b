#pragma once

#include <functional>
#include <vector>

namespace lax::detail {

// Visits every slot tuple (r_i, ..., r_{j-1}) with 1 <= r_k <= slots(k);
// the visitor reads r[k] for the slot chosen in row k.
template <class Slots>
void for_each_slot_tuple(int i, int j, Slots slots, const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> r(std::size_t(j + 1), 0);
    std::function<void(int)> rec = [&](int k) {
        if (k == j) {
            visit(r);
            return;
        }
        for (int s = 1; s <= slots(k); ++s) {
            r[std::size_t(k)] = s;
            rec(k + 1);
        }
    };
    rec(i);
}

}  // namespace lax::detail
