#include <iostream>

#include "lax/acceptance.hpp"

int main() {
    const auto results = lax::run_acceptance_suite(
        [](const lax::CriterionResult& r) { std::cout << lax::format_line(r) << std::endl; });
    std::cout << '\n' << lax::summary_table(results);
    for (const auto& r : results)
        if (!r.ok) return 1;
    return 0;
}
