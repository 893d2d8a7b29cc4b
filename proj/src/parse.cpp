#include "lax/parse.hpp"

#include <algorithm>

namespace lax {

std::optional<Var> variable_for(const Identifier& id) {
    const auto& ix = id.index;
    auto bare = [&](Var v) -> std::optional<Var> {
        if (!ix.empty()) return std::nullopt;
        return v;
    };
    auto positive = [&](std::size_t n) {
        return ix.size() == n &&
               std::all_of(ix.begin(), ix.end(), [](int k) { return k >= 0; });
    };
    if (id.name == "z") return bare(Var::z());
    if (id.name == "w") return bare(Var::w());
    if (id.name == "u") return bare(Var::u());
    if (id.name == "v") return bare(Var::v());
    if (id.name == "eps") return bare(Var::eps());
    if (id.name == "p" && positive(2)) return Var::p(unsigned(ix[0]), unsigned(ix[1]), unsigned(id.factor));
    if (id.name == "wh" && positive(2))
        return Var::what(unsigned(ix[0]), unsigned(ix[1]), unsigned(id.factor));
    if (id.name == "x" && positive(1)) return Var::x(unsigned(ix[0]));
    if (id.name == "y" && positive(1)) return Var::y(unsigned(ix[0]));
    // Plain names such as x1 or x2 are accepted for divisor points.
    if (id.name.size() > 1 && id.name[0] == 'x' && ix.empty() &&
        std::all_of(id.name.begin() + 1, id.name.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        return Var::x(unsigned(std::stoul(id.name.substr(1))));
    return std::nullopt;
}

RatFun parse_ratfun(std::string_view text) {
    ExpressionParser<RatFun>::Hooks hooks{
        nullptr,
        [](const RatFun& a, const RatFun& b) { return a / b; },
        [](const RatFun& a, int k) { return a.pow(k); },
    };
    return ExpressionParser<RatFun>(text, std::move(hooks)).parse();
}

}  // namespace lax
