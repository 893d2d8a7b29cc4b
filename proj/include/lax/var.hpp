#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace lax {

// Variable kinds in their term-order significance: Z is the most significant
// variable of the lexicographic order, Eps the least.
enum class VarKind : std::uint8_t {
    Z = 0,     // spectral parameter
    W = 1,     // second spectral parameter (RTT checks)
    U = 2,     // third spectral parameter (Yang-Baxter checks)
    P = 3,     // p_{i,r}, rational mode
    WHat = 4,  // w_{i,r}^{1/2}, trigonometric mode
    X = 5,     // divisor point x_s
    Y = 6,     // parabolic Verma parameter y_a
    V = 7,     // quantum parameter v
    Eps = 8,   // free scalar parameter (coupling constant)
};

// A variable packed into one integer whose natural order is the term order.
// P and WHat carry a row index i, a slot index r and a tensor factor (1-based);
// X and Y carry their point index in i.
class Var {
public:
    constexpr Var() = default;
    constexpr Var(VarKind kind, unsigned factor, unsigned i, unsigned r)
        : key_((std::uint64_t(kind) << 56) | (std::uint64_t(factor & 0xff) << 48) |
               (std::uint64_t(i & 0xffffff) << 24) | std::uint64_t(r & 0xffffff)) {}

    static constexpr Var z() { return {VarKind::Z, 0, 0, 0}; }
    static constexpr Var w() { return {VarKind::W, 0, 0, 0}; }
    static constexpr Var u() { return {VarKind::U, 0, 0, 0}; }
    static constexpr Var v() { return {VarKind::V, 0, 0, 0}; }
    static constexpr Var eps() { return {VarKind::Eps, 0, 0, 0}; }
    static constexpr Var p(unsigned i, unsigned r, unsigned factor = 1) {
        return {VarKind::P, factor, i, r};
    }
    static constexpr Var what(unsigned i, unsigned r, unsigned factor = 1) {
        return {VarKind::WHat, factor, i, r};
    }
    static constexpr Var x(unsigned s) { return {VarKind::X, 0, s, 0}; }
    static constexpr Var y(unsigned a) { return {VarKind::Y, 0, a, 0}; }
    static constexpr Var from_key(std::uint64_t key) {
        Var v;
        v.key_ = key;
        return v;
    }

    constexpr VarKind kind() const { return VarKind(key_ >> 56); }
    constexpr unsigned factor() const { return unsigned((key_ >> 48) & 0xff); }
    constexpr unsigned i() const { return unsigned((key_ >> 24) & 0xffffff); }
    constexpr unsigned r() const { return unsigned(key_ & 0xffffff); }
    constexpr std::uint64_t key() const { return key_; }

    // Same variable moved to another tensor factor (only meaningful for P/WHat).
    constexpr Var with_factor(unsigned f) const { return Var(kind(), f, i(), r()); }

    constexpr auto operator<=>(const Var&) const = default;

    std::string name() const;

private:
    std::uint64_t key_ = 0;
};

}  // namespace lax
