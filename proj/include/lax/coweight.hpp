#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lax/mode.hpp"
#include "lax/poly.hpp"

namespace lax {

// GL_n coweight stored in the epsilon basis: d_j = eps_j(mu), j = 1..n.
class Coweight {
public:
    Coweight() = default;
    static Coweight from_epsilon(std::vector<int> d);
    // Coefficients (c_0, ..., c_{n-1}) in the basis varpi_0..varpi_{n-1},
    // varpi_i = -(eps_{i+1} + ... + eps_n).
    static Coweight from_fundamental(const std::vector<int>& c);
    // d_i = -rows_{n-i+1}
    static Coweight from_pseudo_young(const std::vector<int>& rows);
    static Coweight zero(int n) { return from_epsilon(std::vector<int>(std::size_t(n), 0)); }
    static Coweight varpi(int n, int i);
    static Coweight alpha(int n, int i);  // eps_i - eps_{i+1}

    int n() const { return int(d_.size()); }
    const std::vector<int>& epsilon() const { return d_; }
    std::vector<int> fundamental() const;
    std::vector<int> pseudo_young() const;
    int eps(int j) const { return d_[std::size_t(j - 1)]; }  // 1-based
    int alpha_value(int i) const { return eps(i) - eps(i + 1); }
    bool is_dominant() const;

    Coweight operator+(const Coweight& o) const;
    Coweight operator-(const Coweight& o) const;
    Coweight operator*(int k) const;
    bool operator==(const Coweight&) const = default;

    std::string to_string() const;

private:
    std::vector<int> d_;
};

// One fundamental summand gamma * varpi_i at x (gamma = -1 only for i = 0).
struct Summand {
    Poly x;
    int i;
    int gamma;
};

struct DivisorPoint {
    Poly x;  // symbolic x[s] or an exact rational
    Coweight coweight;
};

// A Lambda^+-valued divisor on P^1 with its a-vector.
class Divisor {
public:
    // Validates dominance, nonzero trig points and admissibility
    // (NotAdmissible otherwise).
    Divisor(Mode mode, int n, std::vector<DivisorPoint> points, Coweight infinity,
            std::optional<Coweight> zero = std::nullopt);

    Mode mode() const { return mode_; }
    int n() const { return n_; }
    const std::vector<DivisorPoint>& points() const { return points_; }
    const Coweight& infinity() const { return infinity_; }
    // Coefficient at 0 (trig mode); the zero coweight in rational mode.
    const Coweight& at_zero() const { return zero_; }
    const std::vector<int>& a() const { return a_; }  // a_1..a_{n-1}
    int a(int i) const { return i <= 0 || i >= n_ ? 0 : a_[std::size_t(i - 1)]; }

    Coweight lambda() const;  // sum of finite coefficients
    Coweight total() const;   // lambda + mu (+ mu^- in trig mode)
    std::vector<Summand> summands() const;

    // JSON text in the documented schema.
    std::string to_json() const;
    static Divisor from_json(const std::string& text);

private:
    Mode mode_;
    int n_;
    std::vector<DivisorPoint> points_;
    Coweight infinity_;
    Coweight zero_;
    std::vector<int> a_;
};

// a_i = eps_1 + ... + eps_i of the total coweight; NotAdmissible unless the
// sum vanishes and every a_i is a non-negative integer.
std::vector<int> a_vector(const Coweight& total);

// D = sum_i varpi_{n - blambda^t_i}[x_i] + mu[infinity] (+ mu^-[0]).
Divisor divisor_from_young(Mode mode, const std::vector<int>& blambda, const std::vector<Poly>& xs,
                           const std::vector<int>& bmu,
                           const std::optional<std::vector<int>>& bmu_minus = std::nullopt);

std::vector<int> transpose(const std::vector<int>& young);

// Symbolic divisor points x[1], x[2], ...
std::vector<Poly> symbolic_points(int count, int first = 1);

}  // namespace lax
