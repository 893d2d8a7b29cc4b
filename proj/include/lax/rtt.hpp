#pragma once

#include <string>
#include <vector>

#include "lax/matrix.hpp"

namespace lax {

enum class RKind { Rational, Trig, Finite };
std::string to_string(RKind k);

// Scalar n^2 x n^2 matrix; the pair (i,k) of 1-based indices maps to the
// 0-based position (i-1)*n + (k-1).
class RMatrix {
public:
    explicit RMatrix(int n) : n_(n), e_(std::size_t(n * n * n * n)) {}
    int n() const { return n_; }
    RatFun& at(int i, int k, int j, int l) { return e_[pos(i, k, j, l)]; }
    const RatFun& at(int i, int k, int j, int l) const { return e_[pos(i, k, j, l)]; }

private:
    std::size_t pos(int i, int k, int j, int l) const {
        const int row = (i - 1) * n_ + (k - 1), col = (j - 1) * n_ + (l - 1);
        return std::size_t(row * n_ * n_ + col);
    }
    int n_;
    std::vector<RatFun> e_;
};

// (z - w) Id + P
RMatrix rational_r(int n, Var z = Var::z(), Var w = Var::w());
RMatrix trig_r(int n, Var z = Var::z(), Var w = Var::w());
RMatrix finite_r(int n);

// R_12 R_13 R_23 = R_23 R_13 R_12 in (C^n)^{(x)3}, spectral parameters z, w, u.
bool check_yang_baxter(RKind kind, int n);

struct RttFailure {
    int i, k, j, l;
    std::string difference;
};

struct RttReport {
    bool ok = true;
    int components = 0;
    std::vector<RttFailure> failures;
    std::string to_json() const;
};

// R A_1 B_2 = B_2 A_1 R, componentwise.
RttReport verify_rtt(const RMatrix& r, const OpMatrix& a, const OpMatrix& b);
// R(z,w) T_1(z) T_2(w) = T_2(w) T_1(z) R(z,w) with T(w) obtained by z -> w.
RttReport verify_rtt(const OpMatrix& t, RKind kind);

// T(z) = z T^+ - T^-; NotLinearCase unless every coefficient has z-degree <= 1.
struct FiniteSplit {
    OpMatrix plus, minus;
};
FiniteSplit split_finite_rtt(const OpMatrix& t);
// The three finite relations for (T^+,T^+), (T^-,T^-), (T^-,T^+).
std::vector<RttReport> verify_finite_rtt(const FiniteSplit& s);

// Delta(T) = T (x) T in the tensor algebra.
OpMatrix coproduct(const OpMatrix& t1, const OpMatrix& t2);

}  // namespace lax
