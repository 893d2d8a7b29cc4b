#pragma once

#include <string>
#include <vector>

#include "lax/coweight.hpp"
#include "lax/matrix.hpp"
#include "lax/series.hpp"

namespace lax {

// Square matrix of series in t = 1/z with algebra-valued coefficients.
class SeriesMatrix {
public:
    using Entry = Series<AlgebraElement>;

    explicit SeriesMatrix(int n, int prec = 0) : n_(n), e_(std::size_t(n * n), Entry(prec)) {}
    int n() const { return n_; }
    Entry& operator()(int i, int j) { return e_[std::size_t((i - 1) * n_ + (j - 1))]; }
    const Entry& operator()(int i, int j) const { return e_[std::size_t((i - 1) * n_ + (j - 1))]; }

private:
    int n_;
    std::vector<Entry> e_;
};

// Entrywise expansion at z = infinity, to absolute precision `prec` in 1/z.
SeriesMatrix expand_at_infinity(const OpMatrix& t, int prec);

// T = F G E with F lower and E upper unitriangular, G diagonal (stored in
// G(i,i)), computed by eliminating one pivot at a time. Each pivot's leading
// mode must be a single invertible term, else SingularLeadingMode.
struct SeriesGauss {
    SeriesMatrix F, G, E;
};
SeriesGauss series_gauss_decompose(const SeriesMatrix& t);

struct GeneratorCheck {
    std::string generator;
    bool ok = true;
    std::string difference;
};

struct CoproductReport {
    bool ok = true;
    std::vector<GeneratorCheck> checks;
    std::string to_json() const;
};

// Compares the low Drinfeld modes of Delta(T_1) = T_1 (x) T_2 against their
// images under the shifted coproduct: F_i and E_i up to the first mixed mode,
// and the first two nontrivial D_i modes. Both divisors are rational; their
// finite points must use distinct symbols. The `order` modes of each D_i
// below its leading power are also checked to vanish.
CoproductReport verify_coproduct_generators(const Divisor& d1, const Divisor& d2, int order = 4);

// (Delta (x) Id) Delta (T) = (Id (x) Delta) Delta (T), entrywise.
bool check_coassociativity(const OpMatrix& t1, const OpMatrix& t2, const OpMatrix& t3);

}  // namespace lax
