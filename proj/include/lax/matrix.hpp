#pragma once

#include <functional>
#include <string>
#include <vector>

#include "lax/algebra.hpp"

namespace lax {

// Dense rows x cols matrix of algebra elements. Products keep the order of
// the factors, so entries never need to commute.
class OpMatrix {
public:
    OpMatrix() = default;
    OpMatrix(int rows, int cols, Mode mode = Mode::Rational);
    static OpMatrix identity(int n, Mode mode = Mode::Rational);
    static OpMatrix diagonal(const std::vector<AlgebraElement>& d);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Mode mode() const { return mode_; }

    // 1-based access.
    AlgebraElement& operator()(int i, int j) { return e_[index(i, j)]; }
    const AlgebraElement& operator()(int i, int j) const { return e_[index(i, j)]; }

    OpMatrix operator+(const OpMatrix& o) const;
    OpMatrix operator-(const OpMatrix& o) const;
    OpMatrix operator*(const OpMatrix& o) const;
    // Scalar on the left of every entry.
    friend OpMatrix operator*(const AlgebraElement& s, const OpMatrix& m);
    bool operator==(const OpMatrix& o) const;

    OpMatrix map(const std::function<AlgebraElement(const AlgebraElement&)>& f) const;
    OpMatrix map_coefficients(const std::function<RatFun(const RatFun&)>& f) const;
    OpMatrix transpose() const;
    OpMatrix block(int row0, int col0, int rows, int cols) const;  // 1-based corner
    bool is_zero() const;

    // One line per row, entries separated by " | ".
    std::string to_string() const;

private:
    std::size_t index(int i, int j) const;
    int rows_ = 0, cols_ = 0;
    Mode mode_ = Mode::Rational;
    std::vector<AlgebraElement> e_;
};

// Entrywise tensor-factor placement.
OpMatrix embed(const OpMatrix& m, unsigned factor);

// Matrix JSON: {"signature":{...},"rows":..,"cols":..,"entries":[[..]]}.
std::string matrix_to_json(const OpMatrix& m, const Signature& sig);
struct ParsedMatrix {
    OpMatrix matrix;
    Signature signature;
};
ParsedMatrix matrix_from_json(const std::string& text);

// Square or rectangular matrix from rows of canonical entry text.
OpMatrix matrix_from_rows(const std::vector<std::vector<std::string>>& rows, Mode mode);

std::string to_latex(const AlgebraElement& e);
std::string to_latex(const OpMatrix& m);

}  // namespace lax
