#include "lax/matrix.hpp"

#include <json.hpp>

#include <regex>

#include "lax/errors.hpp"

namespace lax {

OpMatrix::OpMatrix(int rows, int cols, Mode mode)
    : rows_(rows), cols_(cols), mode_(mode), e_(std::size_t(rows * cols), AlgebraElement(RatFun(), mode)) {}

OpMatrix OpMatrix::identity(int n, Mode mode) {
    OpMatrix m(n, n, mode);
    for (int i = 1; i <= n; ++i) m(i, i) = AlgebraElement(RatFun(1), mode);
    return m;
}

OpMatrix OpMatrix::diagonal(const std::vector<AlgebraElement>& d) {
    OpMatrix m(int(d.size()), int(d.size()), d.empty() ? Mode::Rational : d.front().mode());
    for (std::size_t i = 0; i < d.size(); ++i) m(int(i + 1), int(i + 1)) = d[i];
    return m;
}

std::size_t OpMatrix::index(int i, int j) const {
    if (i < 1 || i > rows_ || j < 1 || j > cols_)
        throw SizeMismatch("matrix index (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
    return std::size_t((i - 1) * cols_ + (j - 1));
}

OpMatrix OpMatrix::operator+(const OpMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw SizeMismatch("adding matrices of different shapes");
    OpMatrix r = *this;
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] += o.e_[k];
    return r;
}

OpMatrix OpMatrix::operator-(const OpMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw SizeMismatch("subtracting matrices of different shapes");
    OpMatrix r = *this;
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] -= o.e_[k];
    return r;
}

OpMatrix OpMatrix::operator*(const OpMatrix& o) const {
    if (cols_ != o.rows_) throw SizeMismatch("multiplying matrices of incompatible shapes");
    OpMatrix r(rows_, o.cols_, mode_ == Mode::Trig || o.mode_ == Mode::Trig ? Mode::Trig : Mode::Rational);
    for (int i = 1; i <= rows_; ++i)
        for (int j = 1; j <= o.cols_; ++j) {
            AlgebraElement acc = r(i, j);
            for (int k = 1; k <= cols_; ++k) {
                const auto& a = (*this)(i, k);
                const auto& b = o(k, j);
                if (a.is_zero() || b.is_zero()) continue;
                acc += a * b;
            }
            r(i, j) = std::move(acc);
        }
    return r;
}

OpMatrix operator*(const AlgebraElement& s, const OpMatrix& m) {
    return m.map([&](const AlgebraElement& x) { return s * x; });
}

bool OpMatrix::operator==(const OpMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t k = 0; k < e_.size(); ++k)
        if (!(e_[k] == o.e_[k])) return false;
    return true;
}

OpMatrix OpMatrix::map(const std::function<AlgebraElement(const AlgebraElement&)>& f) const {
    OpMatrix r = *this;
    for (auto& x : r.e_) x = f(x);
    return r;
}

OpMatrix OpMatrix::map_coefficients(const std::function<RatFun(const RatFun&)>& f) const {
    return map([&](const AlgebraElement& x) { return x.map_coefficients(f); });
}

OpMatrix OpMatrix::transpose() const {
    OpMatrix r(cols_, rows_, mode_);
    for (int i = 1; i <= rows_; ++i)
        for (int j = 1; j <= cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

OpMatrix OpMatrix::block(int row0, int col0, int rows, int cols) const {
    OpMatrix r(rows, cols, mode_);
    for (int i = 1; i <= rows; ++i)
        for (int j = 1; j <= cols; ++j) r(i, j) = (*this)(row0 + i - 1, col0 + j - 1);
    return r;
}

bool OpMatrix::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

std::string OpMatrix::to_string() const {
    std::string s;
    for (int i = 1; i <= rows_; ++i) {
        for (int j = 1; j <= cols_; ++j) s += (j > 1 ? " | " : "") + (*this)(i, j).to_string();
        s += "\n";
    }
    return s;
}

OpMatrix embed(const OpMatrix& m, unsigned factor) {
    return m.map([factor](const AlgebraElement& x) { return embed(x, factor); });
}

namespace {
using ojson = nlohmann::ordered_json;
}

std::string matrix_to_json(const OpMatrix& m, const Signature& sig) {
    ojson j;
    j["signature"] = {{"mode", to_string(sig.mode)}, {"n", sig.n}, {"a", sig.a}};
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    ojson rows = ojson::array();
    for (int i = 1; i <= m.rows(); ++i) {
        ojson row = ojson::array();
        for (int k = 1; k <= m.cols(); ++k) row.push_back(m(i, k).to_string());
        rows.push_back(row);
    }
    j["entries"] = rows;
    return j.dump(2);
}

ParsedMatrix matrix_from_json(const std::string& text) {
    try {
        auto j = ojson::parse(text);
        Signature sig;
        const auto& js = j.at("signature");
        std::string mode = js.at("mode").get<std::string>();
        if (mode != "rational" && mode != "trig") throw ParseError("unknown mode '" + mode + "'");
        sig.mode = mode == "trig" ? Mode::Trig : Mode::Rational;
        sig.n = js.at("n").get<int>();
        sig.a = js.at("a").get<std::vector<std::vector<int>>>();
        int rows = j.at("rows").get<int>(), cols = j.at("cols").get<int>();
        const auto& entries = j.at("entries");
        if (int(entries.size()) != rows) throw SizeMismatch("entry rows do not match 'rows'");
        OpMatrix m(rows, cols, sig.mode);
        for (int i = 1; i <= rows; ++i) {
            const auto& row = entries.at(std::size_t(i - 1));
            if (int(row.size()) != cols) throw SizeMismatch("entry row length does not match 'cols'");
            for (int k = 1; k <= cols; ++k)
                m(i, k) = parse_element(row.at(std::size_t(k - 1)).get<std::string>(), sig.mode);
        }
        return {std::move(m), std::move(sig)};
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("matrix JSON: ") + e.what());
    }
}

OpMatrix matrix_from_rows(const std::vector<std::vector<std::string>>& rows, Mode mode) {
    const int r = int(rows.size()), c = rows.empty() ? 0 : int(rows.front().size());
    OpMatrix m(r, c, mode);
    for (int i = 1; i <= r; ++i) {
        if (int(rows[std::size_t(i - 1)].size()) != c) throw SizeMismatch("ragged matrix rows");
        for (int j = 1; j <= c; ++j) m(i, j) = parse_element(rows[std::size_t(i - 1)][std::size_t(j - 1)], mode);
    }
    return m;
}

std::string to_latex(const AlgebraElement& e) {
    // Slots of the k-th tensor factor (k >= 2) carry a (k) superscript.
    static const std::vector<std::pair<std::regex, std::string>> rules = {
        {std::regex(R"(e\^\{q\[(\d+),(\d+);(\d+)\]\}\^\{(-?\d+)\})"), "e^{$4 q^{($3)}_{$1,$2}}"},
        {std::regex(R"(e\^\{q\[(\d+),(\d+);(\d+)\]\})"), "e^{q^{($3)}_{$1,$2}}"},
        {std::regex(R"(e\^\{q\[(\d+),(\d+)\]\}\^\{(-?\d+)\})"), "e^{$3 q_{$1,$2}}"},
        {std::regex(R"(e\^\{q\[(\d+),(\d+)\]\})"), "e^{q_{$1,$2}}"},
        {std::regex(R"((D|wh|p)\[(\d+),(\d+);(\d+)\])"), "$1^{($4)}_{$2,$3}"},
        {std::regex(R"(D\[(\d+),(\d+)\])"), "D_{$1,$2}"},
        {std::regex(R"(wh\[(\d+),(\d+)\])"), "wh_{$1,$2}"},
        {std::regex(R"(\bwh(\^\{\(\d+\)\})?_)"), "\\hat{w}$1_"},
        {std::regex(R"(p\[(\d+),(\d+)\])"), "p_{$1,$2}"},
        {std::regex(R"(x\[(\d+)\])"), "x_{$1}"},
        {std::regex(R"(y\[(\d+)\])"), "y_{$1}"},
        {std::regex(R"(\^(-?\d+))"), "^{$1}"},
        {std::regex(R"(\{1 q)"), "{q"},
        {std::regex(R"(\{-1 q)"), "{-q"},
        {std::regex(R"( \+ \(-1\)\*)"), " - "},
        {std::regex(R"(\(1\)\*)"), ""},
        {std::regex(R"(\(-1\)\*)"), "-"},
        {std::regex(R"(\((-?\d+)\)( [-+]|$))"), "$1$2"},
        {std::regex(R"(\*)"), " "},
        {std::regex(R"(\beps\b)"), "\\epsilon"},
    };
    std::string s = e.to_string();
    for (const auto& [re, rep] : rules) s = std::regex_replace(s, re, rep);
    return s;
}

std::string to_latex(const OpMatrix& m) {
    std::string s = "\\begin{pmatrix}\n";
    for (int i = 1; i <= m.rows(); ++i) {
        for (int j = 1; j <= m.cols(); ++j) s += (j > 1 ? " & " : "  ") + to_latex(m(i, j));
        s += i < m.rows() ? " \\\\\n" : "\n";
    }
    return s + "\\end{pmatrix}\n";
}

}  // namespace lax
