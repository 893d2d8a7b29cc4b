#include "lax/coweight.hpp"

#include <json.hpp>

#include <algorithm>
#include <numeric>

#include "lax/errors.hpp"
#include "lax/parse.hpp"

namespace lax {

Coweight Coweight::from_epsilon(std::vector<int> d) {
    Coweight c;
    c.d_ = std::move(d);
    return c;
}

Coweight Coweight::from_fundamental(const std::vector<int>& c) {
    std::vector<int> d(c.size());
    int acc = 0;
    for (std::size_t j = 0; j < c.size(); ++j) {
        acc -= c[j];
        d[j] = acc;
    }
    return from_epsilon(std::move(d));
}

Coweight Coweight::from_pseudo_young(const std::vector<int>& rows) {
    std::vector<int> d(rows.rbegin(), rows.rend());
    for (auto& x : d) x = -x;
    return from_epsilon(std::move(d));
}

Coweight Coweight::varpi(int n, int i) {
    std::vector<int> d(std::size_t(n), 0);
    for (int j = i + 1; j <= n; ++j) d[std::size_t(j - 1)] = -1;
    return from_epsilon(std::move(d));
}

Coweight Coweight::alpha(int n, int i) {
    std::vector<int> d(std::size_t(n), 0);
    d[std::size_t(i - 1)] = 1;
    d[std::size_t(i)] = -1;
    return from_epsilon(std::move(d));
}

std::vector<int> Coweight::fundamental() const {
    std::vector<int> c(d_.size());
    if (d_.empty()) return c;
    c[0] = -d_[0];
    for (std::size_t i = 1; i < d_.size(); ++i) c[i] = d_[i - 1] - d_[i];
    return c;
}

std::vector<int> Coweight::pseudo_young() const {
    std::vector<int> rows(d_.rbegin(), d_.rend());
    for (auto& x : rows) x = -x;
    return rows;
}

bool Coweight::is_dominant() const {
    for (std::size_t i = 0; i + 1 < d_.size(); ++i)
        if (d_[i] < d_[i + 1]) return false;
    return true;
}

Coweight Coweight::operator+(const Coweight& o) const {
    if (n() != o.n()) throw SizeMismatch("coweights of different rank");
    auto d = d_;
    for (std::size_t j = 0; j < d.size(); ++j) d[j] += o.d_[j];
    return from_epsilon(std::move(d));
}

Coweight Coweight::operator-(const Coweight& o) const { return *this + o * -1; }

Coweight Coweight::operator*(int k) const {
    auto d = d_;
    for (auto& x : d) x *= k;
    return from_epsilon(std::move(d));
}

std::string Coweight::to_string() const {
    std::string s = "(";
    for (std::size_t j = 0; j < d_.size(); ++j) s += (j ? "," : "") + std::to_string(d_[j]);
    return s + ")";
}

std::vector<int> a_vector(const Coweight& total) {
    const auto& d = total.epsilon();
    if (std::accumulate(d.begin(), d.end(), 0) != 0)
        throw NotAdmissible("coefficients sum to " + std::to_string(std::accumulate(d.begin(), d.end(), 0)) +
                            ", not 0: " + total.to_string());
    std::vector<int> a;
    int acc = 0;
    for (std::size_t i = 0; i + 1 < d.size(); ++i) {
        acc += d[i];
        if (acc < 0) throw NotAdmissible("a_" + std::to_string(i + 1) + " = " + std::to_string(acc) + " < 0");
        a.push_back(acc);
    }
    return a;
}

Divisor::Divisor(Mode mode, int n, std::vector<DivisorPoint> points, Coweight infinity,
                 std::optional<Coweight> zero)
    : mode_(mode), n_(n), points_(std::move(points)), infinity_(std::move(infinity)) {
    if (n < 1) throw SizeMismatch("rank must be positive");
    if (infinity_.n() != n) throw SizeMismatch("coweight at infinity has rank " + std::to_string(infinity_.n()));
    if (mode == Mode::Rational && zero && !(*zero == Coweight::zero(n)))
        throw NotAdmissible("rational divisors carry no coefficient at 0");
    zero_ = zero ? *zero : Coweight::zero(n);
    if (zero_.n() != n) throw SizeMismatch("coweight at zero has wrong rank");
    for (const auto& p : points_) {
        if (p.coweight.n() != n) throw SizeMismatch("point coweight has wrong rank");
        if (!p.coweight.is_dominant())
            throw NotAdmissible("finite coefficient " + p.coweight.to_string() + " is not dominant");
        if (!p.x.is_constant() && !(p.x.is_monomial() && p.x.leading().coef == 1 &&
                                     p.x.leading().mono.factors().size() == 1 &&
                                     p.x.leading().mono.factors()[0].var.kind() == VarKind::X &&
                                     p.x.leading().mono.factors()[0].exp == 1))
            throw NotAdmissible("a point must be a symbol x[s] or a rational number");
        if (mode == Mode::Trig && p.x.is_zero()) throw NotAdmissible("trig divisors have no finite point at 0");
    }
    a_ = a_vector(total());
}

Coweight Divisor::lambda() const {
    Coweight c = Coweight::zero(n_);
    for (const auto& p : points_) c = c + p.coweight;
    return c;
}

Coweight Divisor::total() const { return lambda() + infinity_ + zero_; }

std::vector<Summand> Divisor::summands() const {
    std::vector<Summand> out;
    for (const auto& p : points_) {
        auto c = p.coweight.fundamental();
        for (int i = 1; i < n_; ++i)
            for (int k = 0; k < c[std::size_t(i)]; ++k) out.push_back({p.x, i, 1});
        for (int k = 0; k < std::abs(c[0]); ++k) out.push_back({p.x, 0, c[0] > 0 ? 1 : -1});
    }
    return out;
}

namespace {

using ojson = nlohmann::ordered_json;

std::string point_text(const Poly& x) {
    if (!x.is_constant()) return "x" + std::to_string(x.leading().mono.factors()[0].var.i());
    return x.constant_value().get_str();
}

ojson coweight_json(const Coweight& c) {
    ojson j;
    j["fundamental"] = c.fundamental();
    return j;
}

Coweight coweight_from(const ojson& j, int n) {
    std::vector<int> v;
    Coweight c;
    if (j.contains("fundamental")) {
        v = j.at("fundamental").get<std::vector<int>>();
        c = Coweight::from_fundamental(v);
    } else if (j.contains("epsilon")) {
        v = j.at("epsilon").get<std::vector<int>>();
        c = Coweight::from_epsilon(v);
    } else if (j.contains("young")) {
        v = j.at("young").get<std::vector<int>>();
        c = Coweight::from_pseudo_young(v);
    } else {
        throw ParseError("coweight needs a 'fundamental', 'epsilon' or 'young' list");
    }
    if (int(v.size()) != n) throw SizeMismatch("coweight of length " + std::to_string(v.size()) + " for n = " + std::to_string(n));
    return c;
}

}  // namespace

std::string Divisor::to_json() const {
    ojson j;
    j["n"] = n_;
    j["mode"] = lax::to_string(mode_);
    ojson pts = ojson::array();
    for (const auto& p : points_) {
        ojson e;
        e["x"] = point_text(p.x);
        e["coweight"] = coweight_json(p.coweight);
        pts.push_back(e);
    }
    j["points"] = pts;
    j["infinity"] = coweight_json(infinity_);
    j["zero"] = mode_ == Mode::Trig ? coweight_json(zero_) : ojson(nullptr);
    return j.dump();
}

Divisor Divisor::from_json(const std::string& text) {
    ojson j;
    try {
        j = ojson::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("divisor JSON: ") + e.what());
    }
    try {
        int n = j.at("n").get<int>();
        std::string m = j.value("mode", std::string("rational"));
        if (m != "rational" && m != "trig") throw ParseError("mode must be 'rational' or 'trig'");
        Mode mode = m == "rational" ? Mode::Rational : Mode::Trig;
        std::vector<DivisorPoint> points;
        for (const auto& e : j.value("points", ojson::array())) {
            RatFun x = parse_ratfun(e.at("x").get<std::string>());
            if (!x.is_polynomial()) throw ParseError("point must be a symbol or a number");
            points.push_back({x.num(), coweight_from(e.at("coweight"), n)});
        }
        Coweight inf = j.contains("infinity") && !j["infinity"].is_null() ? coweight_from(j["infinity"], n)
                                                                          : Coweight::zero(n);
        std::optional<Coweight> zero;
        if (j.contains("zero") && !j["zero"].is_null()) zero = coweight_from(j["zero"], n);
        return Divisor(mode, n, std::move(points), inf, zero);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("divisor JSON: ") + e.what());
    }
}

std::vector<int> transpose(const std::vector<int>& young) {
    std::vector<int> t;
    int cols = young.empty() ? 0 : std::max(0, young.front());
    for (int c = 1; c <= cols; ++c) {
        int h = 0;
        for (int r : young)
            if (r >= c) ++h;
        t.push_back(h);
    }
    return t;
}

std::vector<Poly> symbolic_points(int count, int first) {
    std::vector<Poly> xs;
    for (int s = 0; s < count; ++s) xs.push_back(Poly::var(Var::x(unsigned(first + s))));
    return xs;
}

Divisor divisor_from_young(Mode mode, const std::vector<int>& blambda, const std::vector<Poly>& xs,
                           const std::vector<int>& bmu, const std::optional<std::vector<int>>& bmu_minus) {
    const int n = int(blambda.size());
    if (int(bmu.size()) != n || (bmu_minus && int(bmu_minus->size()) != n))
        throw SizeMismatch("diagrams of different lengths");
    auto weakly_decreasing = [](const std::vector<int>& r) {
        return std::is_sorted(r.rbegin(), r.rend());
    };
    if (!weakly_decreasing(blambda) || !weakly_decreasing(bmu) || (bmu_minus && !weakly_decreasing(*bmu_minus)))
        throw SizeMismatch("pseudo Young diagrams must be weakly decreasing");
    if (n > 0 && blambda.back() < 0) throw SizeMismatch("blambda must have non-negative rows");
    int size = std::accumulate(blambda.begin(), blambda.end(), 0) + std::accumulate(bmu.begin(), bmu.end(), 0);
    if (bmu_minus) size += std::accumulate(bmu_minus->begin(), bmu_minus->end(), 0);
    if (size != 0) throw SizeMismatch("|blambda| + |bmu| = " + std::to_string(size) + ", not 0");
    auto cols = transpose(blambda);
    if (xs.size() != cols.size())
        throw SizeMismatch(std::to_string(cols.size()) + " columns but " + std::to_string(xs.size()) + " points");
    std::vector<DivisorPoint> points;
    for (std::size_t k = 0; k < cols.size(); ++k) points.push_back({xs[k], Coweight::varpi(n, n - cols[k])});
    std::optional<Coweight> zero;
    if (bmu_minus) zero = Coweight::from_pseudo_young(*bmu_minus);
    return Divisor(mode, n, std::move(points), Coweight::from_pseudo_young(bmu), zero);
}

}  // namespace lax
