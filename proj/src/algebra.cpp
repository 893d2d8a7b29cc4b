#include "lax/algebra.hpp"

#include "lax/errors.hpp"
#include "lax/parse.hpp"

namespace lax {

Var slot_var(Mode mode, int i, int r, int factor) {
    return mode == Mode::Rational ? Var::p(unsigned(i), unsigned(r), unsigned(factor))
                                  : Var::what(unsigned(i), unsigned(r), unsigned(factor));
}

std::string Shift::to_string(Mode mode) const {
    std::string s;
    for (const auto& f : m_.factors()) {
        if (!s.empty()) s += "*";
        std::string idx = std::to_string(f.var.i()) + "," + std::to_string(f.var.r());
        if (f.var.factor() != 1) idx += ";" + std::to_string(f.var.factor());
        s += mode == Mode::Rational ? "e^{q[" + idx + "]}" : "D[" + idx + "]";
        if (f.exp != 1) s += "^{" + std::to_string(f.exp) + "}";
    }
    return s.empty() ? "1" : s;
}

namespace {

std::map<Var, Poly> shift_images(const Shift& s, Mode mode) {
    std::map<Var, Poly> images;
    for (const auto& f : s.exps().factors()) {
        if (mode == Mode::Rational)
            images.emplace(f.var, Poly::var(f.var) - Poly(long(f.exp)));
        else
            images.emplace(f.var, Poly::monomial(Monomial::of(f.var) * Monomial::of(Var::v(), f.exp)));
    }
    return images;
}

bool touches(const RatFun& f, const Shift& s) {
    for (const auto& e : s.exps().factors())
        if (f.involves(e.var)) return true;
    return false;
}

SignaturePtr merge_signatures(const SignaturePtr& a, const SignaturePtr& b) {
    if (!a) return b;
    if (!b || a == b) return a;
    if (!(*a == *b)) throw SignatureMismatch("elements from different algebras");
    return a;
}

}  // namespace

RatFun shift(const RatFun& f, const Shift& s, Mode mode) {
    if (s.is_one() || !touches(f, s)) return f;
    return f.substitute(shift_images(s, mode));
}

RatFun shift(const RatFun& f, Var slot, int m, Mode mode) {
    // The automorphism for slot^m is f(p) -> f(p - m); the operation is
    // phrased as "p -> p + m", hence the sign.
    return shift(f, Shift::of(slot, mode == Mode::Rational ? -m : m), mode);
}

// ---------------------------------------------------------- AlgebraElement

AlgebraElement::AlgebraElement(RatFun scalar, Mode mode) : mode_(mode) {
    if (!scalar.is_zero()) terms_.emplace(Shift{}, std::move(scalar));
}

AlgebraElement AlgebraElement::term(RatFun coef, Shift s, Mode mode, SignaturePtr sig) {
    AlgebraElement e;
    e.mode_ = mode;
    e.sig_ = std::move(sig);
    if (!coef.is_zero()) e.terms_.emplace(std::move(s), std::move(coef));
    return e;
}

AlgebraElement AlgebraElement::with_signature(SignaturePtr sig) const {
    AlgebraElement e = *this;
    e.sig_ = std::move(sig);
    if (e.sig_) e.mode_ = e.sig_->mode;
    return e;
}

bool AlgebraElement::is_scalar() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

RatFun AlgebraElement::scalar_value() const {
    if (!is_scalar()) throw NotScalar(to_string());
    return terms_.empty() ? RatFun() : terms_.begin()->second;
}

RatFun AlgebraElement::coefficient(const Shift& s) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? RatFun() : it->second;
}

AlgebraElement AlgebraElement::operator-() const {
    AlgebraElement e = *this;
    for (auto& [s, c] : e.terms_) c = -c;
    return e;
}

namespace {

// Shifts of a scalar element carry no mode information; take the mode from
// whichever side has a genuine shift.
Mode merged_mode(const AlgebraElement& a, const AlgebraElement& b) {
    bool a_shift = !a.is_scalar(), b_shift = !b.is_scalar();
    if (a_shift && b_shift && a.mode() != b.mode()) throw SignatureMismatch("rational and trig elements");
    if (a_shift || a.signature()) return a.mode();
    if (b_shift || b.signature()) return b.mode();
    return a.mode();
}

}  // namespace

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
    if (b.terms_.empty() && (!b.sig_ || a.sig_)) return a;
    if (a.terms_.empty() && (!a.sig_ || b.sig_)) return b;
    AlgebraElement out;
    out.mode_ = merged_mode(a, b);
    out.sig_ = merge_signatures(a.sig_, b.sig_);
    out.terms_ = a.terms_;
    for (const auto& [s, c] : b.terms_) {
        auto it = out.terms_.find(s);
        if (it == out.terms_.end()) {
            out.terms_.emplace(s, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) out.terms_.erase(it);
        }
    }
    return out;
}

AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) { return a + (-b); }

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
    AlgebraElement out;
    out.mode_ = merged_mode(a, b);
    out.sig_ = merge_signatures(a.sig_, b.sig_);
    if (a.terms_.empty() || b.terms_.empty()) return out;
    const Mode mode = out.mode_;
    for (const auto& [sa, ca] : a.terms_) {
        std::map<Var, Poly> images;
        bool have_images = false;
        for (const auto& [sb, cb] : b.terms_) {
            RatFun moved;
            if (sa.is_one() || !touches(cb, sa)) {
                moved = cb;
            } else {
                if (!have_images) {
                    images = shift_images(sa, mode);
                    have_images = true;
                }
                moved = cb.substitute(images);
            }
            RatFun c = ca * moved;
            if (c.is_zero()) continue;
            Shift s = sa * sb;
            auto it = out.terms_.find(s);
            if (it == out.terms_.end()) {
                out.terms_.emplace(std::move(s), std::move(c));
            } else {
                it->second += c;
                if (it->second.is_zero()) out.terms_.erase(it);
            }
        }
    }
    return out;
}

AlgebraElement AlgebraElement::map_coefficients(const std::function<RatFun(const RatFun&)>& f) const {
    AlgebraElement out;
    out.mode_ = mode_;
    out.sig_ = sig_;
    for (const auto& [s, c] : terms_) {
        RatFun d = f(c);
        if (!d.is_zero()) out.terms_.emplace(s, std::move(d));
    }
    return out;
}

AlgebraElement AlgebraElement::substitute(const std::map<Var, Poly>& images) const {
    return map_coefficients([&](const RatFun& c) { return c.substitute(images); });
}

AlgebraElement AlgebraElement::map_factors(const std::function<unsigned(unsigned)>& f) const {
    auto rename = [&](Var v) {
        if (v.kind() == VarKind::P || v.kind() == VarKind::WHat) return v.with_factor(f(v.factor()));
        return v;
    };
    AlgebraElement out;
    out.mode_ = mode_;
    for (const auto& [s, c] : terms_) {
        Shift t;
        for (const auto& e : s.exps().factors()) t = t * Shift::of(rename(e.var), e.exp);
        RatFun d = c.map_vars(rename);
        auto it = out.terms_.find(t);
        if (it == out.terms_.end())
            out.terms_.emplace(std::move(t), std::move(d));
        else
            it->second += d;
    }
    std::erase_if(out.terms_, [](const auto& e) { return e.second.is_zero(); });
    return out;
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.sig_ && b.sig_ && !(*a.sig_ == *b.sig_)) throw SignatureMismatch("comparing elements of different algebras");
    if (a.terms_.size() != b.terms_.size()) return false;
    auto x = a.terms_.begin();
    auto y = b.terms_.begin();
    for (; x != a.terms_.end(); ++x, ++y) {
        if (!(x->first == y->first)) return false;
        if (!equals(x->second, y->second)) return false;
    }
    return true;
}

std::string AlgebraElement::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [sh, c] : terms_) {
        if (!s.empty()) s += " + ";
        if (sh.is_one()) {
            s += terms_.size() == 1 ? c.to_string() : "(" + c.to_string() + ")";
        } else {
            s += "(" + c.to_string() + ")*" + sh.to_string(mode_);
        }
    }
    return s;
}

AlgebraElement commutator(const AlgebraElement& a, const AlgebraElement& b) { return a * b - b * a; }

AlgebraElement embed(const AlgebraElement& x, unsigned k, SignaturePtr sig) {
    AlgebraElement e = x.map_factors([k](unsigned) { return k; });
    return sig ? e.with_signature(std::move(sig)) : e;
}

AlgebraElement tensor(const AlgebraElement& a, const AlgebraElement& b, SignaturePtr sig) {
    if (!a.is_scalar() && !b.is_scalar() && a.mode() != b.mode())
        throw SignatureMismatch("tensor of rational and trig elements");
    auto check_plain = [](const AlgebraElement& e) {
        if (e.signature() && e.signature()->tensor_factors() != 1)
            throw SignatureMismatch("tensor expects plain elements");
    };
    check_plain(a);
    check_plain(b);
    AlgebraElement l = embed(a.with_signature(nullptr), 1);
    AlgebraElement r = embed(b.with_signature(nullptr), 2);
    AlgebraElement out = l * r;
    return sig ? out.with_signature(std::move(sig)) : out;
}

// ------------------------------------------------------------------ gauges

namespace {

// Gamma(L)/Gamma(L-k) as a rational function.
RatFun gamma_ratio(const Poly& form, long k) {
    RatFun r(1);
    if (k > 0) {
        for (long j = 1; j <= k; ++j) r *= RatFun(form - Poly(j));
    } else {
        for (long j = 0; j < -k; ++j) r *= RatFun(form + Poly(j)).invert();
    }
    return r;
}

}  // namespace

AlgebraElement conjugate_by_gauge(const GammaGauge& g, const AlgebraElement& x) {
    if (x.mode() != Mode::Rational && !x.is_scalar())
        throw SignatureMismatch("Gamma gauges act on the rational algebra");
    AlgebraElement out = AlgebraElement::term(RatFun(), Shift{}, x.mode(), x.signature());
    for (const auto& [s, c] : x.terms()) {
        RatFun factor(1);
        for (const auto& f : g.factors) {
            Rational k = 0;
            for (const auto& e : s.exps().factors()) {
                auto cf = f.form.coefficients_in(e.var);
                auto it = cf.find(1);
                if (it == cf.end()) continue;
                if (!it->second.is_constant()) throw NonIntegerShift("gauge form is not linear: " + f.form.to_string());
                k += it->second.constant_value() * e.exp;
            }
            if (k == 0) continue;
            if (k.get_den() != 1) throw NonIntegerShift("shift " + k.get_str() + " of " + f.form.to_string());
            RatFun ratio = gamma_ratio(f.form, k.get_num().get_si());
            factor *= f.exponent > 0 ? ratio.pow(f.exponent) : ratio.invert().pow(-f.exponent);
        }
        out += AlgebraElement::term(c * factor, s, x.mode(), x.signature());
    }
    return out;
}

AlgebraElement conjugate_by_gauge(const MonomialGauge& u, const AlgebraElement& x) {
    std::map<Var, Poly> images;
    auto row = [](const std::vector<int>& v, unsigned i, int dflt) {
        return i < v.size() ? v[i] : dflt;
    };
    auto add_var = [&](Var var) {
        if (var.kind() != VarKind::P || images.count(var)) return;
        int c = row(u.row_shift, var.i(), 0);
        if (c != 0) images.emplace(var, Poly::var(var) + Poly(long(c)));
    };
    for (const auto& [s, c] : x.terms()) {
        for (Var v : c.num().variables()) add_var(v);
        for (const auto& [a, k] : c.den())
            for (Var v : a.vars()) add_var(v);
    }
    AlgebraElement out = AlgebraElement::term(RatFun(), Shift{}, x.mode(), x.signature());
    for (const auto& [s, c] : x.terms()) {
        int sign = 1;
        for (const auto& e : s.exps().factors())
            if (row(u.row_sign, e.var.i(), 1) < 0 && (e.exp % 2 != 0)) sign = -sign;
        out += AlgebraElement::term(c.substitute(images) * RatFun(long(sign)), s, x.mode(), x.signature());
    }
    return out;
}

// ------------------------------------------------------------------- parse

AlgebraElement parse_element(std::string_view text, Mode mode) {
    using P = ExpressionParser<AlgebraElement>;
    P::Hooks hooks;
    hooks.leaf = [mode](const Identifier& id) -> std::optional<AlgebraElement> {
        bool exp_q = id.name == "e^q" && mode == Mode::Rational;
        bool d_op = id.name == "D" && mode == Mode::Trig;
        if ((!exp_q && !d_op) || id.index.size() != 2 || id.index[0] < 1 || id.index[1] < 1)
            return std::nullopt;
        Var slot = slot_var(mode, id.index[0], id.index[1], id.factor);
        return AlgebraElement::term(RatFun(1), Shift::of(slot), mode);
    };
    hooks.divide = [](const AlgebraElement& a, const AlgebraElement& b) {
        if (!b.is_scalar()) throw ParseError("division by a non-scalar element");
        return a * AlgebraElement(b.scalar_value().invert(), a.mode());
    };
    hooks.power = [mode](const AlgebraElement& a, int k) {
        if (a.is_scalar()) return AlgebraElement(a.scalar_value().pow(k), a.mode());
        if (a.terms().size() != 1 || !equals(a.terms().begin()->second, RatFun(1))) {
            if (k < 0) throw ParseError("negative power of a non-monomial element");
        } else {
            auto s = a.terms().begin()->first;
            Shift out;
            for (int j = 0; j < std::abs(k); ++j) out = out * (k > 0 ? s : s.inverse());
            return AlgebraElement::term(RatFun(1), out, mode);
        }
        AlgebraElement r(1);
        for (int j = 0; j < k; ++j) r *= a;
        return r;
    };
    AlgebraElement parsed = P(text, std::move(hooks)).parse();
    AlgebraElement out = AlgebraElement::term(RatFun(), Shift{}, mode);
    for (const auto& [s, c] : parsed.terms()) out += AlgebraElement::term(c, s, mode);
    return out;
}

}  // namespace lax
