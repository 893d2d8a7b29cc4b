#pragma once

#include <cctype>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lax/errors.hpp"
#include "lax/ratfun.hpp"

namespace lax {

// An identifier with an optional bracketed index list, e.g. p[2,1;2].
struct Identifier {
    std::string name;
    std::vector<int> index;  // entries before ';'
    int factor = 1;          // entry after ';'
};

// Variable for a known identifier (z, w, u, v, eps, p[i,r], wh[i,r], x[s], y[a]).
std::optional<Var> variable_for(const Identifier& id);

// Recursive-descent parser for +, -, *, /, ^, parentheses and rational
// numbers over any ring type R with a constructor from RatFun.
//   leaf:   resolves identifiers that are not plain variables
//   divide: a / b
//   power:  a ^ k (k may be negative)
template <class R>
class ExpressionParser {
public:
    struct Hooks {
        std::function<std::optional<R>(const Identifier&)> leaf;
        std::function<R(const R&, const R&)> divide;
        std::function<R(const R&, int)> power;
    };

    ExpressionParser(std::string_view text, Hooks hooks) : s_(text), hooks_(std::move(hooks)) {}

    R parse() {
        R r = expr();
        skip();
        if (pos_ != s_.size()) fail("trailing input");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    int integer() {
        skip();
        bool neg = eat('-');
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        int v = std::stoi(std::string(s_.substr(start, pos_ - start)));
        return neg ? -v : v;
    }

    R expr() {
        R acc = term();
        for (;;) {
            if (eat('+'))
                acc = acc + term();
            else if (eat('-'))
                acc = acc - term();
            else
                return acc;
        }
    }
    R term() {
        R acc = unary();
        for (;;) {
            if (eat('*'))
                acc = acc * unary();
            else if (eat('/'))
                acc = hooks_.divide(acc, unary());
            else
                return acc;
        }
    }
    R unary() {
        if (eat('-')) return R(RatFun(-1)) * unary();
        return power();
    }
    R power() {
        R base = primary();
        if (eat('^')) {
            int k;
            if (eat('(')) {
                k = integer();
                if (!eat(')')) fail("expected ')'");
            } else if (eat('{')) {
                k = integer();
                if (!eat('}')) fail("expected '}'");
            } else {
                k = integer();
            }
            return hooks_.power(base, k);
        }
        return base;
    }
    R primary() {
        skip();
        if (eat('(')) {
            R r = expr();
            if (!eat(')')) fail("expected ')'");
            return r;
        }
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return R(RatFun(Rational(mpz_class(std::string(s_.substr(start, pos_ - start))))));
        }
        if (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
            Identifier id;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                id.name += s_[pos_++];
            // Exponential shift e^{q[i,r]} is read as one identifier "e^q".
            if (id.name == "e" && s_.substr(pos_, 3) == "^{q") {
                pos_ += 3;
                id.name = "e^q";
            }
            if (pos_ < s_.size() && s_[pos_] == '[') {
                ++pos_;
                id.index.push_back(integer());
                while (eat(',')) id.index.push_back(integer());
                if (eat(';')) id.factor = integer();
                if (!eat(']')) fail("expected ']'");
            }
            if (id.name == "e^q" && !eat('}')) fail("expected '}'");
            if (auto v = variable_for(id)) return R(RatFun::var(*v));
            if (hooks_.leaf)
                if (auto r = hooks_.leaf(id)) return *r;
            fail("unknown identifier '" + id.name + "'");
        }
        fail("unexpected input");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
    Hooks hooks_;
};

// Parses the canonical text of a rational function (and any equivalent
// arithmetic expression over the same variables).
RatFun parse_ratfun(std::string_view text);

}  // namespace lax
