#include "idg/parser.hpp"

#include <cctype>

namespace idg {

namespace {

constexpr std::int64_t kMaxExponent = 4096;

class ExprParser {
public:
    ExprParser(const std::string& text, const FiniteField& field, char variable)
        : s_(text), field_(field), var_(variable) {}

    RatFunc parse() {
        RatFunc r = expr();
        skip_ws();
        if (pos_ != s_.size()) throw ParseError("unexpected character", pos_);
        return r;
    }

private:
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    bool eat(char c) {
        if (peek(c)) {
            ++pos_;
            return true;
        }
        return false;
    }

    RatFunc expr() {
        RatFunc acc = term();
        for (;;) {
            if (eat('+'))
                acc = acc + term();
            else if (eat('-'))
                acc = acc - term();
            else
                return acc;
        }
    }

    RatFunc term() {
        RatFunc acc = factor();
        for (;;) {
            if (eat('*')) {
                acc = acc * factor();
            } else if (eat('/')) {
                std::size_t at = pos_;
                RatFunc d = factor();
                if (d.is_zero()) throw ParseError("zero denominator", at);
                acc = acc / d;
            } else {
                return acc;
            }
        }
    }

    RatFunc factor() {
        if (eat('-')) return -factor();
        RatFunc base = atom();
        if (eat('^')) {
            skip_ws();
            std::size_t at = pos_;
            if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                throw ParseError("expected nonnegative integer exponent", at);
            std::int64_t e = 0;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                e = e * 10 + (s_[pos_] - '0');
                if (e > kMaxExponent) throw ParseError("exponent overflow", at);
                ++pos_;
            }
            return base.pow(e);
        }
        return base;
    }

    RatFunc atom() {
        skip_ws();
        if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            RatFunc r = expr();
            if (!eat(')')) throw ParseError("expected ')'", pos_);
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::int64_t v = 0;
            std::int64_t p = static_cast<std::int64_t>(field_.characteristic());
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                v = (v * 10 + (s_[pos_] - '0')) % p;
                ++pos_;
            }
            return RatFunc::constant(field_.from_int(v), var_);
        }
        if (c == var_) {
            ++pos_;
            return RatFunc::variable(field_, var_);
        }
        if (c == 'a' && field_.degree() > 1) {
            ++pos_;
            return RatFunc::constant(field_.generator(), var_);
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    const std::string& s_;
    FiniteField field_;
    char var_;
    std::size_t pos_ = 0;
};

}   // namespace

RatFunc parse_expr(const std::string& text, const FiniteField& field, char variable) {
    return ExprParser(text, field, variable).parse();
}

FiniteField parse_field(const std::string& d) {
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < d.size() && std::isspace(static_cast<unsigned char>(d[pos]))) ++pos;
    };
    skip_ws();
    if (d.compare(pos, 3, "GF(") != 0) throw ParseError("expected 'GF('", pos);
    pos += 3;
    skip_ws();
    std::uint64_t p = 0;
    if (pos >= d.size() || !std::isdigit(static_cast<unsigned char>(d[pos])))
        throw ParseError("expected prime", pos);
    while (pos < d.size() && std::isdigit(static_cast<unsigned char>(d[pos])))
        p = p * 10 + (d[pos++] - '0');
    skip_ws();
    unsigned m = 1;
    if (pos < d.size() && d[pos] == '^') {
        ++pos;
        skip_ws();
        std::uint64_t mv = 0;
        if (pos >= d.size() || !std::isdigit(static_cast<unsigned char>(d[pos])))
            throw ParseError("expected extension degree", pos);
        while (pos < d.size() && std::isdigit(static_cast<unsigned char>(d[pos])))
            mv = mv * 10 + (d[pos++] - '0');
        if (mv == 0 || mv > 8) throw ParseError("extension degree out of range", pos);
        m = static_cast<unsigned>(mv);
    }
    skip_ws();
    if (m == 1) {
        if (pos >= d.size() || d[pos] != ')') throw ParseError("expected ')'", pos);
        return FiniteField(p);
    }
    if (pos >= d.size() || d[pos] != ';') throw ParseError("modulus required for m > 1", pos);
    ++pos;
    skip_ws();
    if (d.compare(pos, 8, "modulus=") != 0) throw ParseError("expected 'modulus='", pos);
    pos += 8;
    std::size_t close = d.rfind(')');
    if (close == std::string::npos || close < pos) throw ParseError("expected ')'", d.size());
    std::string poly_text = d.substr(pos, close - pos);
    // parse the modulus as a polynomial in a over GF(p)
    FiniteField gfp(p);
    RatFunc mod = parse_expr(poly_text, gfp, 'a');
    if (!mod.is_poly()) throw ParseError("modulus must be a polynomial", pos);
    std::vector<std::uint64_t> coeffs;
    for (const FieldElem& c : mod.num().coeffs()) coeffs.push_back(c.coeffs()[0]);
    return FiniteField(p, m, std::move(coeffs));
}

}   // namespace idg
