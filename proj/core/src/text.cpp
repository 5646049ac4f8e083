/*
   Copyright 2026 The qsing Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "qsing/text.hpp"

#include <cctype>
#include <sstream>

namespace qsing {

namespace {

class Lexer {
   public:
    explicit Lexer(std::string_view s) : s_(s) {}

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool at_end() {
        skip_ws();
        return pos_ >= s_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    std::size_t pos() const { return pos_; }

    std::string digits() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError("expected digits", start);
        return std::string(s_.substr(start, pos_ - start));
    }

    [[noreturn]] void fail(const std::string& what) { throw ParseError(what, pos_); }

   private:
    std::string_view s_;
    std::size_t pos_ = 0;
};

template <FieldElement K>
K parse_number(const Field& field, Lexer& lx) {
    mpz_class num(lx.digits());
    mpz_class den(1);
    if (lx.accept('/')) {
        std::size_t at = lx.pos();
        den = mpz_class(lx.digits());
        if (den == 0) throw ParseError("zero denominator", at);
    }
    return K::from_fraction(field, num, den);
}

}  // namespace

namespace {

// expr    := ['+'|'-'] product (('+'|'-') product)*
// product := power ('*' power)*
// power   := atom ['^' digits]
// atom    := number | 'x' digits | '(' expr ')'
template <FieldElement K>
class PolynomialParser {
   public:
    PolynomialParser(const Field& field, std::size_t nvars, std::string_view text)
        : field_(field), nvars_(nvars), lx_(text) {}

    Polynomial<K> parse() {
        if (lx_.at_end()) lx_.fail("empty polynomial");
        auto p = expr();
        if (!lx_.at_end()) {
            if (lx_.peek() == ')') lx_.fail("unbalanced ')'");
            lx_.fail(std::string("expected '+' or '-' but found '") + lx_.peek() + "'");
        }
        return p;
    }

   private:
    Polynomial<K> expr() {
        Polynomial<K> sum(field_, nvars_);
        bool negative = lx_.accept('-');
        if (!negative) lx_.accept('+');
        while (true) {
            auto t = product();
            if (negative) sum -= t;
            else sum += t;
            if (lx_.accept('+')) negative = false;
            else if (lx_.accept('-')) negative = true;
            else return sum;
        }
    }

    Polynomial<K> product() {
        auto p = power();
        while (lx_.accept('*')) {
            std::size_t at = lx_.pos();
            auto q = power();
            try {
                p = p * q;
            } catch (const PreconditionError&) {
                throw ParseError("exponent too large", at);
            }
        }
        return p;
    }

    Polynomial<K> power() {
        auto base = atom();
        if (!lx_.accept('^')) return base;
        std::size_t at = lx_.pos();
        unsigned e = small_number(kMaxExponent, "exponent too large");
        try {
            return base.pow(e);
        } catch (const PreconditionError&) {
            throw ParseError("exponent too large", at);
        }
    }

    Polynomial<K> atom() {
        char c = lx_.peek();
        if (std::isdigit(static_cast<unsigned char>(c)))
            return Polynomial<K>::constant(field_, nvars_, parse_number<K>(field_, lx_));
        if (c == 'x') {
            const std::size_t at = lx_.pos();
            lx_.accept('x');
            unsigned idx = small_number(1u << 20, "variable index too large");
            if (idx >= nvars_)
                throw ParseError("variable x" + std::to_string(idx) + " outside x0..x" + std::to_string(nvars_ - 1), at);
            return Polynomial<K>::variable(field_, nvars_, idx);
        }
        if (c == '(') {
            lx_.accept('(');
            auto inner = expr();
            if (!lx_.accept(')')) {
                if (lx_.at_end()) lx_.fail("missing ')'");
                lx_.fail(std::string("expected ')' but found '") + lx_.peek() + "'");
            }
            return inner;
        }
        if (c == '\0') lx_.fail("unexpected end of input");
        lx_.fail(std::string("unexpected character '") + c + "'");
    }

    unsigned small_number(unsigned limit, const char* what) {
        std::size_t at = lx_.pos();
        auto d = lx_.digits();
        if (d.size() > 9 || std::stoul(d) > limit) throw ParseError(what, at);
        return static_cast<unsigned>(std::stoul(d));
    }

    const Field& field_;
    std::size_t nvars_;
    Lexer lx_;
};

}  // namespace

template <FieldElement K>
Polynomial<K> parse_polynomial(const Field& field, std::size_t nvars, std::string_view text) {
    return PolynomialParser<K>(field, nvars, text).parse();
}

template <FieldElement K>
std::vector<K> parse_point(const Field& field, std::string_view text) {
    Lexer lx(text);
    std::vector<K> out;
    do {
        bool negative = lx.accept('-');
        if (!negative) lx.accept('+');
        K v = parse_number<K>(field, lx);
        out.push_back(negative ? -v : v);
    } while (lx.accept(':'));
    if (!lx.at_end()) lx.fail(std::string("unexpected character '") + lx.peek() + "' in point");
    return out;
}

template <FieldElement K>
std::string format_point(std::span<const K> coords) {
    std::string s;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) s += ':';
        s += coords[i].to_string();
    }
    return s;
}

HypersurfaceText parse_hypersurface_header(std::string_view contents) {
    auto nl = contents.find('\n');
    std::string header(contents.substr(0, nl));
    std::istringstream is(header);
    HypersurfaceText out;
    bool have_m = false;
    bool have_field = false;
    std::string tok;
    while (is >> tok) {
        if (tok.rfind("M=", 0) == 0) {
            try {
                out.degree = std::stoi(tok.substr(2));
            } catch (const std::exception&) {
                throw ParseError("bad degree in header '" + tok + "'", header.find(tok));
            }
            have_m = true;
        } else if (tok.rfind("field=", 0) == 0) {
            out.field = Field::parse(tok.substr(6));
            have_field = true;
        } else {
            throw ParseError("unknown header token '" + tok + "'", header.find(tok));
        }
    }
    if (!have_m || !have_field) throw ParseError("header must be 'M=<int> field=Q|Fp:<p>'", 0);
    out.polynomial = nl == std::string_view::npos ? std::string() : std::string(contents.substr(nl + 1));
    return out;
}

template Polynomial<Rational> parse_polynomial<Rational>(const Field&, std::size_t, std::string_view);
template Polynomial<Zp> parse_polynomial<Zp>(const Field&, std::size_t, std::string_view);
template std::vector<Rational> parse_point<Rational>(const Field&, std::string_view);
template std::vector<Zp> parse_point<Zp>(const Field&, std::string_view);
template std::string format_point<Rational>(std::span<const Rational>);
template std::string format_point<Zp>(std::span<const Zp>);

}  // namespace qsing
