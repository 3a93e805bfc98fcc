#include "adic/parse.hpp"

#include <cctype>

namespace adic {

namespace {

std::string describe(std::size_t offset, const std::string& found,
                     const std::vector<std::string>& expected) {
    std::string s = "parse error at byte " + std::to_string(offset) +
                    ": found " + found + ", expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
        if (i) s += expected.size() == 2 ? " or " : ", ";
        s += expected[i];
    }
    return s;
}

class Cursor {
public:
    Cursor(const std::string& text, Domain dom) : text_(text), dom_(dom) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(
                   static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool eof() {
        skip_ws();
        return pos_ >= text_.size();
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(std::vector<std::string> expected) {
        skip_ws();
        std::string found = pos_ >= text_.size()
                                ? "end of input"
                                : "'" + std::string(1, text_[pos_]) + "'";
        throw ParseError(pos_, std::move(expected), found);
    }

    std::uint64_t nat() {
        skip_ws();
        if (pos_ >= text_.size() ||
            !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail({"number"});
        std::uint64_t v = 0;
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
            ++pos_;
        }
        return v;
    }

    Integer big_nat() {
        skip_ws();
        if (pos_ >= text_.size() ||
            !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail({"number"});
        Integer v = 0;
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            ++pos_;
        }
        return v;
    }

    Polynomial expr() {
        bool neg = false;
        if (accept('-'))
            neg = true;
        else
            accept('+');
        Polynomial p = term();
        if (neg) p = -p;
        for (;;) {
            if (accept('+'))
                p += term();
            else if (accept('-'))
                p -= term();
            else
                break;
        }
        return p;
    }

    Polynomial term() {
        Polynomial p = factor();
        while (accept('*')) p = p * factor();
        return p;
    }

    Polynomial factor() {
        Polynomial b = base();
        if (accept('^')) {
            std::uint64_t e = nat();
            Polynomial r = Polynomial::one(dom_);
            Polynomial sq = b;
            while (e) {
                if (e & 1) r = r * sq;
                e >>= 1;
                if (e) sq = sq * sq;
            }
            return r;
        }
        return b;
    }

    Polynomial base() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Polynomial p = expr();
            if (!accept(')')) fail({"')'"});
            return p;
        }
        if (c == 't') {
            ++pos_;
            std::uint64_t idx = nat();
            if (idx == 0) fail({"variable index >= 1"});
            return Polynomial::variable(dom_,
                                        static_cast<std::uint32_t>(idx));
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
            bool neg = accept('-');
            Integer num = big_nat();
            Integer den = 1;
            if (accept('/')) {
                den = big_nat();
                if (den == 0) fail({"nonzero denominator"});
            }
            if (neg) num = -num;
            if (dom_.is_rational())
                return Polynomial::constant(
                    Coeff::from_rational(Rational(num, den)));
            Coeff k = Coeff::from_integer(dom_, num) /
                      Coeff::from_integer(dom_, den);
            return Polynomial::constant(k);
        }
        fail({"number", "'t'", "'('"});
    }

    std::size_t pos() const { return pos_; }

private:
    const std::string& text_;
    Domain dom_;
    std::size_t pos_ = 0;
};

}  // namespace

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected,
                       std::string found)
    : std::runtime_error(describe(offset, found, expected)),
      offset_(offset),
      expected_(std::move(expected)) {}

Polynomial poly_parse(const std::string& text, Domain d) {
    Cursor c(text, d);
    if (c.eof()) c.fail({"expression"});
    Polynomial p = c.expr();
    if (!c.eof()) c.fail({"'+'", "'-'", "'*'", "end of input"});
    return p;
}

std::vector<Polynomial> poly_parse_vector(const std::string& text, Domain d,
                                          char sep) {
    std::vector<Polynomial> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(sep, start);
        std::string piece = text.substr(
            start, end == std::string::npos ? std::string::npos : end - start);
        out.push_back(poly_parse(piece, d));
        if (end == std::string::npos) break;
        start = end + 1;
    }
    return out;
}

}  // namespace adic
