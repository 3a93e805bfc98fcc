#include "adic/stream_expr.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace adic {

namespace {

constexpr std::uint64_t kExponentLimit = 1u << 20;

class StreamCursor {
public:
    StreamCursor(const std::string& text, Domain dom)
        : text_(text), dom_(dom) {}

    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
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

    std::string ident() {
        skip_ws();
        std::string s;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                text_[pos_] == '_'))
            s += text_[pos_++];
        if (s.empty()) fail({"identifier"});
        return s;
    }

    bool looking_at_word(const std::string& w) {
        skip_ws();
        if (text_.compare(pos_, w.size(), w) != 0) return false;
        std::size_t after = pos_ + w.size();
        if (after < text_.size() &&
            (std::isalnum(static_cast<unsigned char>(text_[after])) ||
             text_[after] == '_' || text_[after] == '['))
            return false;
        return true;
    }

    // Affine expression in the index variable: sums of `nat`, `ident`,
    // and `nat * ident`.
    Affine iexpr() {
        Affine r{0, 0};
        r = r + iterm();
        while (accept('+')) r = r + iterm();
        return r;
    }

    Affine iterm() {
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::uint64_t n = nat();
            if (accept('*')) {
                expect_index_var();
                return {n, 0};
            }
            return {0, n};
        }
        expect_index_var();
        return {1, 0};
    }

    void expect_index_var() {
        std::size_t at = pos_;
        std::string name = ident();
        if (name != index_name_) {
            pos_ = at;
            fail({"index variable '" + index_name_ + "'"});
        }
    }

    StreamExpr parse_stream() {
        index_name_ = ident();
        if (index_name_ == "t" || index_name_ == "delta")
            fail({"index variable name other than 't' and 'delta'"});
        if (!accept(':')) fail({"':'"});
        StreamExpr e;
        e.index_name = index_name_;

        bool neg = accept('-');
        if (!neg) accept('+');
        e.terms.push_back(term(neg));
        for (;;) {
            if (accept('+'))
                e.terms.push_back(term(false));
            else if (accept('-'))
                e.terms.push_back(term(true));
            else
                break;
        }
        if (!eof()) fail({"'+'", "'-'", "'*'", "end of input"});

        bool with = e.terms[0].delta.has_value();
        for (auto& t : e.terms)
            if (t.delta.has_value() != with)
                throw ParseError(pos_,
                                 {"every term with a delta, or none"},
                                 "mixed stream terms");
        return e;
    }

    StreamTerm term(bool negate) {
        StreamTerm t;
        t.coeff = Coeff::one(dom_);
        if (negate) t.coeff = -t.coeff;
        factor(t);
        while (accept('*')) factor(t);
        return t;
    }

    void factor(StreamTerm& t) {
        char c = peek();
        if (c == 't' && !looking_at_word(index_name_)) {
            ++pos_;
            StreamFactor f;
            if (accept('[')) {
                f.var_index = iexpr();
                if (!accept(']')) fail({"']'"});
            } else {
                std::uint64_t idx = nat();
                if (idx == 0) fail({"variable index >= 1"});
                f.var_index = {0, idx};
            }
            if (accept('^')) f.exponent = iexpr();
            t.factors.push_back(f);
            return;
        }
        if (looking_at_word("delta")) {
            ident();
            if (!accept('(')) fail({"'('"});
            Affine h = iexpr();
            if (!accept(')')) fail({"')'"});
            if (t.delta) fail({"at most one delta per term"});
            t.delta = h;
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer num = big_nat();
            Integer den = 1;
            if (accept('/')) {
                den = big_nat();
                if (den == 0) fail({"nonzero denominator"});
            }
            Coeff k = dom_.is_rational()
                          ? Coeff::from_rational(Rational(num, den))
                          : Coeff::from_integer(dom_, num) /
                                Coeff::from_integer(dom_, den);
            t.coeff = t.coeff * k;
            if (t.coeff.is_zero()) fail({"nonzero coefficient"});
            return;
        }
        fail({"number", "'t'", "'t['", "'delta('"});
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

private:
    const std::string& text_;
    Domain dom_;
    std::size_t pos_ = 0;
    std::string index_name_;
};

Polynomial eval_term(const StreamTerm& t, std::uint64_t k, Domain d) {
    Monomial m = Monomial::one();
    for (auto& f : t.factors) {
        std::uint64_t e = f.exponent.eval(k);
        if (e == 0) continue;
        if (e > kExponentLimit)
            throw std::runtime_error("stream exponent too large at index " +
                                     std::to_string(k));
        std::uint64_t idx = f.var_index.eval(k);
        if (idx == 0 || idx > UINT32_MAX)
            throw std::runtime_error(
                "stream variable index out of range at index " +
                std::to_string(k));
        m = m * Monomial::var(static_cast<std::uint32_t>(idx),
                              static_cast<std::uint32_t>(e));
    }
    return Polynomial::term(m, t.coeff);
}

// Lower bound on ord(term(k)) as an affine function of k: each factor on
// a variable that certainly lies in the ideal contributes its exponent.
Affine ord_lower_bound(const StreamTerm& t, const AdicIdeal& ideal) {
    Affine lb{0, 0};
    for (auto& f : t.factors) {
        bool in_ideal = false;
        if (ideal.kind() == AdicIdeal::Kind::AllVariables)
            in_ideal = true;
        else if (ideal.kind() == AdicIdeal::Kind::Variables &&
                 f.var_index.constant())
            in_ideal = ideal.contains_var(
                static_cast<std::uint32_t>(f.var_index.b));
        if (in_ideal) lb = lb + f.exponent;
    }
    return lb;
}

// Indices k whose order lower bound allows ord <= threshold; nullopt when
// the bound has slope zero and the threshold reaches its offset.
std::optional<std::vector<std::uint64_t>> term_indices(
    const StreamTerm& t, const AdicIdeal& ideal, std::uint32_t threshold) {
    Affine lb = ord_lower_bound(t, ideal);
    if (lb.b > threshold) return std::vector<std::uint64_t>{};
    if (lb.a == 0) return std::nullopt;
    std::uint64_t kmax = (threshold - lb.b) / lb.a;
    std::vector<std::uint64_t> out;
    for (std::uint64_t k = 0; k <= kmax; ++k) out.push_back(k);
    return out;
}

}  // namespace

StreamExpr stream_parse(const std::string& text, Domain d) {
    StreamCursor c(text, d);
    return c.parse_stream();
}

DecayStream stream_to_decay(const StreamExpr& e, ModulePtr ring) {
    if (ring->rank() != 1)
        throw std::invalid_argument("stream expressions are ring-valued");
    Domain d = ring->field();
    const AdicIdeal ideal = ring->ideal();
    StreamExpr expr = e;

    DecayStream::SupportBound bound =
        [expr, ideal](std::uint32_t threshold)
        -> std::optional<std::vector<std::uint64_t>> {
        std::set<std::uint64_t> zs;
        for (auto& t : expr.terms) {
            auto ks = term_indices(t, ideal, threshold);
            if (!ks) return std::nullopt;
            for (auto k : *ks)
                zs.insert(t.delta ? t.delta->eval(k) : k);
        }
        return std::vector<std::uint64_t>(zs.begin(), zs.end());
    };

    DecayStream::TermOracle term;
    if (!expr.has_delta()) {
        term = [expr, ring, d](std::uint64_t z) {
            Polynomial p(d);
            for (auto& t : expr.terms) p += eval_term(t, z, d);
            return TowerElement::from_element({p}, ring);
        };
    } else {
        term = [expr, ring, ideal, d](std::uint64_t z) {
            return TowerElement(ring, [expr, ring, ideal, d,
                                       z](std::uint32_t level) {
                Polynomial p(d);
                for (auto& t : expr.terms) {
                    const Affine& h = *t.delta;
                    if (h.a > 0) {
                        if (z >= h.b && (z - h.b) % h.a == 0)
                            p += eval_term(t, (z - h.b) / h.a, d);
                    } else if (z == h.b) {
                        // Infinite fiber: only indices that can reach this
                        // level contribute; the rest lie deeper in the
                        // ideal.
                        auto ks = term_indices(t, ideal, level);
                        if (!ks)
                            throw DecayFailure(
                                "fiber sum has no finite support bound at "
                                "level " +
                                std::to_string(level));
                        for (auto k : *ks) p += eval_term(t, k, d);
                    }
                }
                return ring->truncate({p}, level);
            });
        };
    }
    return DecayStream(ring, std::move(term), std::move(bound));
}

DecayStream stream_compile(const std::string& text, ModulePtr ring) {
    std::string s = text;
    auto not_space = [](unsigned char c) { return !std::isspace(c); };
    s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
    s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());

    Domain d = ring->field();
    if (s == "@bseries") {
        bool all_vars =
            ring->ideal().kind() == AdicIdeal::Kind::AllVariables;
        return DecayStream(
            ring,
            [ring, d](std::uint64_t z) {
                if (z == 0 || z > UINT32_MAX)
                    return TowerElement::zero(ring);
                Polynomial p = Polynomial::term(
                    Monomial::var(static_cast<std::uint32_t>(z),
                                  static_cast<std::uint32_t>(z)),
                    Coeff::one(d));
                return TowerElement::from_element({p}, ring);
            },
            [all_vars](std::uint32_t i)
                -> std::optional<std::vector<std::uint64_t>> {
                if (!all_vars) return std::nullopt;
                std::vector<std::uint64_t> out;
                for (std::uint64_t k = 1; k <= i; ++k) out.push_back(k);
                return out;
            });
    }
    if (s == "@geom") {
        StreamExpr e = stream_parse("k : t1^k * delta(k)", d);
        return stream_to_decay(e, ring);
    }
    return stream_to_decay(stream_parse(s, d), ring);
}

}  // namespace adic
