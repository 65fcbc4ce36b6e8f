#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "tameiso/polynomial.hpp"

namespace tameiso {

namespace detail {

// Recursive descent for
//   poly   := ('-')? term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' uint)?
//   atom   := rational | identifier | '(' poly ')'
//   rational := int ('/' uint)?
// with no implicit multiplication; 'z' is the primitive root when the
// field order exceeds 1.
class PolyParser {
public:
    PolyParser(const std::string& text, RingPtr ring)
        : text_(text), ring_(std::move(ring)) {
        if (ring_->field()->order() > 1 && ring_->var_index("z"))
            throw PreconditionError(
                "variable name z collides with the root of unity; rename the variable "
                "or drop --cyclotomic");
    }

    MultiPoly parse_poly_to_end() {
        MultiPoly p = parse_poly();
        skip_ws();
        if (pos_ < text_.size()) fail("unexpected trailing input");
        return p;
    }

    // Semicolon-separated images, at least one.
    std::vector<MultiPoly> parse_image_list_to_end() {
        std::vector<MultiPoly> out;
        out.push_back(parse_poly());
        skip_ws();
        while (pos_ < text_.size() && text_[pos_] == ';') {
            advance();
            out.push_back(parse_poly());
            skip_ws();
        }
        if (pos_ < text_.size()) fail("unexpected trailing input");
        return out;
    }

private:
    const std::string& text_;
    RingPtr ring_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1, col_ = 1;

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, line_, col_);
    }

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            advance();
    }

    bool peek_is(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    void expect(char c, const std::string& what) {
        if (!peek_is(c)) fail("expected " + what);
        advance();
    }

    Integer read_digits() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_])))
            advance();
        if (pos_ == start) fail("expected digits");
        return Integer(text_.substr(start, pos_ - start));
    }

    unsigned read_uint(const std::string& what) {
        skip_ws();
        if (pos_ >= text_.size() ||
            !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected " + what);
        Integer n = read_digits();
        if (!n.fits_uint_p()) fail(what + " out of range");
        return static_cast<unsigned>(n.get_ui());
    }

    MultiPoly parse_poly() {
        skip_ws();
        // Leading unary minus negates the first term; stacked signs stay
        // invalid.
        bool lead_neg = pos_ < text_.size() && text_[pos_] == '-';
        if (lead_neg) {
            advance();
            skip_ws();
            if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+'))
                fail("expected a value");
        }
        MultiPoly p = parse_term();
        if (lead_neg) p = -p;
        while (true) {
            skip_ws();
            if (pos_ >= text_.size()) break;
            char c = text_[pos_];
            if (c != '+' && c != '-') break;
            advance();
            MultiPoly t = parse_term();
            p = c == '+' ? p + t : p - t;
        }
        return p;
    }

    MultiPoly parse_term() {
        MultiPoly p = parse_factor();
        while (peek_is('*')) {
            advance();
            p = p * parse_factor();
        }
        return p;
    }

    MultiPoly parse_factor() {
        MultiPoly a = parse_atom();
        if (peek_is('^')) {
            advance();
            a = a.pow(read_uint("exponent"));
        }
        return a;
    }

    MultiPoly parse_atom() {
        skip_ws();
        if (pos_ >= text_.size()) fail("expected a value");
        char c = text_[pos_];
        if (c == '(') {
            advance();
            MultiPoly p = parse_poly();
            expect(')', "')'");
            return p;
        }
        if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
            bool neg = c == '-';
            if (neg) advance();
            Integer num = read_digits();
            Integer den(1);
            if (peek_is('/')) {
                advance();
                std::size_t at_line = line_, at_col = col_;
                den = read_digits();
                if (den == 0) throw ParseError("zero denominator", at_line, at_col);
            }
            Rational r(num, den);
            r.canonicalize();
            if (neg) r = -r;
            return MultiPoly::constant(ring_, r);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t at_line = line_, at_col = col_;
            std::string name;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                    text_[pos_] == '_')) {
                name += text_[pos_];
                advance();
            }
            if (auto idx = ring_->var_index(name))
                return MultiPoly::variable(ring_, *idx);
            if (name == "z" && ring_->field()->order() > 1)
                return MultiPoly::constant(ring_, FieldScalar::zeta(ring_->field()));
            throw ParseError("unknown identifier '" + name + "'", at_line, at_col);
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

}  // namespace detail

inline MultiPoly parse_poly(const std::string& text, const RingPtr& ring) {
    return detail::PolyParser(text, ring).parse_poly_to_end();
}

inline std::vector<MultiPoly> parse_image_list(const std::string& text,
                                               const RingPtr& ring) {
    return detail::PolyParser(text, ring).parse_image_list_to_end();
}

// A constant expression (rational or z-polynomial), e.g. automorphism scales.
inline FieldScalar parse_scalar(const std::string& text, const RingPtr& ring) {
    MultiPoly p = parse_poly(text, ring);
    if (!p.is_constant()) throw ParseError("expected a constant expression", 1, 1);
    return p.constant_value();
}

}  // namespace tameiso
