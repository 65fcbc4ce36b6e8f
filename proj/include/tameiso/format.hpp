#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "tameiso/maps.hpp"
#include "tameiso/polynomial.hpp"

namespace tameiso {

namespace detail {

// One printed term: sign split off so the caller can fold it into the
// '+' / '-' separators; body never starts with '-'.
struct PrintedTerm {
    bool negative;
    std::string body;
};

inline std::string rational_body(const Rational& r) {
    Rational a(r);
    a.canonicalize();
    if (a < 0) a = -a;
    std::string s = a.get_num().get_str();
    if (a.get_den() != 1) s += "/" + a.get_den().get_str();
    return s;
}

inline PrintedTerm print_scalar_term(const FieldScalar& c, const std::string& mono) {
    // Rational coefficient: fold the sign out; |1| is dropped before a
    // nonempty monomial ("X", "- X"), kept alone ("1", "- 1").
    if (c.is_rational()) {
        Rational r = c.rational_value();
        bool neg = sgn(r) < 0;
        std::string body = rational_body(r);
        if (!mono.empty()) body = (body == "1") ? mono : body + "*" + mono;
        return {neg, body};
    }
    // A single power of z with rational coefficient needs no parentheses.
    std::size_t nonzero = 0, idx = 0;
    for (std::size_t i = 0; i < c.coeffs().size(); ++i)
        if (sgn(c.coeffs()[i]) != 0) {
            ++nonzero;
            idx = i;
        }
    std::string body;
    bool neg = false;
    if (nonzero == 1) {
        const Rational& r = c.coeffs()[idx];
        neg = sgn(r) < 0;
        std::string num = rational_body(r);
        body = (num == "1") ? "" : num + "*";
        body += "z";
        if (idx > 1) body += "^" + std::to_string(idx);
        // idx >= 1 here: idx == 0 would make the scalar rational.
    } else {
        std::string inner;
        bool first = true;
        for (std::size_t i = c.coeffs().size(); i-- > 0;) {
            const Rational& r = c.coeffs()[i];
            if (sgn(r) == 0) continue;
            std::string part = rational_body(r);
            std::string m = i == 0 ? "" : (i == 1 ? "z" : "z^" + std::to_string(i));
            std::string piece;
            if (m.empty())
                piece = part;
            else
                piece = (part == "1") ? m : part + "*" + m;
            if (first) {
                // Inside parentheses a leading negative must stay a valid
                // first term, so the coefficient is spelled out.
                if (sgn(r) < 0) {
                    piece = m.empty() ? "-" + part : "-" + part + "*" + m;
                }
                inner = piece;
                first = false;
            } else {
                inner += (sgn(r) < 0 ? " - " : " + ") + piece;
            }
        }
        body = "(" + inner + ")";
    }
    if (!mono.empty()) body += "*" + mono;
    return {neg, body};
}

inline std::string monomial_body(const RingPtr& ring, const Monomial& m) {
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += ring->vars()[i];
        if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
    return s;
}

}  // namespace detail

// Canonical form: grlex-descending terms, signs folded into separators; a
// leading negative rational keeps its sign on the coefficient so the
// output re-parses under the expression grammar.
inline std::string to_string(const MultiPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        detail::PrintedTerm t =
            detail::print_scalar_term(it->second, detail::monomial_body(p.ring(), it->first));
        if (first) {
            if (t.negative) {
                // Re-attach the sign to the coefficient: "-Y" is not a term.
                out = std::isdigit(static_cast<unsigned char>(t.body[0]))
                          ? "-" + t.body
                          : "-1*" + t.body;
            } else {
                out = t.body;
            }
            first = false;
        } else {
            out += (t.negative ? " - " : " + ") + t.body;
        }
    }
    return out;
}

inline std::string to_string(const FieldScalar& c) {
    if (c.is_zero()) return "0";
    detail::PrintedTerm t = detail::print_scalar_term(c, "");
    if (!t.negative) return t.body;
    return std::isdigit(static_cast<unsigned char>(t.body[0])) ? "-" + t.body
                                                               : "-1*" + t.body;
}

inline std::string image_list(const std::vector<MultiPoly>& images) {
    std::string out;
    for (std::size_t i = 0; i < images.size(); ++i) {
        if (i) out += "; ";
        out += to_string(images[i]);
    }
    return out;
}

inline std::string to_string(const Derivation& d) { return image_list(d.images); }
inline std::string to_string(const Endomorphism& s) { return image_list(s.images); }

inline std::string to_string(const ElementaryAuto& s) {
    return s.ring->vars()[s.axis] + " -> " + to_string(s.axis_image());
}

}  // namespace tameiso
