#pragma once

#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "tameiso/polynomial.hpp"

namespace tameiso {

// Dense univariate polynomial over the coefficient field, ascending.
// The empty vector is the zero polynomial.
using UniPoly = std::vector<FieldScalar>;

inline void uni_trim(UniPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline int uni_degree(const UniPoly& p) { return static_cast<int>(p.size()) - 1; }

// Extracts a polynomial that only involves X_var; nullopt if any other
// variable appears.
inline std::optional<UniPoly> to_univariate(const MultiPoly& p, std::size_t var) {
    UniPoly out;
    for (const auto& [m, c] : p.terms()) {
        for (std::size_t i = 0; i < m.size(); ++i)
            if (i != var && m[i] != 0) return std::nullopt;
        if (out.size() <= m[var]) out.resize(m[var] + 1, FieldScalar::zero(p.ring()->field()));
        out[m[var]] = c;
    }
    return out;
}

inline MultiPoly from_univariate(const RingPtr& ring, std::size_t var, const UniPoly& p) {
    MultiPoly out(ring);
    for (std::size_t k = 0; k < p.size(); ++k) {
        Monomial m(ring->var_count(), 0);
        m[var] = static_cast<unsigned>(k);
        out += MultiPoly::term(ring, std::move(m), p[k]);
    }
    return out;
}

inline UniPoly uni_scale(const FieldScalar& s, UniPoly p) {
    for (auto& c : p) c *= s;
    uni_trim(p);
    return p;
}

inline UniPoly uni_sub(UniPoly a, const UniPoly& b) {
    if (a.size() < b.size()) {
        FieldScalar z = b.empty() ? FieldScalar() : FieldScalar::zero(b[0].field());
        a.resize(b.size(), z);
    }
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    uni_trim(a);
    return a;
}

inline UniPoly uni_mul(const UniPoly& a, const UniPoly& b) {
    if (a.empty() || b.empty()) return {};
    UniPoly r(a.size() + b.size() - 1, FieldScalar::zero(a[0].field()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    uni_trim(r);
    return r;
}

inline void uni_divmod(UniPoly a, const UniPoly& b, UniPoly& q, UniPoly& r) {
    if (b.empty()) throw PreconditionError("univariate division by zero");
    q.clear();
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, FieldScalar::zero(b[0].field()));
    while (uni_degree(a) >= uni_degree(b)) {
        std::size_t shift = a.size() - b.size();
        FieldScalar c = a.back() / b.back();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        uni_trim(a);
        if (a.empty()) break;
    }
    r = std::move(a);
}

// Monic gcd via the Euclidean algorithm; gcd(0, 0) = 0.
inline UniPoly uni_gcd(UniPoly a, UniPoly b) {
    uni_trim(a);
    uni_trim(b);
    while (!b.empty()) {
        UniPoly q, r;
        uni_divmod(std::move(a), b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && !a.back().is_one()) {
        // Take the inverse first: the moved-from argument must not be read.
        FieldScalar inv = a.back().inverse();
        a = uni_scale(inv, std::move(a));
    }
    return a;
}

inline UniPoly uni_derivative(const UniPoly& p) {
    UniPoly r;
    for (std::size_t k = 1; k < p.size(); ++k)
        r.push_back(FieldScalar(p[k].field(), Rational(static_cast<long>(k))) * p[k]);
    uni_trim(r);
    return r;
}

// Antiderivative with zero constant term; exact over characteristic zero.
inline UniPoly uni_antiderivative(const UniPoly& p) {
    if (p.empty()) return {};
    UniPoly r(p.size() + 1, FieldScalar::zero(p[0].field()));
    for (std::size_t k = 0; k < p.size(); ++k)
        r[k + 1] = p[k] / FieldScalar(p[k].field(), Rational(static_cast<long>(k + 1)));
    uni_trim(r);
    return r;
}

inline FieldScalar uni_evaluate(const UniPoly& p, const FieldScalar& x) {
    FieldScalar acc = FieldScalar::zero(x.field());
    for (std::size_t k = p.size(); k-- > 0;) acc = acc * x + p[k];
    return acc;
}

// p(a*X + g) by Horner expansion.
inline UniPoly uni_compose_affine(const UniPoly& p, const FieldScalar& a,
                                  const FieldScalar& g) {
    UniPoly lin = {g, a};
    uni_trim(lin);
    UniPoly acc;
    for (std::size_t k = p.size(); k-- > 0;) {
        acc = uni_mul(acc, lin);
        if (acc.empty()) acc.push_back(p[k]);
        else acc[0] += p[k];
        uni_trim(acc);
    }
    return acc;
}

// Shift center and depressed polynomial: p(X + center) has no degree
// (s-1) term, where s = deg p. Requires deg p >= 1.
struct Depressed {
    FieldScalar center;
    UniPoly poly;
};

inline Depressed depress(const UniPoly& p) {
    int s = uni_degree(p);
    if (s < 1) throw PreconditionError("cannot depress a constant polynomial");
    const FieldPtr& field = p.back().field();
    FieldScalar center = -(p[s - 1] / (FieldScalar(field, Rational(s)) * p.back()));
    return {center, uni_compose_affine(p, FieldScalar::one(field), center)};
}

// gcd of the positive exponents carrying nonzero coefficients; 0 when the
// polynomial is constant.
inline unsigned exponent_gcd(const UniPoly& p) {
    unsigned g = 0;
    for (std::size_t k = 1; k < p.size(); ++k)
        if (!p[k].is_zero()) g = std::gcd(g, static_cast<unsigned>(k));
    return g;
}

// Invariance group of p under X -> a*X + g, for deg p >= 2: all such maps
// are X -> lambda*(X - center) + center with lambda^order = 1.
struct AffineSymmetries {
    FieldScalar center;
    unsigned order;  // scaling factors are exactly the order-th roots of unity
};

inline AffineSymmetries affine_symmetries(const UniPoly& p) {
    if (uni_degree(p) < 2)
        throw PreconditionError("affine symmetry group requires degree >= 2");
    Depressed d = depress(p);
    return {d.center, exponent_gcd(d.poly)};
}

// Order of the scaling subgroup fixing a depressed polynomial.
inline unsigned scaling_order(const UniPoly& p) { return affine_symmetries(p).order; }

// True when gcd(f, g) is constant, where g is given by its coefficients
// with respect to the other variables; a common factor of f and g must
// divide f and every listed coefficient.
inline bool coprime_with_coefficients(const UniPoly& f, const std::vector<UniPoly>& coeffs) {
    UniPoly g = f;
    for (const auto& c : coeffs) {
        g = uni_gcd(std::move(g), c);
        if (uni_degree(g) <= 0) return true;
    }
    return uni_degree(g) <= 0;
}

}  // namespace tameiso
