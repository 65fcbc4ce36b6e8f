#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tameiso/cyclotomic.hpp"
#include "tameiso/errors.hpp"

namespace tameiso {

// Exponent vector; length always equals the ring's variable count.
using Monomial = std::vector<unsigned>;

inline unsigned monomial_degree(const Monomial& m) {
    unsigned d = 0;
    for (unsigned e : m) d += e;
    return d;
}

inline bool monomial_divides(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

// Graded lexicographic order: total degree first, then lex with the
// first variable most significant.
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        unsigned da = monomial_degree(a), db = monomial_degree(b);
        if (da != db) return da < db;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    }
};

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

// A polynomial ring K[X_1, ..., X_n] over a cyclotomic coefficient field.
class PolyRing {
public:
    static RingPtr make(FieldPtr field, std::vector<std::string> vars) {
        if (vars.empty()) throw PreconditionError("ring needs at least one variable");
        for (const auto& v : vars) {
            if (!valid_identifier(v))
                throw PreconditionError("invalid variable name '" + v + "'");
        }
        for (std::size_t i = 0; i < vars.size(); ++i)
            for (std::size_t j = i + 1; j < vars.size(); ++j)
                if (vars[i] == vars[j])
                    throw PreconditionError("duplicate variable name '" + vars[i] + "'");
        return std::shared_ptr<const PolyRing>(
            new PolyRing(std::move(field), std::move(vars)));
    }

    const FieldPtr& field() const { return field_; }
    const std::vector<std::string>& vars() const { return vars_; }
    std::size_t var_count() const { return vars_.size(); }

    std::optional<std::size_t> var_index(const std::string& name) const {
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == name) return i;
        return std::nullopt;
    }

    bool same_as(const PolyRing& other) const {
        return field_->order() == other.field_->order() && vars_ == other.vars_;
    }

    static bool valid_identifier(const std::string& s) {
        if (s.empty()) return false;
        if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
        for (char c : s)
            if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
        return true;
    }

private:
    PolyRing(FieldPtr field, std::vector<std::string> vars)
        : field_(std::move(field)), vars_(std::move(vars)) {}

    FieldPtr field_;
    std::vector<std::string> vars_;
};

// Sparse multivariate polynomial. Terms are kept in ascending graded-lex
// order with no zero coefficients, so the last entry is the leading term.
class MultiPoly {
public:
    using TermMap = std::map<Monomial, FieldScalar, GrlexLess>;

    explicit MultiPoly(RingPtr ring) : ring_(std::move(ring)) {}

    static MultiPoly zero(RingPtr ring) { return MultiPoly(std::move(ring)); }

    static MultiPoly constant(RingPtr ring, FieldScalar c) {
        MultiPoly p(std::move(ring));
        if (!c.is_zero()) p.terms_.emplace(Monomial(p.ring_->var_count(), 0), std::move(c));
        return p;
    }

    static MultiPoly constant(const RingPtr& ring, const Rational& q) {
        return constant(ring, FieldScalar(ring->field(), q));
    }

    static MultiPoly variable(RingPtr ring, std::size_t i) {
        if (i >= ring->var_count()) throw PreconditionError("variable index out of range");
        MultiPoly p(ring);
        Monomial m(ring->var_count(), 0);
        m[i] = 1;
        p.terms_.emplace(std::move(m), FieldScalar::one(ring->field()));
        return p;
    }

    static MultiPoly term(RingPtr ring, Monomial m, FieldScalar c) {
        if (m.size() != ring->var_count())
            throw PreconditionError("monomial length does not match ring");
        MultiPoly p(std::move(ring));
        if (!c.is_zero()) p.terms_.emplace(std::move(m), std::move(c));
        return p;
    }

    const RingPtr& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() ||
               (terms_.size() == 1 && monomial_degree(terms_.begin()->first) == 0);
    }

    // The scalar value of a constant polynomial (zero for the zero polynomial).
    FieldScalar constant_value() const {
        if (!is_constant()) throw PreconditionError("polynomial is not constant");
        if (terms_.empty()) return FieldScalar::zero(ring_->field());
        return terms_.begin()->second;
    }

    int total_degree() const {
        if (terms_.empty()) return -1;
        return static_cast<int>(monomial_degree(terms_.rbegin()->first));
    }

    int degree_in(std::size_t var) const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m[var]));
        return d;
    }

    // Largest term in graded-lex order; polynomial must be nonzero.
    const std::pair<const Monomial, FieldScalar>& leading() const {
        if (terms_.empty()) throw PreconditionError("zero polynomial has no leading term");
        return *terms_.rbegin();
    }

    FieldScalar coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        if (it == terms_.end()) return FieldScalar::zero(ring_->field());
        return it->second;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.ring_->same_as(*b.ring_) && a.terms_ == b.terms_;
    }

    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    MultiPoly operator-() const {
        MultiPoly r(ring_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
        check_same_ring(a, b);
        MultiPoly r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }

    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
        check_same_ring(a, b);
        MultiPoly r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
        return r;
    }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        check_same_ring(a, b);
        MultiPoly r(a.ring_);
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m(ma.size());
                for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
                r.add_term(std::move(m), ca * cb);
            }
        }
        return r;
    }

    friend MultiPoly operator*(const FieldScalar& s, const MultiPoly& p) {
        MultiPoly r(p.ring_);
        if (s.is_zero()) return r;
        for (const auto& [m, c] : p.terms_) {
            FieldScalar prod = s * c;
            if (!prod.is_zero()) r.terms_.emplace(m, std::move(prod));
        }
        return r;
    }

    friend MultiPoly operator*(const Rational& q, const MultiPoly& p) {
        return FieldScalar(p.ring_->field(), q) * p;
    }

    MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
    MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    MultiPoly pow(unsigned e) const {
        MultiPoly r = constant(ring_, FieldScalar::one(ring_->field()));
        MultiPoly base = *this;
        while (e > 0) {
            if (e & 1u) r *= base;
            if (e >>= 1) base *= base;
        }
        return r;
    }

    MultiPoly partial_derivative(std::size_t var) const {
        MultiPoly r(ring_);
        for (const auto& [m, c] : terms_) {
            if (m[var] == 0) continue;
            Monomial dm = m;
            dm[var] -= 1;
            r.add_term(std::move(dm), FieldScalar(ring_->field(), Rational(m[var])) * c);
        }
        return r;
    }

    // Simultaneous substitution X_i -> images[i]; images live in the target
    // ring, which must share the coefficient field.
    MultiPoly substitute(const RingPtr& target, const std::vector<MultiPoly>& images) const {
        if (images.size() != ring_->var_count())
            throw PreconditionError("substitution needs one image per variable");
        for (const auto& img : images)
            if (!img.ring()->same_as(*target))
                throw RingMismatchError("substitution image lies in a different ring");
        if (target->field()->order() != ring_->field()->order())
            throw RingMismatchError("substitution across different coefficient fields");

        std::vector<unsigned> max_exp(ring_->var_count(), 0);
        for (const auto& [m, c] : terms_)
            for (std::size_t i = 0; i < m.size(); ++i)
                max_exp[i] = std::max(max_exp[i], m[i]);

        // powers[i][k] = images[i]^k, built once per variable.
        std::vector<std::vector<MultiPoly>> powers(ring_->var_count());
        for (std::size_t i = 0; i < powers.size(); ++i) {
            powers[i].push_back(constant(target, FieldScalar::one(target->field())));
            for (unsigned k = 1; k <= max_exp[i]; ++k)
                powers[i].push_back(powers[i].back() * images[i]);
        }

        MultiPoly r(target);
        for (const auto& [m, c] : terms_) {
            MultiPoly t = constant(target, c);
            for (std::size_t i = 0; i < m.size(); ++i)
                if (m[i] > 0) t *= powers[i][m[i]];
            r += t;
        }
        return r;
    }

    FieldScalar evaluate(const std::vector<FieldScalar>& point) const {
        if (point.size() != ring_->var_count())
            throw PreconditionError("evaluation needs one value per variable");
        FieldScalar acc = FieldScalar::zero(ring_->field());
        for (const auto& [m, c] : terms_) {
            FieldScalar t = c;
            for (std::size_t i = 0; i < m.size(); ++i)
                if (m[i] > 0) t *= point[i].pow(m[i]);
            acc += t;
        }
        return acc;
    }

    // Coefficient of X_var^k, as a polynomial with the var removed from
    // each surviving monomial.
    MultiPoly coeff_of_power(std::size_t var, unsigned k) const {
        MultiPoly r(ring_);
        for (const auto& [m, c] : terms_) {
            if (m[var] != k) continue;
            Monomial stripped = m;
            stripped[var] = 0;
            r.add_term(std::move(stripped), c);
        }
        return r;
    }

    // Exact quotient this / u when u divides this; nullopt otherwise.
    std::optional<MultiPoly> divide_exact(const MultiPoly& u) const {
        check_same_ring(*this, u);
        if (u.is_zero()) throw PreconditionError("division by zero polynomial");
        MultiPoly q(ring_);
        MultiPoly r = *this;
        const auto& [lm, lc] = u.leading();
        while (!r.is_zero()) {
            const auto& [rm, rc] = r.leading();
            if (!monomial_divides(lm, rm)) return std::nullopt;
            Monomial qm(rm.size());
            for (std::size_t i = 0; i < qm.size(); ++i) qm[i] = rm[i] - lm[i];
            MultiPoly t = term(ring_, std::move(qm), rc / lc);
            q += t;
            r -= t * u;
        }
        return q;
    }

    bool divides(const MultiPoly& p) const { return p.divide_exact(*this).has_value(); }

private:
    void add_term(Monomial m, FieldScalar c) {
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(std::move(m), std::move(c));
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    static void check_same_ring(const MultiPoly& a, const MultiPoly& b) {
        if (!a.ring_->same_as(*b.ring_))
            throw RingMismatchError("polynomials lie in different rings");
    }

    RingPtr ring_;
    TermMap terms_;
};

// All monomials of total degree <= max_deg supported on the given variable
// set, ascending graded-lex.
inline std::vector<Monomial> monomials_up_to_degree(const RingPtr& ring,
                                                    const std::vector<std::size_t>& vars,
                                                    unsigned max_deg) {
    std::vector<Monomial> out;
    Monomial cur(ring->var_count(), 0);
    auto rec = [&](auto&& self, std::size_t pos, unsigned remaining) -> void {
        if (pos == vars.size()) {
            out.push_back(cur);
            return;
        }
        for (unsigned e = 0; e <= remaining; ++e) {
            cur[vars[pos]] = e;
            self(self, pos + 1, remaining - e);
        }
        cur[vars[pos]] = 0;
    };
    rec(rec, 0, max_deg);
    std::sort(out.begin(), out.end(), GrlexLess{});
    return out;
}

inline std::vector<Monomial> monomials_up_to_degree(const RingPtr& ring,
                                                    unsigned max_deg) {
    std::vector<std::size_t> all(ring->var_count());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return monomials_up_to_degree(ring, all, max_deg);
}

}  // namespace tameiso
