#pragma once

#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "tameiso/errors.hpp"
#include "tameiso/rational.hpp"

namespace tameiso {

namespace detail {

// Dense univariate polynomials over Q, coefficients ascending.
using QPoly = std::vector<Rational>;

inline void qp_trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int qp_degree(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

inline QPoly qp_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    qp_trim(r);
    return r;
}

inline QPoly qp_sub(QPoly a, const QPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rational(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    qp_trim(a);
    return a;
}

// Euclidean division; q and r with a = q*b + r, deg r < deg b.
inline void qp_divmod(QPoly a, const QPoly& b, QPoly& q, QPoly& r) {
    q.assign(a.size() > b.size() ? a.size() - b.size() + 1 : 1, Rational(0));
    const Rational& lead = b.back();
    while (qp_degree(a) >= qp_degree(b)) {
        std::size_t shift = a.size() - b.size();
        Rational c = a.back() / lead;
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        qp_trim(a);
        if (a.empty()) break;
    }
    qp_trim(q);
    r = std::move(a);
}

// Extended Euclid: returns g = gcd(a, b) along with u with u*a = g (mod b).
inline QPoly qp_inverse_mod(const QPoly& a, const QPoly& modulus) {
    QPoly r0 = modulus, r1 = a;
    QPoly u0 = {}, u1 = {Rational(1)};
    while (!r1.empty()) {
        QPoly q, rem;
        qp_divmod(r0, r1, q, rem);
        QPoly unext = qp_sub(u0, qp_mul(q, u1));
        r0 = std::move(r1);
        r1 = std::move(rem);
        u0 = std::move(u1);
        u1 = std::move(unext);
    }
    // r0 is a nonzero constant since the modulus is irreducible.
    QPoly inv = u0;
    for (auto& c : inv) c /= r0[0];
    QPoly q, rem;
    qp_divmod(inv, modulus, q, rem);
    return rem;
}

}  // namespace detail

// The coefficient field Q(zeta_m): rationals extended by a primitive m-th
// root of unity, represented as residues modulo the m-th cyclotomic
// polynomial. Order 1 gives plain Q.
class CyclotomicField {
public:
    static std::shared_ptr<const CyclotomicField> make(unsigned order) {
        if (order < 1) throw PreconditionError("cyclotomic order must be >= 1");
        return std::shared_ptr<const CyclotomicField>(new CyclotomicField(order));
    }

    unsigned order() const { return order_; }

    // phi(m): the extension degree over Q.
    unsigned degree() const { return degree_; }

    // The m-th cyclotomic polynomial, ascending integer coefficients, monic.
    const std::vector<Integer>& modulus() const { return modulus_; }

    // Order of the group of roots of unity inside Q(zeta_m): lcm(2, m).
    unsigned torsion_order() const { return order_ % 2 == 0 ? order_ : 2 * order_; }

private:
    explicit CyclotomicField(unsigned order) : order_(order) {
        modulus_ = cyclotomic_polynomial(order);
        degree_ = static_cast<unsigned>(modulus_.size() - 1);
    }

    // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d, exact integer division.
    static std::vector<Integer> cyclotomic_polynomial(unsigned m) {
        std::vector<Integer> num(m + 1, Integer(0));
        num[0] = -1;
        num[m] = 1;
        for (unsigned d = 1; d < m; ++d) {
            if (m % d != 0) continue;
            std::vector<Integer> phi_d = cyclotomic_polynomial(d);
            num = divide_exact(num, phi_d);
        }
        return num;
    }

    static std::vector<Integer> divide_exact(std::vector<Integer> a,
                                             const std::vector<Integer>& b) {
        std::vector<Integer> q(a.size() - b.size() + 1, Integer(0));
        for (std::size_t i = a.size(); i-- >= b.size();) {
            std::size_t shift = i - (b.size() - 1);
            Integer c = a[i] / b.back();
            q[shift] = c;
            for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] -= c * b[k];
            if (i == b.size() - 1) break;
        }
        return q;
    }

    unsigned order_;
    unsigned degree_;
    std::vector<Integer> modulus_;
};

using FieldPtr = std::shared_ptr<const CyclotomicField>;

// One exact element of Q(zeta_m): a residue modulo Phi_m stored as phi(m)
// rational coordinates. Every nonzero element is invertible.
class FieldScalar {
public:
    FieldScalar() : FieldScalar(rationals()) {}

    explicit FieldScalar(FieldPtr field)
        : field_(std::move(field)), coeffs_(field_->degree(), Rational(0)) {}

    FieldScalar(FieldPtr field, Rational value) : FieldScalar(std::move(field)) {
        // mpq arithmetic and comparison assume canonical fractions; callers
        // may hand us Rational(2, 4).
        value.canonicalize();
        coeffs_[0] = std::move(value);
    }

    FieldScalar(FieldPtr field, long value)
        : FieldScalar(std::move(field), Rational(value)) {}

    static FieldScalar zero(const FieldPtr& field) { return FieldScalar(field); }

    static FieldScalar one(const FieldPtr& field) { return FieldScalar(field, 1); }

    // The residue class of x, i.e. the primitive m-th root of unity.
    static FieldScalar zeta(const FieldPtr& field) {
        detail::QPoly x = {Rational(0), Rational(1)};
        return from_residue(field, std::move(x));
    }

    static FieldScalar from_residue(const FieldPtr& field, detail::QPoly poly) {
        FieldScalar s(field);
        for (auto& c : poly) c.canonicalize();
        reduce(*field, poly);
        for (std::size_t i = 0; i < poly.size(); ++i) s.coeffs_[i] = poly[i];
        return s;
    }

    const FieldPtr& field() const { return field_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (c != 0) return false;
        return true;
    }

    bool is_one() const { return is_rational() && coeffs_[0] == 1; }

    // True when the element lies in the prime field Q.
    bool is_rational() const {
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) return false;
        return true;
    }

    // Requires is_rational().
    const Rational& rational_value() const {
        if (!is_rational())
            throw PreconditionError("field element is not rational");
        return coeffs_[0];
    }

    friend bool operator==(const FieldScalar& a, const FieldScalar& b) {
        return a.field_->order() == b.field_->order() && a.coeffs_ == b.coeffs_;
    }

    friend bool operator!=(const FieldScalar& a, const FieldScalar& b) {
        return !(a == b);
    }

    // Deterministic total order (field order, then coordinates).
    friend bool operator<(const FieldScalar& a, const FieldScalar& b) {
        if (a.field_->order() != b.field_->order())
            return a.field_->order() < b.field_->order();
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            int c = cmp(a.coeffs_[i], b.coeffs_[i]);
            if (c != 0) return c < 0;
        }
        return false;
    }

    FieldScalar operator-() const {
        FieldScalar r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    friend FieldScalar operator+(const FieldScalar& a, const FieldScalar& b) {
        check_compatible(a, b);
        FieldScalar r = a;
        for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] += b.coeffs_[i];
        return r;
    }

    friend FieldScalar operator-(const FieldScalar& a, const FieldScalar& b) {
        check_compatible(a, b);
        FieldScalar r = a;
        for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] -= b.coeffs_[i];
        return r;
    }

    friend FieldScalar operator*(const FieldScalar& a, const FieldScalar& b) {
        check_compatible(a, b);
        detail::QPoly prod(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return from_residue(a.field_, std::move(prod));
    }

    friend FieldScalar operator/(const FieldScalar& a, const FieldScalar& b) {
        return a * b.inverse();
    }

    FieldScalar& operator+=(const FieldScalar& o) { return *this = *this + o; }
    FieldScalar& operator-=(const FieldScalar& o) { return *this = *this - o; }
    FieldScalar& operator*=(const FieldScalar& o) { return *this = *this * o; }

    FieldScalar inverse() const {
        if (is_zero()) throw PreconditionError("division by zero field element");
        if (is_rational()) {
            FieldScalar r(field_);
            r.coeffs_[0] = Rational(1) / coeffs_[0];
            return r;
        }
        detail::QPoly mod(field_->modulus().size());
        for (std::size_t i = 0; i < mod.size(); ++i)
            mod[i] = Rational(field_->modulus()[i]);
        detail::QPoly a(coeffs_.begin(), coeffs_.end());
        detail::qp_trim(a);
        return from_residue(field_, detail::qp_inverse_mod(a, mod));
    }

    FieldScalar pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        FieldScalar base = *this;
        FieldScalar r = one(field_);
        while (e > 0) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    // Shared Q instance; scalars default to it.
    static const FieldPtr& rationals() {
        static FieldPtr q = CyclotomicField::make(1);
        return q;
    }

private:
    static void check_compatible(const FieldScalar& a, const FieldScalar& b) {
        if (a.field_->order() != b.field_->order())
            throw RingMismatchError(
                "field mismatch: Q(zeta_" + std::to_string(a.field_->order()) +
                ") vs Q(zeta_" + std::to_string(b.field_->order()) + ")");
    }

    static void reduce(const CyclotomicField& field, detail::QPoly& p) {
        const auto& mod = field.modulus();
        const std::size_t deg = mod.size() - 1;
        while (p.size() > deg) {
            Rational c = p.back();
            std::size_t shift = p.size() - 1 - deg;
            if (c != 0)
                for (std::size_t k = 0; k < mod.size(); ++k)
                    p[shift + k] -= c * Rational(mod[k]);
            p.pop_back();
        }
    }

    FieldPtr field_;
    std::vector<Rational> coeffs_;
};

// A generator of the full group of roots of unity in Q(zeta_m), which has
// order lcm(2, m).
inline FieldScalar primitive_torsion_root(const FieldPtr& field) {
    unsigned m = field->order();
    if (m % 2 == 0) return FieldScalar::zeta(field);
    // For odd m, -zeta^((m+1)/2) has order 2m.
    return -FieldScalar::zeta(field).pow((m + 1) / 2);
}

// All lambda in Q(zeta_m) with lambda^s = 1, listed deterministically
// starting from 1. For s = 0 every root of unity qualifies.
inline std::vector<FieldScalar> roots_of_unity(const FieldPtr& field, unsigned s) {
    unsigned m_tor = field->torsion_order();
    unsigned g = s == 0 ? m_tor : std::gcd(s, m_tor);
    FieldScalar xi = primitive_torsion_root(field);
    FieldScalar step = xi.pow(m_tor / g);
    std::vector<FieldScalar> out;
    FieldScalar cur = FieldScalar::one(field);
    for (unsigned k = 0; k < g; ++k) {
        out.push_back(cur);
        cur = cur * step;
    }
    return out;
}

}  // namespace tameiso
