#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "tameiso/polynomial.hpp"

namespace tameiso {

// A K-derivation of the ring, determined by its images f_i = D(X_i).
struct Derivation {
    RingPtr ring;
    std::vector<MultiPoly> images;

    Derivation(RingPtr r, std::vector<MultiPoly> imgs)
        : ring(std::move(r)), images(std::move(imgs)) {
        if (images.size() != ring->var_count())
            throw PreconditionError("derivation needs one image per variable");
        for (const auto& f : images)
            if (!f.ring()->same_as(*ring))
                throw RingMismatchError("derivation image lies in a different ring");
    }
};

// D(p) = sum_i dp/dX_i * f_i.
inline MultiPoly derive(const Derivation& d, const MultiPoly& p) {
    if (!p.ring()->same_as(*d.ring))
        throw RingMismatchError("polynomial lies outside the derivation's ring");
    MultiPoly out(d.ring);
    for (std::size_t i = 0; i < d.images.size(); ++i)
        out += p.partial_derivative(i) * d.images[i];
    return out;
}

// A ring endomorphism given by its images g_i; not assumed invertible.
struct Endomorphism {
    RingPtr ring;
    std::vector<MultiPoly> images;

    Endomorphism(RingPtr r, std::vector<MultiPoly> imgs)
        : ring(std::move(r)), images(std::move(imgs)) {
        if (images.size() != ring->var_count())
            throw PreconditionError("endomorphism needs one image per variable");
        for (const auto& g : images)
            if (!g.ring()->same_as(*ring))
                throw RingMismatchError("endomorphism image lies in a different ring");
    }

    static Endomorphism identity(const RingPtr& ring) {
        std::vector<MultiPoly> imgs;
        for (std::size_t i = 0; i < ring->var_count(); ++i)
            imgs.push_back(MultiPoly::variable(ring, i));
        return Endomorphism(ring, std::move(imgs));
    }
};

inline MultiPoly apply(const Endomorphism& s, const MultiPoly& p) {
    if (!p.ring()->same_as(*s.ring))
        throw RingMismatchError("polynomial lies outside the endomorphism's ring");
    return p.substitute(s.ring, s.images);
}

// X_j -> a*X_j + h with a != 0 and h independent of X_j; fixes the other
// variables. Always invertible.
struct ElementaryAuto {
    RingPtr ring;
    std::size_t axis;
    FieldScalar scale;
    MultiPoly offset;

    ElementaryAuto(RingPtr r, std::size_t j, FieldScalar a, MultiPoly h)
        : ring(std::move(r)), axis(j), scale(std::move(a)), offset(std::move(h)) {
        if (axis >= ring->var_count()) throw PreconditionError("axis out of range");
        if (scale.is_zero())
            throw PreconditionError("elementary automorphism needs nonzero scale");
        if (!offset.ring()->same_as(*ring))
            throw RingMismatchError("offset lies in a different ring");
        if (offset.degree_in(axis) > 0)
            throw PreconditionError("offset must be independent of the axis variable");
    }

    MultiPoly axis_image() const {
        return MultiPoly::constant(ring, scale) * MultiPoly::variable(ring, axis) + offset;
    }

    Endomorphism as_endomorphism() const {
        std::vector<MultiPoly> imgs;
        for (std::size_t i = 0; i < ring->var_count(); ++i)
            imgs.push_back(i == axis ? axis_image() : MultiPoly::variable(ring, i));
        return Endomorphism(ring, std::move(imgs));
    }

    bool is_identity() const { return scale.is_one() && offset.is_zero(); }
};

inline MultiPoly apply(const ElementaryAuto& s, const MultiPoly& p) {
    return apply(s.as_endomorphism(), p);
}

inline ElementaryAuto elementary_inverse(const ElementaryAuto& s) {
    FieldScalar inv = s.scale.inverse();
    return ElementaryAuto(s.ring, s.axis, inv, -(inv * s.offset));
}

// A word of elementary automorphisms; the left-most factor acts first,
// so (u v)(p) = v(u(p)). The empty word is the identity.
struct TameWord {
    RingPtr ring;
    std::vector<ElementaryAuto> factors;

    explicit TameWord(RingPtr r, std::vector<ElementaryAuto> fs = {})
        : ring(std::move(r)), factors(std::move(fs)) {
        for (const auto& f : factors)
            if (!f.ring->same_as(*ring))
                throw RingMismatchError("word factor lies in a different ring");
    }
};

inline MultiPoly apply(const TameWord& w, const MultiPoly& p) {
    MultiPoly out = p;
    for (const auto& f : w.factors) out = apply(f, out);
    return out;
}

inline Endomorphism compose_word(const TameWord& w) {
    std::vector<MultiPoly> imgs;
    for (std::size_t i = 0; i < w.ring->var_count(); ++i)
        imgs.push_back(apply(w, MultiPoly::variable(w.ring, i)));
    return Endomorphism(w.ring, std::move(imgs));
}

inline TameWord word_inverse(const TameWord& w) {
    std::vector<ElementaryAuto> fs;
    for (auto it = w.factors.rbegin(); it != w.factors.rend(); ++it)
        fs.push_back(elementary_inverse(*it));
    return TameWord(w.ring, std::move(fs));
}

// sigma D = D sigma, checked on generators: both sides are determined by
// their values on the X_i.
inline bool commutes(const Endomorphism& s, const Derivation& d) {
    if (!s.ring->same_as(*d.ring))
        throw RingMismatchError("map and derivation live in different rings");
    for (std::size_t i = 0; i < d.images.size(); ++i)
        if (apply(s, d.images[i]) != derive(d, s.images[i])) return false;
    return true;
}

inline bool commutes(const ElementaryAuto& s, const Derivation& d) {
    return commutes(s.as_endomorphism(), d);
}

inline bool commutes(const TameWord& w, const Derivation& d) {
    return commutes(compose_word(w), d);
}

// w D w^{-1}, computed on generators.
inline Derivation conjugate(const Derivation& d, const TameWord& w) {
    TameWord winv = word_inverse(w);
    std::vector<MultiPoly> imgs;
    for (std::size_t i = 0; i < d.ring->var_count(); ++i) {
        MultiPoly pre = apply(winv, MultiPoly::variable(d.ring, i));
        imgs.push_back(apply(w, derive(d, pre)));
    }
    return Derivation(d.ring, std::move(imgs));
}

struct ShapeInfo {
    bool is_triangular = false;
    bool is_shamsuddin = false;
    // Axes j with every image independent of X_j; exactly the axes whose
    // translations all commute with D.
    std::vector<std::size_t> translation_invariant_axes;
};

// Syntactic pattern checks in the given variable order.
inline ShapeInfo classify_shape(const Derivation& d) {
    const std::size_t n = d.ring->var_count();
    ShapeInfo info;

    info.is_triangular = true;
    for (std::size_t i = 0; i < n && info.is_triangular; ++i)
        for (std::size_t k = i; k < n; ++k)
            if (d.images[i].degree_in(k) > 0) {
                info.is_triangular = false;
                break;
            }

    // First variable distinguished: D(X) = 1 and each remaining image is
    // a_i(X) * Y_i + b_i(X).
    info.is_shamsuddin = n >= 2 && d.images[0].is_constant() &&
                         d.images[0].constant_value().is_one();
    for (std::size_t i = 1; i < n && info.is_shamsuddin; ++i) {
        const MultiPoly& f = d.images[i];
        if (f.degree_in(i) > 1) {
            info.is_shamsuddin = false;
            break;
        }
        for (const auto& [m, c] : f.terms()) {
            for (std::size_t k = 1; k < n; ++k) {
                if (k != i && m[k] > 0) {
                    info.is_shamsuddin = false;
                    break;
                }
            }
            if (!info.is_shamsuddin) break;
        }
    }

    for (std::size_t j = 0; j < n; ++j) {
        bool invariant = true;
        for (const auto& f : d.images)
            if (f.degree_in(j) > 0) {
                invariant = false;
                break;
            }
        if (invariant) info.translation_invariant_axes.push_back(j);
    }
    return info;
}

}  // namespace tameiso
