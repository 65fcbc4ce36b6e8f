#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "tameiso/commutant.hpp"
#include "tameiso/linalg.hpp"
#include "tameiso/maps.hpp"
#include "tameiso/univariate.hpp"

namespace tameiso {

// Certificates of non-simplicity, each re-verifiable by a single exact
// identity.
struct StableIdealWitness {
    MultiPoly u;         // non-constant generator with D(u) = cofactor * u
    MultiPoly cofactor;
};

struct FirstIntegralWitness {
    MultiPoly h;  // non-constant, D(h) = 0
};

struct OdeSolutionWitness {
    std::size_t index;  // variable index i with h' = a_i h + b_i
    MultiPoly h;
};

struct RepeatedPairWitness {
    std::size_t i, j;  // (a_i, b_i) = (a_j, b_j), i < j
};

using NonSimplicityWitness = std::variant<StableIdealWitness, FirstIntegralWitness,
                                          OdeSolutionWitness, RepeatedPairWitness>;

struct SimplicityVerdict {
    enum class Kind { Simple, NotSimple, Unknown };
    Kind kind;
    std::string reason;
    std::optional<NonSimplicityWitness> witness;     // primary certificate
    std::optional<StableIdealWitness> stable_ideal;  // set for every NotSimple
    std::optional<OdeSolutionWitness> ode;           // when an ODE solution exists
    std::optional<ElementaryAuto> automorphism;      // commuting, non-identity
};

// Cofactor q with D(u) = q * u, when the principal ideal is stable.
inline std::optional<MultiPoly> principal_stable(const Derivation& d, const MultiPoly& u) {
    if (u.is_zero()) throw PreconditionError("ideal generator must be nonzero");
    return derive(d, u).divide_exact(u);
}

namespace detail {

// Kernel of p -> D(p) - c * p on the span of the given monomials; the
// image is not degree-truncated, so membership is exact.
inline std::vector<MultiPoly> derivation_kernel(const Derivation& d,
                                                const std::vector<Monomial>& monos,
                                                const FieldScalar& c) {
    const RingPtr& ring = d.ring;
    std::vector<MultiPoly> images;
    images.reserve(monos.size());
    for (const auto& m : monos) {
        MultiPoly mm = MultiPoly::term(ring, m, FieldScalar::one(ring->field()));
        images.push_back(derive(d, mm) - c * mm);
    }
    std::map<Monomial, std::size_t, GrlexLess> row_of;
    Matrix rows;
    for (std::size_t u = 0; u < images.size(); ++u) {
        for (const auto& [m, co] : images[u].terms()) {
            auto it = row_of.find(m);
            std::size_t r;
            if (it == row_of.end()) {
                rows.emplace_back(monos.size(), FieldScalar::zero(ring->field()));
                r = rows.size() - 1;
                row_of.emplace(m, r);
            } else {
                r = it->second;
            }
            rows[r][u] = co;
        }
    }
    std::vector<Vector> basis = nullspace(std::move(rows), monos.size(), ring->field());
    std::vector<MultiPoly> out;
    for (const auto& v : basis) {
        MultiPoly p(ring);
        for (std::size_t t = 0; t < monos.size(); ++t)
            p += MultiPoly::term(ring, monos[t], v[t]);
        out.push_back(std::move(p));
    }
    return out;
}

inline std::vector<Monomial> monomials_without_constants(const RingPtr& ring, unsigned d) {
    std::vector<std::size_t> all;
    for (std::size_t i = 0; i < ring->var_count(); ++i) all.push_back(i);
    std::vector<Monomial> monos = monomials_up_to_degree(ring, all, d);
    monos.erase(monos.begin());  // drop the constant monomial
    return monos;
}

}  // namespace detail

// Basis of the non-constant first integrals of total degree <= d: the
// kernel of D on the zero-constant-term subspace.
inline std::vector<MultiPoly> first_integrals(const Derivation& d, unsigned max_degree) {
    if (max_degree < 1) throw PreconditionError("degree bound must be >= 1");
    return detail::derivation_kernel(d, detail::monomials_without_constants(d.ring, max_degree),
                                     FieldScalar::zero(d.ring->field()));
}

// Basis of the degree <= d solutions of D(u) = c * u. For c = 0 constants
// are excluded (they are trivially in the kernel); for c != 0 they cannot
// occur, so the full degree <= d space is searched.
inline std::vector<MultiPoly> darboux_fixed_cofactor(const Derivation& d,
                                                     const FieldScalar& c,
                                                     unsigned max_degree) {
    if (max_degree < 1) throw PreconditionError("degree bound must be >= 1");
    std::vector<Monomial> monos;
    if (c.is_zero()) {
        monos = detail::monomials_without_constants(d.ring, max_degree);
    } else {
        std::vector<std::size_t> all;
        for (std::size_t i = 0; i < d.ring->var_count(); ++i) all.push_back(i);
        monos = monomials_up_to_degree(d.ring, all, max_degree);
    }
    return detail::derivation_kernel(d, monos, c);
}

struct PrefilterResult {
    std::optional<NonSimplicityWitness> witness;
    std::string diagnostics;  // degree-sum inequalities any simple derivation satisfies
};

// Constructive non-simplicity screens for D = f dX + g dY: constant pair,
// single-variable image, and constant-flow cases. Finding nothing proves
// nothing (a first-integral search remains necessary).
inline PrefilterResult two_var_prefilter(const Derivation& d) {
    if (d.ring->var_count() != 2)
        throw PreconditionError("prefilter requires exactly two variables");
    const RingPtr& ring = d.ring;
    const MultiPoly& f = d.images[0];
    const MultiPoly& g = d.images[1];
    MultiPoly x = MultiPoly::variable(ring, 0);
    MultiPoly y = MultiPoly::variable(ring, 1);
    PrefilterResult res;

    auto finish_integral = [&](MultiPoly h) {
        if (!derive(d, h).is_zero() || h.is_constant())
            throw Error("internal: invalid first integral witness");
        res.witness = FirstIntegralWitness{std::move(h)};
        return res;
    };
    auto finish_stable = [&](const MultiPoly& u) {
        auto cof = principal_stable(d, u);
        if (!cof || u.is_constant())
            throw Error("internal: invalid stable ideal witness");
        res.witness = StableIdealWitness{u, *cof};
        return res;
    };

    res.diagnostics = "deg_" + ring->vars()[0] + " f + deg_" + ring->vars()[0] +
                      " g = " + std::to_string(f.degree_in(0) + g.degree_in(0)) +
                      "; deg_" + ring->vars()[1] + " f + deg_" + ring->vars()[1] +
                      " g = " + std::to_string(f.degree_in(1) + g.degree_in(1));

    if (f.is_constant() && g.is_constant()) {
        if (f.is_zero() && g.is_zero()) return finish_integral(x);
        return finish_integral(MultiPoly::constant(ring, g.constant_value()) * x -
                               MultiPoly::constant(ring, f.constant_value()) * y);
    }
    if (!g.is_constant() && g.degree_in(0) == 0) return finish_stable(g);
    if (!f.is_constant() && f.degree_in(1) == 0) return finish_stable(f);
    if (f.is_zero()) return finish_integral(x);
    if (g.is_zero()) return finish_integral(y);
    if (f.is_constant() && g.degree_in(1) == 0) {
        auto g_uni = to_univariate(g, 0);
        UniPoly anti = uni_antiderivative(*g_uni);
        return finish_integral(
            MultiPoly::constant(ring, f.constant_value().inverse()) *
                from_univariate(ring, 0, anti) - y);
    }
    if (g.is_constant() && f.degree_in(0) == 0) {
        auto f_uni = to_univariate(f, 1);
        UniPoly anti = uni_antiderivative(*f_uni);
        return finish_integral(
            MultiPoly::constant(ring, g.constant_value().inverse()) *
                from_univariate(ring, 1, anti) - x);
    }
    return res;
}

// The unique-or-absent polynomial solution of h' = a h + b for a != 0:
// the degree is pinned to deg b - deg a by leading-term comparison.
inline std::optional<UniPoly> shamsuddin_ode_solve(const UniPoly& a, const UniPoly& b) {
    UniPoly aa = a, bb = b;
    uni_trim(aa);
    uni_trim(bb);
    if (aa.empty()) throw PreconditionError("ODE coefficient a must be nonzero");
    const FieldPtr& field = aa[0].field();
    if (bb.empty()) return UniPoly{};
    int n = uni_degree(bb) - uni_degree(aa);
    if (n < 0) return std::nullopt;

    // h = sum h_k X^k, k <= n; rows index coefficients of h' - a h - b.
    const std::size_t unknowns = static_cast<std::size_t>(n) + 1;
    const std::size_t maxdeg = static_cast<std::size_t>(uni_degree(bb));
    Matrix rows(maxdeg + 1, Vector(unknowns, FieldScalar::zero(field)));
    Vector rhs(maxdeg + 1, FieldScalar::zero(field));
    for (std::size_t k = 0; k < unknowns; ++k) {
        if (k >= 1)
            rows[k - 1][k] += FieldScalar(field, Rational(static_cast<long>(k)));
        for (std::size_t t = 0; t < aa.size(); ++t) rows[t + k][k] -= aa[t];
    }
    for (std::size_t t = 0; t < bb.size(); ++t) rhs[t] = bb[t];

    auto sol = solve_affine(rows, rhs, unknowns, field);
    if (!sol) return std::nullopt;
    UniPoly h = sol->particular;
    uni_trim(h);
    return h;
}

// The coefficient pairs of a Shamsuddin derivation D = dX + sum (a_i Y_i + b_i) dY_i.
struct ShamsuddinSpec {
    std::vector<std::pair<UniPoly, UniPoly>> pairs;  // (a_i, b_i), univariate in X
};

inline ShamsuddinSpec shamsuddin_extract(const Derivation& d) {
    if (!classify_shape(d).is_shamsuddin)
        throw PreconditionError("derivation is not in Shamsuddin form");
    ShamsuddinSpec spec;
    for (std::size_t i = 1; i < d.ring->var_count(); ++i) {
        auto a = to_univariate(d.images[i].coeff_of_power(i, 1), 0);
        auto b = to_univariate(d.images[i].coeff_of_power(i, 0), 0);
        uni_trim(*a);
        uni_trim(*b);
        spec.pairs.emplace_back(std::move(*a), std::move(*b));
    }
    return spec;
}

// Complete simplicity decision for Shamsuddin derivations: D is simple
// unless some a_i = 0, some pair is constant, some pair repeats, or some
// h' = a_i h + b_i has a polynomial solution. Every negative verdict
// carries a re-verified stable ideal and a commuting automorphism.
inline SimplicityVerdict shamsuddin_decide(const Derivation& d) {
    ShamsuddinSpec spec = shamsuddin_extract(d);
    const RingPtr& ring = d.ring;
    const FieldPtr& field = ring->field();

    SimplicityVerdict v;
    auto attach = [&](MultiPoly u, std::optional<ElementaryAuto> sigma) {
        auto cof = principal_stable(d, u);
        if (!cof || u.is_constant())
            throw Error("internal: stable ideal witness failed re-verification");
        v.stable_ideal = StableIdealWitness{std::move(u), *cof};
        if (sigma) {
            if (sigma->is_identity() || !commutes(*sigma, d))
                throw Error("internal: witness automorphism failed re-verification");
            v.automorphism = std::move(sigma);
        }
        v.kind = SimplicityVerdict::Kind::NotSimple;
    };

    for (std::size_t t = 0; t < spec.pairs.size(); ++t) {
        const std::size_t var = t + 1;
        const auto& [a, b] = spec.pairs[t];
        const std::string yname = ring->vars()[var];

        if (a.empty()) {
            MultiPoly u = MultiPoly::variable(ring, var) -
                          from_univariate(ring, 0, uni_antiderivative(b));
            v.reason = "the image of " + yname + " does not involve " + yname +
                       "; its antiderivative splits off a stable ideal";
            attach(u, ElementaryAuto(ring, var, FieldScalar::one(field),
                                     MultiPoly::constant(ring, Rational(1))));
            v.witness = v.stable_ideal;
            return v;
        }

        if (uni_degree(a) == 0 && uni_degree(b) <= 0) {
            MultiPoly u = from_univariate(ring, 0, a) * MultiPoly::variable(ring, var) +
                          from_univariate(ring, 0, b);
            UniPoly h = {b.empty() ? FieldScalar::zero(field) : -(b[0] / a[0])};
            uni_trim(h);
            MultiPoly offset = -from_univariate(ring, 0, h);
            v.reason = "constant coefficient pair at " + yname;
            attach(u, ElementaryAuto(ring, var, FieldScalar(field, Rational(2)), offset));
            v.witness = v.stable_ideal;
            return v;
        }

        for (std::size_t s = 0; s < t; ++s) {
            if (spec.pairs[s].first == a && spec.pairs[s].second == b) {
                MultiPoly u = MultiPoly::variable(ring, s + 1) -
                              MultiPoly::variable(ring, var);
                v.reason = "identical coefficient pairs at " + ring->vars()[s + 1] +
                           " and " + yname;
                attach(u, ElementaryAuto(ring, s + 1, FieldScalar(field, Rational(2)),
                                         -MultiPoly::variable(ring, var)));
                v.witness = RepeatedPairWitness{s + 1, var};
                return v;
            }
        }

        if (auto h = shamsuddin_ode_solve(a, b)) {
            MultiPoly hp = from_univariate(ring, 0, *h);
            MultiPoly u = MultiPoly::variable(ring, var) - hp;
            v.reason = "polynomial solution of h' = a h + b at " + yname;
            v.ode = OdeSolutionWitness{var, hp};
            attach(u, ElementaryAuto(ring, var, FieldScalar(field, Rational(2)), -hp));
            v.witness = v.stable_ideal;
            return v;
        }
    }

    v.kind = SimplicityVerdict::Kind::Simple;
    v.reason = "every a_i is nonzero, no pair is constant or repeated, and no "
               "h' = a_i h + b_i has a polynomial solution";
    return v;
}

}  // namespace tameiso
