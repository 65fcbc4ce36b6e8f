#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "tameiso/linalg.hpp"
#include "tameiso/maps.hpp"
#include "tameiso/univariate.hpp"

namespace tameiso {

enum class TranslationExtent { OnlyIdentity, AllShifts };

// The j-translations commuting with D: all of them or only the identity.
struct Translations {
    std::size_t axis;
    TranslationExtent extent;
};

// Exact and complete: every shift on axis j commutes iff no image involves
// X_j (a nonzero shift c has f_i(X_j + c) = f_i iff deg_{X_j} f_i = 0).
inline std::vector<Translations> translation_commutant(const Derivation& d) {
    std::vector<Translations> out;
    for (std::size_t j = 0; j < d.ring->var_count(); ++j) {
        bool all_free = true;
        for (const auto& f : d.images)
            if (f.degree_in(j) > 0) {
                all_free = false;
                break;
            }
        out.push_back({j, all_free ? TranslationExtent::AllShifts
                                   : TranslationExtent::OnlyIdentity});
    }
    return out;
}

// Solution set of the linear commutation system for sigma = (axis j,
// scale a, offset h) with deg h <= degree_bound: an affine subspace of the
// parameter space (a, coefficients of h). Members with a = 0 are excluded
// (not automorphisms). The identity (a=1, h=0) is always a solution, so
// the subspace is particular + span(directions).
struct AffineFamily {
    std::size_t axis;
    unsigned degree_bound;
    std::vector<Monomial> offset_monomials;  // free of the axis variable, ascending
    Vector particular;                       // (a, c_alpha...); identity
    std::vector<Vector> directions;          // canonical basis of the solution space

    ElementaryAuto member(const RingPtr& ring, const Vector& params) const {
        MultiPoly h(ring);
        for (std::size_t t = 0; t < offset_monomials.size(); ++t)
            h += MultiPoly::term(ring, offset_monomials[t], params[t + 1]);
        return ElementaryAuto(ring, axis, params[0], h);
    }
};

// Sets up and solves sigma(f_k) = D(sigma(X_k)) for all k as a linear
// system in (a, coefficients of h). Requires every f_k affine in X_j.
inline AffineFamily affine_axis_commutant(const Derivation& d, std::size_t axis,
                                          std::optional<unsigned> degree_bound = {}) {
    const RingPtr& ring = d.ring;
    const std::size_t n = ring->var_count();
    if (axis >= n) throw PreconditionError("axis out of range");

    std::string offenders;
    for (std::size_t k = 0; k < n; ++k)
        if (d.images[k].degree_in(axis) > 1)
            offenders += (offenders.empty() ? "" : ", ") + ring->vars()[k];
    if (!offenders.empty())
        throw PreconditionError("image(s) of " + offenders + " not affine in " +
                                ring->vars()[axis]);

    unsigned bound = 0;
    if (degree_bound) {
        bound = *degree_bound;
    } else {
        int maxdeg = -1;
        for (const auto& f : d.images) maxdeg = std::max(maxdeg, f.total_degree());
        bound = static_cast<unsigned>(std::max(0, maxdeg + 1));
    }

    std::vector<std::size_t> offset_vars;
    for (std::size_t i = 0; i < n; ++i)
        if (i != axis) offset_vars.push_back(i);
    std::vector<Monomial> monos = monomials_up_to_degree(ring, offset_vars, bound);
    const std::size_t unknowns = 1 + monos.size();

    // Coefficient polynomial of each unknown, per generator equation; the
    // constant part always cancels against the identity solution.
    MultiPoly xj = MultiPoly::variable(ring, axis);
    Matrix rows;
    for (std::size_t k = 0; k < n; ++k) {
        MultiPoly qk = d.images[k].coeff_of_power(axis, 1);
        MultiPoly pk = d.images[k].coeff_of_power(axis, 0);
        std::vector<MultiPoly> coeff;
        coeff.reserve(unknowns);
        if (k != axis) {
            coeff.push_back(qk * xj);
            for (const auto& alpha : monos)
                coeff.push_back(qk * MultiPoly::term(ring, alpha,
                                                     FieldScalar::one(ring->field())));
        } else {
            coeff.push_back(-pk);
            for (const auto& alpha : monos) {
                MultiPoly am = MultiPoly::term(ring, alpha, FieldScalar::one(ring->field()));
                coeff.push_back(qk * am - derive(d, am));
            }
        }
        // The inhomogeneous part equals minus the a-column at a = 1, so the
        // identity is a particular solution and only the nullspace is needed.
        std::map<Monomial, std::size_t, GrlexLess> row_of;
        auto row_for = [&](const Monomial& m) -> std::size_t {
            auto it = row_of.find(m);
            if (it != row_of.end()) return it->second;
            rows.emplace_back(unknowns, FieldScalar::zero(ring->field()));
            row_of.emplace(m, rows.size() - 1);
            return rows.size() - 1;
        };
        for (std::size_t u = 0; u < unknowns; ++u)
            for (const auto& [m, c] : coeff[u].terms()) rows[row_for(m)][u] = c;
    }

    std::vector<Vector> dirs = nullspace(std::move(rows), unknowns, ring->field());

    Vector particular(unknowns, FieldScalar::zero(ring->field()));
    particular[0] = FieldScalar::one(ring->field());
    return AffineFamily{axis, bound, std::move(monos), std::move(particular),
                        std::move(dirs)};
}

// {X_j -> lambda * X_j : lambda^order = 1}.
struct ScalingFamily {
    std::size_t axis;
    unsigned order;
};

// One parameterized family of elementary automorphisms on a fixed axis:
//   X_j -> lambda * X_j + offset_fixed + (1 - lambda) * offset_scale_tied
//          + gamma (if free_constant) + r (if free_poly, supp on free vars)
// with lambda ranging per scale_kind.
struct GeneratorFamily {
    enum class ScaleKind { Fixed, RootOfUnity, FreeNonzero };

    RingPtr ring;
    std::size_t axis;
    ScaleKind scale_kind;
    FieldScalar scale_value;  // Fixed only
    unsigned scale_order;     // RootOfUnity only: lambda^order = 1
    MultiPoly offset_fixed;
    MultiPoly offset_scale_tied;
    bool offset_free_constant;
    bool offset_free_poly;
    std::vector<std::size_t> offset_free_vars;

    static GeneratorFamily identity_only(const RingPtr& ring, std::size_t axis) {
        return base(ring, axis);
    }

    // (X_j + gamma) for all constants gamma.
    static GeneratorFamily all_translations(const RingPtr& ring, std::size_t axis) {
        GeneratorFamily g = base(ring, axis);
        g.offset_free_constant = true;
        return g;
    }

    // (lambda (X_j - c) + c) for lambda of the given root-of-unity order.
    static GeneratorFamily scalings(const RingPtr& ring, std::size_t axis,
                                    unsigned order, const FieldScalar& center) {
        GeneratorFamily g = base(ring, axis);
        g.scale_kind = ScaleKind::RootOfUnity;
        g.scale_order = order;
        g.offset_scale_tied = MultiPoly::constant(ring, center);
        return g;
    }

    // (a (X_j - c) + c) for every nonzero a.
    static GeneratorFamily free_scalings(const RingPtr& ring, std::size_t axis,
                                         const FieldScalar& center) {
        GeneratorFamily g = base(ring, axis);
        g.scale_kind = ScaleKind::FreeNonzero;
        g.offset_scale_tied = MultiPoly::constant(ring, center);
        return g;
    }

    // (a X_j + gamma) for every nonzero a and constant gamma.
    static GeneratorFamily full_affine(const RingPtr& ring, std::size_t axis) {
        GeneratorFamily g = base(ring, axis);
        g.scale_kind = ScaleKind::FreeNonzero;
        g.offset_free_constant = true;
        return g;
    }

    // (a X_j + (1-a) * tied + gamma) for every nonzero a and constant gamma.
    static GeneratorFamily scale_tied_offset(const RingPtr& ring, std::size_t axis,
                                             MultiPoly tied, bool free_constant) {
        GeneratorFamily g = base(ring, axis);
        g.scale_kind = ScaleKind::FreeNonzero;
        g.offset_scale_tied = std::move(tied);
        g.offset_free_constant = free_constant;
        return g;
    }

    // (X_j + r) for every polynomial r supported on the given variables.
    static GeneratorFamily free_offset(const RingPtr& ring, std::size_t axis,
                                       std::vector<std::size_t> vars) {
        GeneratorFamily g = base(ring, axis);
        g.offset_free_poly = true;
        g.offset_free_vars = std::move(vars);
        return g;
    }

    bool is_identity_only() const {
        return scale_kind == ScaleKind::Fixed && scale_value.is_one() &&
               offset_fixed.is_zero() && !offset_free_constant && !offset_free_poly;
    }

    // Concrete member; the caller picks lambda (and the free offset part)
    // consistent with the family's constraints.
    ElementaryAuto member(const FieldScalar& lambda, const MultiPoly& free_part) const {
        MultiPoly off = offset_fixed +
                        (FieldScalar::one(ring->field()) - lambda) * offset_scale_tied +
                        free_part;
        return ElementaryAuto(ring, axis, lambda, std::move(off));
    }

    ElementaryAuto member(const FieldScalar& lambda) const {
        return member(lambda, MultiPoly::zero(ring));
    }

    // The members with lambda a root of unity realizable in the coefficient
    // field (free offset parts set to zero).
    std::vector<ElementaryAuto> realizable_members() const {
        std::vector<ElementaryAuto> out;
        switch (scale_kind) {
            case ScaleKind::Fixed:
                out.push_back(member(scale_value));
                break;
            case ScaleKind::RootOfUnity:
                for (const auto& lambda : roots_of_unity(ring->field(), scale_order))
                    out.push_back(member(lambda));
                break;
            case ScaleKind::FreeNonzero:
                for (const auto& lambda : roots_of_unity(ring->field(), 0))
                    out.push_back(member(lambda));
                break;
        }
        return out;
    }

private:
    static GeneratorFamily base(const RingPtr& ring, std::size_t axis) {
        return GeneratorFamily{ring,
                               axis,
                               ScaleKind::Fixed,
                               FieldScalar::one(ring->field()),
                               1,
                               MultiPoly::zero(ring),
                               MultiPoly::zero(ring),
                               false,
                               false,
                               {}};
    }
};

struct ExplicitGenerators {
    std::vector<GeneratorFamily> families;
    std::string note;
};

using CommutantFamily = std::variant<Translations, AffineFamily, ScalingFamily,
                                     ExplicitGenerators>;

namespace detail {

// Subgroup of the affine substitutions X_j -> a X_j + gamma cut out by the
// per-coefficient conditions; closed under the meets that arise.
struct AffSubgroup {
    enum class Kind { Full, Translations, Scalings, Identity } kind;
    FieldScalar center;  // Scalings: gamma = (1 - a) * center
    unsigned order;      // Scalings: a^order = 1; order 0 means a free

    static AffSubgroup full() { return {Kind::Full, FieldScalar(), 0}; }
    static AffSubgroup translations() { return {Kind::Translations, FieldScalar(), 0}; }
    static AffSubgroup identity() { return {Kind::Identity, FieldScalar(), 1}; }
    static AffSubgroup scalings(FieldScalar c, unsigned s) {
        if (s == 1) return identity();
        return {Kind::Scalings, std::move(c), s};
    }
};

inline AffSubgroup meet(const AffSubgroup& x, const AffSubgroup& y) {
    using K = AffSubgroup::Kind;
    if (x.kind == K::Full) return y;
    if (y.kind == K::Full) return x;
    if (x.kind == K::Identity || y.kind == K::Identity) return AffSubgroup::identity();
    if (x.kind == K::Translations && y.kind == K::Translations)
        return AffSubgroup::translations();
    if (x.kind == K::Translations || y.kind == K::Translations)
        return AffSubgroup::identity();  // a = 1 inside scalings forces gamma = 0
    if (x.center != y.center) return AffSubgroup::identity();
    unsigned s = x.order == 0 ? y.order : y.order == 0 ? x.order : std::gcd(x.order, y.order);
    return AffSubgroup::scalings(x.center, s);
}

// Solutions of p(a X + gamma) = p(X): trivial for constant p; for deg >= 1
// the affine map must fix the depressed form, so gamma = (1-a) * center and
// a^g = 1 with g the exponent gcd of the depressed polynomial.
inline AffSubgroup invariance_subgroup(const UniPoly& p) {
    if (uni_degree(p) < 1) return AffSubgroup::full();
    Depressed dep = depress(p);
    return AffSubgroup::scalings(dep.center, exponent_gcd(dep.poly));
}

// Solutions of r(a X + gamma) = a * r(X): for deg >= 1, depressing r forces
// gamma = (1-a) * center and a^{k-1} = 1 for every surviving exponent k.
inline AffSubgroup equivariance_subgroup(const UniPoly& r) {
    int s = uni_degree(r);
    if (s < 0) return AffSubgroup::full();
    if (s == 0) return AffSubgroup::translations();  // r = a r forces a = 1
    Depressed dep = depress(r);
    unsigned g = 0;
    for (std::size_t k = 0; k < dep.poly.size(); ++k) {
        if (dep.poly[k].is_zero()) continue;
        unsigned dist = k >= 1 ? static_cast<unsigned>(k - 1)
                               : static_cast<unsigned>(1 - k);
        g = std::gcd(g, dist);
    }
    return AffSubgroup::scalings(dep.center, g);
}

// f split as sum_W q_W(X_j) * W over monomials W in the other variables.
inline std::map<Monomial, UniPoly, GrlexLess> group_by_other_monomials(
    const MultiPoly& f, std::size_t axis) {
    std::map<Monomial, UniPoly, GrlexLess> out;
    for (const auto& [m, c] : f.terms()) {
        Monomial key = m;
        unsigned e = key[axis];
        key[axis] = 0;
        UniPoly& q = out[key];
        if (q.size() <= e) q.resize(e + 1, FieldScalar::zero(c.field()));
        q[e] = c;
    }
    return out;
}

}  // namespace detail

struct ScalarCommutantResult {
    enum class Status { Ok, Inconclusive };
    Status status;
    ExplicitGenerators generators;  // meaningful when Ok
    std::string detail;             // how constancy was proven, or why not
};

// All sigma(X_j) = a X_j + gamma commuting with D, found by first proving
// the offset must be constant and then solving the per-coefficient affine
// conditions f_i(a X_j + gamma) = f_i (i != j), f_j(a X_j + gamma) = a f_j.
inline ScalarCommutantResult scalar_axis_commutant(const Derivation& d,
                                                   std::size_t axis) {
    const RingPtr& ring = d.ring;
    const std::size_t n = ring->var_count();
    if (axis >= n) throw PreconditionError("axis out of range");

    // Step 1: prove the offset h (free of X_j) is constant.
    std::string how;
    bool proven = n == 1;
    if (proven) how = "single variable: the offset space is the constant field";

    if (!proven) {
        // Comparing coefficients of X_j^T and X_j^{T-1} in sigma(f_i) = f_i
        // gives T c_T h = (a - 1) c_{T-1} with a^T = 1; h is then pinned to
        // a constant unless c_{T-1} / c_T is a nonconstant polynomial.
        for (std::size_t i = 0; i < n && !proven; ++i) {
            if (i == axis) continue;
            int t = d.images[i].degree_in(axis);
            if (t < 1) continue;
            MultiPoly ct = d.images[i].coeff_of_power(axis, static_cast<unsigned>(t));
            MultiPoly cb = d.images[i].coeff_of_power(axis, static_cast<unsigned>(t - 1));
            if (cb.is_zero()) {
                proven = true;
                how = "top-degree comparison against the image of " +
                      ring->vars()[i] + " forces offset 0";
                continue;
            }
            auto quot = cb.divide_exact(ct);
            if (!quot) {
                proven = true;
                how = "subleading coefficient of the image of " + ring->vars()[i] +
                      " is not divisible by the leading one, forcing offset 0";
            } else if (quot->is_constant()) {
                proven = true;
                how = "leading/subleading coefficients of the image of " +
                      ring->vars()[i] + " are proportional, pinning the offset to a constant";
            }
        }
    }

    if (!proven && n >= 2) {
        // Every other image zero: D annihilates the offset, and the axis
        // equation sigma(f_j) = a f_j admits the same top-two coefficient
        // comparison, now reading T c_T a^{T-1} h = (a - a^{T-1}) c_{T-1}.
        bool others_zero = true;
        for (std::size_t i = 0; i < n; ++i)
            if (i != axis && !d.images[i].is_zero()) others_zero = false;
        int t = d.images[axis].degree_in(axis);
        if (others_zero && t >= 1) {
            MultiPoly ct = d.images[axis].coeff_of_power(axis, static_cast<unsigned>(t));
            MultiPoly cb =
                d.images[axis].coeff_of_power(axis, static_cast<unsigned>(t - 1));
            if (cb.is_zero()) {
                proven = true;
                how = "top-degree comparison against the image of " +
                      ring->vars()[axis] + " forces offset 0";
            } else {
                auto quot = cb.divide_exact(ct);
                if (!quot) {
                    proven = true;
                    how = "subleading coefficient of the image of " +
                          ring->vars()[axis] +
                          " is not divisible by the leading one, forcing offset 0";
                } else if (quot->is_constant()) {
                    proven = true;
                    how = "leading/subleading coefficients of the image of " +
                          ring->vars()[axis] +
                          " are proportional, pinning the offset to a constant";
                }
            }
        }
    }

    if (!proven && n == 2) {
        // Both images free of X_j: the only equation is
        // (1 - a) f_j = h'(X_l) f_l in the other variable X_l.
        std::size_t l = axis == 0 ? 1 : 0;
        const MultiPoly& fj = d.images[axis];
        const MultiPoly& fl = d.images[l];
        if (fl.degree_in(axis) == 0 && fj.degree_in(axis) <= 0 && !fl.is_zero()) {
            if (fj.is_zero()) {
                proven = true;
                how = "axis equation reduces to h' * f_l = 0 with f_l nonzero";
            } else if (!fj.divide_exact(fl).has_value()) {
                proven = true;
                how = "axis equation (1-a) f_j = h' f_l has no polynomial h' unless a = 1";
            }
        }
    }

    if (!proven && n >= 2) {
        // Shamsuddin-like axis: f_j a nonzero constant and every other image
        // a_i X_i + b_i with a_i, b_i univariate in X_j. The offset equation
        // lambda-weights each monomial of h by sum e_i a_i; a positivity
        // certificate on the a_i rules out nonzero kernels.
        bool shape = d.images[axis].is_constant() &&
                     !d.images[axis].constant_value().is_zero();
        std::vector<UniPoly> as;
        for (std::size_t i = 0; i < n && shape; ++i) {
            if (i == axis) continue;
            const MultiPoly& f = d.images[i];
            if (f.degree_in(i) > 1) {
                shape = false;
                break;
            }
            for (const auto& [m, c] : f.terms())
                for (std::size_t k = 0; k < n; ++k)
                    if (k != axis && k != i && m[k] > 0) shape = false;
            if (!shape) break;
            auto ai = to_univariate(f.coeff_of_power(i, 1), axis);
            if (!ai) {
                shape = false;
                break;
            }
            as.push_back(std::move(*ai));
        }
        if (shape) {
            // Greedy top-degree elimination: at each stage the highest
            // remaining degree must carry rational, same-sign coefficients.
            std::vector<bool> eliminated(as.size(), false);
            bool certified = true;
            while (certified) {
                int top = -1;
                for (std::size_t i = 0; i < as.size(); ++i)
                    if (!eliminated[i]) top = std::max(top, uni_degree(as[i]));
                if (top < 0) break;  // all eliminated
                int sign = 0;
                std::vector<std::size_t> stage;
                for (std::size_t i = 0; i < as.size(); ++i) {
                    if (eliminated[i] || uni_degree(as[i]) != top) continue;
                    const FieldScalar& lead = as[i].back();
                    if (!lead.is_rational()) {
                        certified = false;
                        break;
                    }
                    int s = sgn(lead.rational_value());
                    if (sign == 0) sign = s;
                    if (s != sign) {
                        certified = false;
                        break;
                    }
                    stage.push_back(i);
                }
                if (!certified) break;
                for (std::size_t i : stage) eliminated[i] = true;
            }
            for (bool e : eliminated) certified = certified && e;
            if (certified) {
                proven = true;
                how = "no nonnegative combination of the linear coefficients vanishes, "
                      "so the offset has no monomials in the other variables";
            }
        }
    }

    if (!proven)
        return {ScalarCommutantResult::Status::Inconclusive,
                ExplicitGenerators{},
                "cannot certify a constant offset on axis " + ring->vars()[axis] +
                    "; use the affine solver or verification mode"};

    // Step 2: solve for (a, gamma) exactly, one univariate condition per
    // monomial in the other variables.
    detail::AffSubgroup g = detail::AffSubgroup::full();
    for (std::size_t i = 0; i < n; ++i) {
        auto grouped = detail::group_by_other_monomials(d.images[i], axis);
        for (auto& entry : grouped) {
            UniPoly& q = entry.second;
            uni_trim(q);
            if (i == axis)
                g = detail::meet(g, detail::equivariance_subgroup(q));
            else
                g = detail::meet(g, detail::invariance_subgroup(q));
            if (g.kind == detail::AffSubgroup::Kind::Identity) break;
        }
    }

    ExplicitGenerators out;
    using K = detail::AffSubgroup::Kind;
    switch (g.kind) {
        case K::Full:
            out.families.push_back(GeneratorFamily::full_affine(ring, axis));
            out.note = "every affine substitution on this axis commutes";
            break;
        case K::Translations:
            out.families.push_back(GeneratorFamily::all_translations(ring, axis));
            out.note = "all shifts commute; scale is forced to 1";
            break;
        case K::Scalings:
            if (g.order == 0) {
                out.families.push_back(GeneratorFamily::free_scalings(ring, axis, g.center));
                out.note = "scalings of any nonzero ratio about a fixed center";
            } else {
                out.families.push_back(
                    GeneratorFamily::scalings(ring, axis, g.order, g.center));
                out.note = "scalings about a fixed center, order " +
                           std::to_string(g.order);
            }
            break;
        case K::Identity:
            out.families.push_back(GeneratorFamily::identity_only(ring, axis));
            out.note = "identity only";
            break;
    }
    return {ScalarCommutantResult::Status::Ok, std::move(out), how};
}

struct HypothesisCheck {
    std::string name;
    bool pass;
    std::string witness;
};

struct ClosedFormResult {
    enum class Status { Ok, TemplateMismatch, HypothesisFailure };
    Status status;
    std::string template_name;
    std::vector<HypothesisCheck> hypotheses;
    ExplicitGenerators generators;  // when Ok
    std::string detail;
};

// Generator descriptions exactly as the closed-form results state them,
// for the four supported shapes: a one-variable constant flow, the
// two-variable flow c dX + f(X) dY, the vertical field f(X) dY, and the
// three-variable field f(X) dY + g(X,Y) dZ.
inline ClosedFormResult closed_form_tame_group(const Derivation& d) {
    const RingPtr& ring = d.ring;
    const std::size_t n = ring->var_count();
    ClosedFormResult res;
    res.status = ClosedFormResult::Status::TemplateMismatch;

    auto fail_template = [&](const std::string& why) {
        res.status = ClosedFormResult::Status::TemplateMismatch;
        res.detail = why;
        return res;
    };
    auto check = [&](const std::string& name, bool pass, const std::string& witness) {
        res.hypotheses.push_back({name, pass, witness});
        if (!pass) res.status = ClosedFormResult::Status::HypothesisFailure;
        return pass;
    };

    if (n == 1) {
        res.template_name = "one-variable constant flow";
        if (!d.images[0].is_constant())
            return fail_template("the image of " + ring->vars()[0] + " is not constant");
        bool ok = check("nonzero derivation", !d.images[0].is_zero(),
                        d.images[0].is_zero() ? "D = 0" : "");
        if (!ok) return res;
        res.status = ClosedFormResult::Status::Ok;
        res.generators.families.push_back(GeneratorFamily::all_translations(ring, 0));
        res.generators.note = "all shifts of " + ring->vars()[0];
        return res;
    }

    if (n == 2) {
        auto f_uni = to_univariate(d.images[1], 0);
        if (!d.images[0].is_constant() || !f_uni)
            return fail_template("expected a constant first image and a second image "
                                 "univariate in " + ring->vars()[0]);
        FieldScalar c = d.images[0].constant_value();
        UniPoly f = *f_uni;
        uni_trim(f);

        if (!c.is_zero()) {
            res.template_name = "two-variable flow";
            bool ok = check("deg f >= 1", uni_degree(f) >= 1,
                            "deg f = " + std::to_string(uni_degree(f)));
            if (!ok) return res;
            UniPoly tied = uni_scale(c.inverse(), uni_antiderivative(f));
            res.status = ClosedFormResult::Status::Ok;
            res.generators.families.push_back(GeneratorFamily::scale_tied_offset(
                ring, 1, from_univariate(ring, 0, tied), true));
            res.generators.note =
                "(" + ring->vars()[0] + ", b " + ring->vars()[1] +
                " + (1-b) F/c + g) with F the antiderivative of f; b nonzero, g constant";
            return res;
        }

        res.template_name = "two-variable vertical field";
        int s = uni_degree(f);
        bool ok = check("deg f >= 2", s >= 2, "deg f = " + std::to_string(s));
        if (ok)
            ok = check("subleading coefficient of f vanishes",
                       f[s - 1].is_zero(), "");
        if (!ok) return res;
        unsigned order = exponent_gcd(f);
        res.status = ClosedFormResult::Status::Ok;
        res.generators.families.push_back(GeneratorFamily::free_offset(ring, 1, {0}));
        res.generators.families.push_back(
            GeneratorFamily::scalings(ring, 0, order, FieldScalar::zero(ring->field())));
        res.generators.note = "vertical shifts by any r(" + ring->vars()[0] +
                              ") and scalings of order " + std::to_string(order);
        return res;
    }

    if (n == 3) {
        res.template_name = "three-variable tower";
        std::optional<UniPoly> f_uni;
        if (d.images[0].is_zero()) f_uni = to_univariate(d.images[1], 0);
        if (!f_uni || d.images[2].degree_in(2) > 0 || d.images[1].is_zero())
            return fail_template("expected images (0, f(" + ring->vars()[0] + "), g(" +
                                 ring->vars()[0] + "," + ring->vars()[1] + "))");
        UniPoly f = *f_uni;
        uni_trim(f);
        const MultiPoly& g2 = d.images[2];

        int s_deg = uni_degree(f);
        bool ok = check("deg f >= 2", s_deg >= 2, "deg f = " + std::to_string(s_deg));
        if (ok)
            ok &= check("subleading coefficient of f vanishes", f[s_deg - 1].is_zero(), "");

        // A common factor of f and g must divide f and every Y-coefficient
        // of g; all of these are univariate.
        std::vector<UniPoly> g_coeffs;
        int degy = g2.degree_in(1);
        for (int k = 0; k <= std::max(degy, 0); ++k) {
            auto gk = to_univariate(g2.coeff_of_power(1, static_cast<unsigned>(k)), 0);
            if (gk) g_coeffs.push_back(std::move(*gk));
        }
        bool coprime = !g2.is_zero() && coprime_with_coefficients(f, g_coeffs);
        ok &= check("f and g have no common factor", coprime,
                    g2.is_zero() ? "g = 0" : "");

        ok &= check("g involves " + ring->vars()[1], g2.degree_in(1) >= 1, "");

        unsigned order = s_deg >= 2 ? exponent_gcd(depress(f).poly) : 1;
        bool g_invariant = true;
        std::string bad;
        for (const auto& term : g2.terms())
            if (term.first[0] % order != 0) {
                g_invariant = false;
                bad = "exponent " + std::to_string(term.first[0]) + " of " +
                      ring->vars()[0];
                break;
            }
        ok &= check("g is invariant under the order-" + std::to_string(order) +
                        " scalings of " + ring->vars()[0],
                    g_invariant, bad);
        if (!ok) return res;

        res.status = ClosedFormResult::Status::Ok;
        res.generators.families.push_back(GeneratorFamily::free_offset(ring, 2, {0}));
        res.generators.families.push_back(
            GeneratorFamily::scalings(ring, 0, order, FieldScalar::zero(ring->field())));
        res.generators.note =
            "shifts of " + ring->vars()[2] + " by any r(" + ring->vars()[0] +
            ") and scalings of " + ring->vars()[0] + " of order " + std::to_string(order) +
            "; the scaling acts on the first variable as in the result's derivation, "
            "not on the second as its display suggests";
        return res;
    }

    return fail_template("no closed form for " + std::to_string(n) + " variables");
}

// u = sigma(X_j) - X_j generates a D-stable ideal whenever sigma commutes
// with D; the cofactor is D(u)/u.
struct StabilityWitness {
    MultiPoly u;
    MultiPoly cofactor;
    bool degenerate;  // u constant: zero ideal or the whole ring
};

inline StabilityWitness elementary_stable_witness(const Derivation& d,
                                                  const ElementaryAuto& s) {
    if (!commutes(s, d))
        throw PreconditionError("automorphism does not commute with the derivation");
    MultiPoly u = s.axis_image() - MultiPoly::variable(s.ring, s.axis);
    if (u.is_constant()) return {u, MultiPoly::zero(s.ring), true};
    auto cof = derive(d, u).divide_exact(u);
    if (!cof)
        throw Error("internal: D(u) must be divisible by u for a commuting map");
    return {u, *cof, false};
}

}  // namespace tameiso
