#include <catch2/catch_amalgamated.hpp>

#include <tameiso/commutant.hpp>
#include <tameiso/parse.hpp>

using namespace tameiso;

namespace {

RingPtr ring_xy() {
    static RingPtr r = PolyRing::make(FieldScalar::rationals(), {"X", "Y"});
    return r;
}

RingPtr ring_xyz() {
    static RingPtr r = PolyRing::make(FieldScalar::rationals(), {"X", "Y", "Z"});
    return r;
}

Derivation der(const RingPtr& ring, const std::string& images) {
    return Derivation(ring, parse_image_list(images, ring));
}

FieldScalar q(long num, long den = 1) {
    return FieldScalar(FieldScalar::rationals(), Rational(num, den));
}

Vector vec(std::vector<Rational> xs) {
    Vector v;
    for (auto& x : xs) v.push_back(FieldScalar(FieldScalar::rationals(), x));
    return v;
}

}  // namespace

TEST_CASE("translation commutant per axis") {
    auto fams = translation_commutant(der(ring_xy(), "0; Y"));
    REQUIRE(fams.size() == 2);
    CHECK(fams[0].extent == TranslationExtent::AllShifts);
    CHECK(fams[1].extent == TranslationExtent::OnlyIdentity);

    auto tower = translation_commutant(der(ring_xyz(), "0; X^2; Y"));
    CHECK(tower[0].extent == TranslationExtent::OnlyIdentity);
    CHECK(tower[1].extent == TranslationExtent::OnlyIdentity);
    CHECK(tower[2].extent == TranslationExtent::AllShifts);
}

TEST_CASE("affine commutant of the one-variable flow on the fixed axis") {
    // D(X) = 0, D(Y) = Y: on axis X every alpha X + gamma commutes.
    Derivation d = der(ring_xy(), "0; Y");
    AffineFamily fam = affine_axis_commutant(d, 0);
    CHECK(fam.particular == vec({1, 0, 0, 0}));
    REQUIRE(fam.directions.size() == 2);
    CHECK(fam.directions[0] == vec({1, 0, 0, 0}));
    CHECK(fam.directions[1] == vec({0, 1, 0, 0}));

    ElementaryAuto s = fam.member(ring_xy(), vec({2, 3, 0, 0}));
    CHECK(apply(s, parse_poly("X", ring_xy())) == parse_poly("2*X + 3", ring_xy()));
    CHECK(commutes(s, d));

    // On axis Y only the scale survives.
    AffineFamily fy = affine_axis_commutant(d, 1);
    REQUIRE(fy.directions.size() == 1);
    CHECK(fy.directions[0][0] == q(1));
    for (std::size_t t = 1; t < fy.directions[0].size(); ++t)
        CHECK(fy.directions[0][t].is_zero());
    CHECK(commutes(fy.member(ring_xy(), vec({5, 0, 0, 0})), d));
}

TEST_CASE("affine commutant couples scale to a quadratic offset") {
    // D = d/dX + X d/dY on axis Y at degree bound 3.
    Derivation d = der(ring_xy(), "1; X");
    AffineFamily fam = affine_axis_commutant(d, 1, 3);
    CHECK(fam.degree_bound == 3);
    REQUIRE(fam.offset_monomials.size() == 4);  // 1, X, X^2, X^3

    auto basis = canonical_row_basis(fam.directions);
    REQUIRE(basis.size() == 2);
    CHECK(basis[0] == vec({1, 0, 0, {-1, 2}, 0}));
    CHECK(basis[1] == vec({0, 1, 0, 0, 0}));

    // b Y + (1-b)/2 X^2 + gamma for b = 3, gamma = 0.
    ElementaryAuto s = fam.member(ring_xy(), vec({3, 0, 0, -1, 0}));
    CHECK(apply(s, parse_poly("Y", ring_xy())) ==
          parse_poly("3*Y - X^2", ring_xy()));
    CHECK(commutes(s, d));
}

TEST_CASE("affine commutant of a vertical field leaves offsets free") {
    Derivation d = der(ring_xy(), "0; X^2");
    AffineFamily fam = affine_axis_commutant(d, 1);
    // Scale is pinned to 1; every offset r(X) up to the bound commutes.
    REQUIRE(fam.directions.size() == 4);
    for (const auto& dir : fam.directions) CHECK(dir[0].is_zero());
    CHECK(commutes(fam.member(ring_xy(), vec({1, 7, 0, 0, -2})), d));
}

TEST_CASE("affine solver requires images affine in the axis") {
    CHECK_THROWS_AS(affine_axis_commutant(der(ring_xy(), "0; Y^2"), 1),
                    PreconditionError);
    CHECK_THROWS_AS(affine_axis_commutant(der(ring_xy(), "0; Y"), 7),
                    PreconditionError);
}

TEST_CASE("scalar solver on the one-variable flow") {
    ScalarCommutantResult r = scalar_axis_commutant(der(ring_xy(), "0; Y"), 1);
    REQUIRE(r.status == ScalarCommutantResult::Status::Ok);
    REQUIRE(r.generators.families.size() == 1);
    const GeneratorFamily& g = r.generators.families[0];
    CHECK(g.scale_kind == GeneratorFamily::ScaleKind::FreeNonzero);
    CHECK(g.offset_scale_tied.is_zero());  // scalings centered at 0
    CHECK(r.detail.find("forces offset 0") != std::string::npos);
}

TEST_CASE("scalar solver finds an off-center scaling family") {
    // D(Y) = Y + 1: the commuting maps are b(Y + 1) - 1 for b nonzero.
    ScalarCommutantResult r = scalar_axis_commutant(der(ring_xy(), "0; Y + 1"), 1);
    REQUIRE(r.status == ScalarCommutantResult::Status::Ok);
    const GeneratorFamily& g = r.generators.families[0];
    CHECK(g.scale_kind == GeneratorFamily::ScaleKind::FreeNonzero);
    CHECK(g.offset_scale_tied == parse_poly("-1", ring_xy()));

    ElementaryAuto s = g.member(q(3));
    CHECK(apply(s, parse_poly("Y", ring_xy())) ==
          parse_poly("3*Y + 2", ring_xy()));
    CHECK(commutes(s, der(ring_xy(), "0; Y + 1")));
}

TEST_CASE("scalar solver on a vertical field finds finite scalings") {
    ScalarCommutantResult r = scalar_axis_commutant(der(ring_xy(), "0; X^2"), 0);
    REQUIRE(r.status == ScalarCommutantResult::Status::Ok);
    const GeneratorFamily& g = r.generators.families[0];
    CHECK(g.scale_kind == GeneratorFamily::ScaleKind::RootOfUnity);
    CHECK(g.scale_order == 2);

    auto members = g.realizable_members();
    REQUIRE(members.size() == 2);  // 1 and -1 over Q
    Derivation d = der(ring_xy(), "0; X^2");
    for (const auto& m : members) CHECK(commutes(m, d));
    CHECK(members[1].scale == q(-1));
}

TEST_CASE("scalar solver pins the flow axis to the identity") {
    ScalarCommutantResult r = scalar_axis_commutant(der(ring_xy(), "1; X"), 0);
    REQUIRE(r.status == ScalarCommutantResult::Status::Ok);
    CHECK(r.generators.families[0].is_identity_only());

    ScalarCommutantResult rot = scalar_axis_commutant(der(ring_xy(), "-1*Y; X"), 0);
    REQUIRE(rot.status == ScalarCommutantResult::Status::Ok);
    CHECK(rot.generators.families[0].is_identity_only());
}

TEST_CASE("scalar solver positivity certificate") {
    Derivation d = der(ring_xyz(), "1; X*Y + X^2; X^2*Z + Z + X^3");
    ScalarCommutantResult r = scalar_axis_commutant(d, 0);
    REQUIRE(r.status == ScalarCommutantResult::Status::Ok);
    CHECK(r.generators.families[0].is_identity_only());
    CHECK(r.detail.find("no nonnegative combination") != std::string::npos);
}

TEST_CASE("scalar solver reports inconclusive honestly") {
    // Every Y + h(X) commutes with X d/dY, which is outside the constant
    // offset model.
    ScalarCommutantResult r = scalar_axis_commutant(der(ring_xy(), "0; X"), 1);
    CHECK(r.status == ScalarCommutantResult::Status::Inconclusive);
    CHECK(r.detail.find("cannot certify") != std::string::npos);

    CHECK_THROWS_AS(scalar_axis_commutant(der(ring_xy(), "0; Y"), 9),
                    PreconditionError);
}

TEST_CASE("closed form for one variable") {
    auto rt = PolyRing::make(FieldScalar::rationals(), {"T"});
    ClosedFormResult ok = closed_form_tame_group(der(rt, "2"));
    CHECK(ok.status == ClosedFormResult::Status::Ok);
    CHECK(ok.template_name == "one-variable constant flow");
    REQUIRE(ok.generators.families.size() == 1);
    CHECK(ok.generators.families[0].offset_free_constant);

    ClosedFormResult zero = closed_form_tame_group(der(rt, "0"));
    CHECK(zero.status == ClosedFormResult::Status::HypothesisFailure);
    REQUIRE_FALSE(zero.hypotheses.empty());
    CHECK(zero.hypotheses[0].name == "nonzero derivation");

    CHECK(closed_form_tame_group(der(rt, "T")).status ==
          ClosedFormResult::Status::TemplateMismatch);
}

TEST_CASE("closed form for the two-variable flow") {
    ClosedFormResult r = closed_form_tame_group(der(ring_xy(), "1; X"));
    CHECK(r.status == ClosedFormResult::Status::Ok);
    CHECK(r.template_name == "two-variable flow");
    REQUIRE(r.generators.families.size() == 1);
    const GeneratorFamily& g = r.generators.families[0];
    CHECK(g.axis == 1);
    CHECK(g.scale_kind == GeneratorFamily::ScaleKind::FreeNonzero);
    CHECK(g.offset_scale_tied == parse_poly("1/2*X^2", ring_xy()));
    CHECK(g.offset_free_constant);

    // Check a member: Y -> 3Y - X^2 + 5.
    ElementaryAuto s = g.member(q(3), parse_poly("5", ring_xy()));
    CHECK(commutes(s, der(ring_xy(), "1; X")));

    ClosedFormResult flat = closed_form_tame_group(der(ring_xy(), "1; 2"));
    CHECK(flat.status == ClosedFormResult::Status::HypothesisFailure);
    CHECK(flat.hypotheses[0].name == "deg f >= 1");
}

TEST_CASE("closed form for the vertical field") {
    ClosedFormResult r = closed_form_tame_group(der(ring_xy(), "0; X^2"));
    CHECK(r.status == ClosedFormResult::Status::Ok);
    CHECK(r.template_name == "two-variable vertical field");
    REQUIRE(r.generators.families.size() == 2);
    CHECK(r.generators.families[0].offset_free_poly);
    CHECK(r.generators.families[0].offset_free_vars == std::vector<std::size_t>{0});
    CHECK(r.generators.families[1].scale_order == 2);

    CHECK(closed_form_tame_group(der(ring_xy(), "0; X^3"))
              .generators.families[1]
              .scale_order == 3);

    ClosedFormResult low = closed_form_tame_group(der(ring_xy(), "0; X"));
    CHECK(low.status == ClosedFormResult::Status::HypothesisFailure);
    ClosedFormResult skew = closed_form_tame_group(der(ring_xy(), "0; X^2 + X"));
    CHECK(skew.status == ClosedFormResult::Status::HypothesisFailure);
}

TEST_CASE("closed form for the three-variable tower") {
    ClosedFormResult r = closed_form_tame_group(der(ring_xyz(), "0; X^2; Y"));
    CHECK(r.status == ClosedFormResult::Status::Ok);
    CHECK(r.template_name == "three-variable tower");
    REQUIRE(r.generators.families.size() == 2);
    CHECK(r.generators.families[0].axis == 2);
    CHECK(r.generators.families[0].offset_free_vars == std::vector<std::size_t>{0});
    CHECK(r.generators.families[1].axis == 0);
    CHECK(r.generators.families[1].scale_order == 2);
    CHECK(r.generators.note.find("not on the second") != std::string::npos);

    // Members: Z -> Z + r(X) and X -> -X both commute.
    Derivation d = der(ring_xyz(), "0; X^2; Y");
    ElementaryAuto shift = r.generators.families[0].member(
        q(1), parse_poly("X^3 - 2*X", ring_xyz()));
    CHECK(commutes(shift, d));
    for (const auto& m : r.generators.families[1].realizable_members())
        CHECK(commutes(m, d));
}

TEST_CASE("tower hypotheses fail with named witnesses") {
    auto failing = [](const ClosedFormResult& r, const std::string& name) {
        for (const auto& h : r.hypotheses)
            if (h.name.find(name) != std::string::npos && !h.pass) return true;
        return false;
    };

    ClosedFormResult shared = closed_form_tame_group(der(ring_xyz(), "0; X^2; X*Y"));
    CHECK(shared.status == ClosedFormResult::Status::HypothesisFailure);
    CHECK(failing(shared, "no common factor"));

    ClosedFormResult flat = closed_form_tame_group(der(ring_xyz(), "0; X^2; X^2 + 1"));
    CHECK(flat.status == ClosedFormResult::Status::HypothesisFailure);
    CHECK(failing(flat, "g involves Y"));
    CHECK_FALSE(failing(flat, "no common factor"));

    ClosedFormResult skew = closed_form_tame_group(der(ring_xyz(), "0; X^2; Y + X"));
    CHECK(skew.status == ClosedFormResult::Status::HypothesisFailure);
    CHECK(failing(skew, "invariant"));

    CHECK(closed_form_tame_group(der(ring_xyz(), "1; X^2; Y")).status ==
          ClosedFormResult::Status::TemplateMismatch);

    auto r4 = PolyRing::make(FieldScalar::rationals(), {"X", "Y", "Z", "W"});
    CHECK(closed_form_tame_group(der(r4, "0; X; Y; Z")).status ==
          ClosedFormResult::Status::TemplateMismatch);
}

TEST_CASE("commuting elementaries witness stable ideals") {
    Derivation d = der(ring_xy(), "0; Y");
    StabilityWitness w =
        elementary_stable_witness(d, ElementaryAuto(ring_xy(), 1, q(2), parse_poly("0", ring_xy())));
    CHECK_FALSE(w.degenerate);
    CHECK(w.u == parse_poly("Y", ring_xy()));
    CHECK(w.cofactor == parse_poly("1", ring_xy()));

    StabilityWitness t =
        elementary_stable_witness(d, ElementaryAuto(ring_xy(), 0, q(1), parse_poly("5", ring_xy())));
    CHECK(t.degenerate);
    CHECK(t.u == parse_poly("5", ring_xy()));

    Derivation v = der(ring_xy(), "0; X^2");
    StabilityWitness s =
        elementary_stable_witness(v, ElementaryAuto(ring_xy(), 1, q(1), parse_poly("X^3", ring_xy())));
    CHECK_FALSE(s.degenerate);
    CHECK(s.cofactor.is_zero());

    CHECK_THROWS_AS(
        elementary_stable_witness(d, ElementaryAuto(ring_xy(), 1, q(1), parse_poly("1", ring_xy()))),
        PreconditionError);
}
