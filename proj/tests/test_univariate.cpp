#include <catch2/catch_amalgamated.hpp>

#include <tameiso/parse.hpp>
#include <tameiso/univariate.hpp>

using namespace tameiso;

namespace {

RingPtr ring_x() {
    static RingPtr r = PolyRing::make(FieldScalar::rationals(), {"X"});
    return r;
}

UniPoly u(const std::string& text) {
    auto v = to_univariate(parse_poly(text, ring_x()), 0);
    REQUIRE(v.has_value());
    uni_trim(*v);
    return *v;
}

FieldScalar q(long num, long den = 1) {
    return FieldScalar(FieldScalar::rationals(), Rational(num, den));
}

}  // namespace

TEST_CASE("univariate extraction and embedding") {
    auto rxy = PolyRing::make(FieldScalar::rationals(), {"X", "Y"});
    MultiPoly p = parse_poly("X^2 + 3", rxy);
    auto up = to_univariate(p, 0);
    REQUIRE(up.has_value());
    CHECK(uni_degree(*up) == 2);
    CHECK(from_univariate(rxy, 0, *up) == p);
    CHECK_FALSE(to_univariate(parse_poly("X*Y", rxy), 0).has_value());
    // Constants extract along any axis.
    CHECK(to_univariate(parse_poly("5", rxy), 1).has_value());
}

TEST_CASE("division gcd and calculus") {
    UniPoly quo, rem;
    uni_divmod(u("X^3 - 1"), u("X - 1"), quo, rem);
    CHECK(quo == u("X^2 + X + 1"));
    CHECK(rem.empty());

    uni_divmod(u("X^2 + 1"), u("X"), quo, rem);
    CHECK(quo == u("X"));
    CHECK(rem == u("1"));

    CHECK(uni_gcd(u("X^2 - 1"), u("X^2 - 2*X + 1")) == u("X - 1"));
    CHECK(uni_gcd(u("2*X + 2"), u("0")) == u("X + 1"));  // result is monic

    CHECK(uni_derivative(u("X^3 + 2*X")) == u("3*X^2 + 2"));
    CHECK(uni_antiderivative(u("X^2")) == u("1/3*X^3"));
    CHECK(uni_derivative(uni_antiderivative(u("5*X^4 - X + 2"))) ==
          u("5*X^4 - X + 2"));
}

TEST_CASE("affine composition") {
    // p = X^2 at 2X + 1.
    CHECK(uni_compose_affine(u("X^2"), q(2), q(1)) == u("4*X^2 + 4*X + 1"));
    CHECK(uni_evaluate(u("X^2 + X"), q(3)) == q(12));
    CHECK(uni_evaluate(UniPoly{}, q(7)).is_zero());
}

TEST_CASE("depression kills the subleading term") {
    Depressed d = depress(u("X^2 + 2*X"));
    CHECK(d.center == q(-1));
    CHECK(d.poly == u("X^2 - 1"));

    Depressed c = depress(u("X^3 + 6*X^2 + 2*X + 1"));
    CHECK(c.center == q(-2));
    CHECK(c.poly == u("X^3 - 10*X + 13"));

    CHECK_THROWS_AS(depress(u("3")), PreconditionError);
}

TEST_CASE("exponent gcd and affine symmetries") {
    CHECK(exponent_gcd(u("X^6 + X^4")) == 2);
    CHECK(exponent_gcd(u("X^3")) == 3);
    CHECK(exponent_gcd(u("X^6 + X^4 + 1")) == 2);  // constants do not count
    CHECK(exponent_gcd(u("4")) == 0);

    AffineSymmetries s = affine_symmetries(u("X^4 + X^2"));
    CHECK(s.center == q(0));
    CHECK(s.order == 2);

    AffineSymmetries t = affine_symmetries(u("X^2 + 2*X"));
    CHECK(t.center == q(-1));
    CHECK(t.order == 2);

    CHECK(scaling_order(u("X^3 + X^2")) == 1);  // depressed form has mixed exponents
}

TEST_CASE("coprimality against coefficient lists") {
    CHECK(coprime_with_coefficients(u("X^2"), {u("1")}));
    CHECK(coprime_with_coefficients(u("X^2"), {u("X + 1")}));
    CHECK_FALSE(coprime_with_coefficients(u("X^2"), {u("X")}));
    CHECK(coprime_with_coefficients(u("X^2"), {u("X"), u("X + 1")}));
    CHECK_FALSE(coprime_with_coefficients(u("X^2 - X"), {u("X^3")}));
}
