#include <catch2/catch_amalgamated.hpp>

#include <tameiso/format.hpp>
#include <tameiso/parse.hpp>

#include <random>

using namespace tameiso;

namespace {

RingPtr ring_xy() {
    static RingPtr r = PolyRing::make(FieldScalar::rationals(), {"X", "Y"});
    return r;
}

RingPtr ring_z4() {
    static RingPtr r = PolyRing::make(CyclotomicField::make(4), {"X", "Y"});
    return r;
}

MultiPoly random_poly(std::mt19937_64& gen, const RingPtr& ring) {
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 3);
    std::uniform_int_distribution<unsigned> expo(0, 3);
    std::uniform_int_distribution<int> nterms(0, 5);
    std::uniform_int_distribution<unsigned> zpow(0, ring->field()->degree() - 1);
    MultiPoly out = MultiPoly::zero(ring);
    int k = nterms(gen);
    for (int t = 0; t < k; ++t) {
        Monomial m(ring->var_count());
        for (auto& e : m) e = expo(gen);
        FieldScalar c = FieldScalar(ring->field(), Rational(num(gen), den(gen)));
        if (ring->field()->degree() > 1 && num(gen) > 2)
            c = c * FieldScalar::zeta(ring->field()).pow(zpow(gen));
        if (c.is_zero()) continue;
        out = out + MultiPoly::term(ring, std::move(m), c);
    }
    return out;
}

}  // namespace

TEST_CASE("parsing fixed expressions") {
    CHECK(parse_poly("X^2+Y^2", ring_xy()) ==
          parse_poly("X*X + Y*Y", ring_xy()));
    CHECK(parse_poly("2*X^3*Y - 1/2", ring_xy()) ==
          Rational(1, 2) * parse_poly("4*X^3*Y - 1", ring_xy()));
    CHECK(parse_poly("(X+Y)^2", ring_xy()) ==
          parse_poly("X^2 + 2*X*Y + Y^2", ring_xy()));
    CHECK(parse_poly("X - (Y - X)", ring_xy()) == parse_poly("2*X - Y", ring_xy()));
    CHECK(parse_poly("0", ring_xy()).is_zero());
    CHECK(parse_poly("X^0", ring_xy()) == parse_poly("1", ring_xy()));
    CHECK(parse_poly("-3*X", ring_xy()) == -parse_poly("3*X", ring_xy()));
}

TEST_CASE("parse errors carry positions") {
    try {
        parse_poly("X +\n+ Y", ring_xy());
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 1);
    }

    try {
        parse_poly("W + 1", ring_xy());
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("W") != std::string::npos);
        CHECK(e.line() == 1);
        CHECK(e.column() == 1);
    }

    CHECK_THROWS_AS(parse_poly("1/0", ring_xy()), ParseError);
    CHECK_THROWS_AS(parse_poly("X*(Y", ring_xy()), ParseError);
    CHECK_THROWS_AS(parse_poly("", ring_xy()), ParseError);
    // No implicit multiplication.
    CHECK_THROWS_AS(parse_poly("2X", ring_xy()), ParseError);
    // Leading unary minus negates the first term; stacked signs stay invalid.
    CHECK(parse_poly("-Y", ring_xy()) == -parse_poly("Y", ring_xy()));
    CHECK(parse_poly("-1*Y", ring_xy()) == -parse_poly("Y", ring_xy()));
    CHECK(parse_poly("-2*X + Y", ring_xy()) == parse_poly("Y - 2*X", ring_xy()));
    CHECK(parse_poly("X - (-Y)", ring_xy()) == parse_poly("X + Y", ring_xy()));
    CHECK_THROWS_AS(parse_poly("--3", ring_xy()), ParseError);
}

TEST_CASE("root of unity literal") {
    MultiPoly p = parse_poly("z^2*X", ring_z4());
    CHECK(p == -parse_poly("X", ring_z4()));
    CHECK(parse_poly("z", ring_z4()).is_constant());
    // Over plain Q the letter z is an ordinary unknown identifier.
    CHECK_THROWS_AS(parse_poly("z", ring_xy()), ParseError);
    // A ring variable named z would shadow the root literal.
    auto clash = PolyRing::make(CyclotomicField::make(4), {"z"});
    CHECK_THROWS_AS(parse_poly("z", clash), PreconditionError);
}

TEST_CASE("image lists split on semicolons") {
    auto images = parse_image_list("X^2; Y + 1", ring_xy());
    REQUIRE(images.size() == 2);
    CHECK(images[0] == parse_poly("X^2", ring_xy()));
    CHECK(images[1] == parse_poly("Y + 1", ring_xy()));
    CHECK_THROWS_AS(parse_image_list("X;", ring_xy()), ParseError);
}

TEST_CASE("scalar parsing insists on constants") {
    CHECK(parse_scalar("3/4", ring_xy()) ==
          FieldScalar(FieldScalar::rationals(), Rational(3, 4)));
    CHECK(parse_scalar("z^2", ring_z4()).rational_value() == Rational(-1));
    CHECK_THROWS_AS(parse_scalar("X", ring_xy()), ParseError);
}

TEST_CASE("printing fixed polynomials") {
    CHECK(to_string(parse_poly("Y - X", ring_xy())) == "-1*X + Y");
    CHECK(to_string(parse_poly("X^2 - X*Y - 1/2", ring_xy())) ==
          "X^2 - X*Y - 1/2");
    CHECK(to_string(parse_poly("0", ring_xy())) == "0");
    CHECK(to_string(parse_poly("-2/3*X", ring_xy())) == "-2/3*X");
    CHECK(to_string(parse_poly("X^2*Y^3", ring_xy())) == "X^2*Y^3");
    CHECK(to_string(parse_poly("3 - X", ring_xy())) == "-1*X + 3");
}

TEST_CASE("printing cyclotomic coefficients") {
    auto f = ring_z4()->field();
    FieldScalar z = FieldScalar::zeta(f);
    CHECK(to_string(-z) == "-1*z");
    CHECK(to_string(FieldScalar(f, 2) * z) == "2*z");
    MultiPoly p = parse_poly("(z+1)*X - z^3", ring_z4());
    CHECK(to_string(p) == "(z + 1)*X + z");  // z^3 reduces to -z mod z^2 + 1
}

TEST_CASE("round trip from text through print and back") {
    std::vector<std::string> samples = {
        "X^2+Y^2", "2*X^3*Y - 1/2", "(X+Y)^2", "-1*Y", "0", "17",
        "X*Y - X + Y - 1", "1/3*X^4 - 2*Y^3",
    };
    for (const auto& s : samples) {
        MultiPoly p = parse_poly(s, ring_xy());
        CHECK(parse_poly(to_string(p), ring_xy()) == p);
    }
}

TEST_CASE("round trip on random polynomials") {
    std::mt19937_64 gen(987654321);
    for (int trial = 0; trial < 120; ++trial) {
        const RingPtr& ring = trial % 2 == 0 ? ring_xy() : ring_z4();
        MultiPoly p = random_poly(gen, ring);
        CHECK(parse_poly(to_string(p), ring) == p);
    }
}
