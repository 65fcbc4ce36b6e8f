#include <catch2/catch_amalgamated.hpp>

#include <tameiso/maps.hpp>
#include <tameiso/parse.hpp>

#include <random>

using namespace tameiso;

namespace {

RingPtr ring_xy() {
    static RingPtr r = PolyRing::make(FieldScalar::rationals(), {"X", "Y"});
    return r;
}

MultiPoly p(const std::string& text) { return parse_poly(text, ring_xy()); }

Derivation der(const std::string& images) {
    return Derivation(ring_xy(), parse_image_list(images, ring_xy()));
}

Endomorphism endo(const std::string& images) {
    return Endomorphism(ring_xy(), parse_image_list(images, ring_xy()));
}

FieldScalar q(long num, long den = 1) {
    return FieldScalar(FieldScalar::rationals(), Rational(num, den));
}

MultiPoly random_poly(std::mt19937_64& gen, const RingPtr& ring) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<unsigned> expo(0, 2);
    std::uniform_int_distribution<int> nterms(1, 4);
    MultiPoly out = MultiPoly::zero(ring);
    int k = nterms(gen);
    for (int t = 0; t < k; ++t) {
        Monomial m(ring->var_count());
        for (auto& e : m) e = expo(gen);
        int c = coeff(gen);
        if (c == 0) continue;
        out = out + MultiPoly::term(ring, std::move(m), q(c));
    }
    return out;
}

}  // namespace

TEST_CASE("derivations satisfy the Leibniz rule") {
    Derivation rot = der("-1*Y; X");
    CHECK(derive(rot, p("X^2 + Y^2")).is_zero());
    CHECK(derive(rot, p("X*Y")) == p("X^2 - Y^2"));

    std::mt19937_64 gen(424242);
    for (int trial = 0; trial < 40; ++trial) {
        Derivation d(ring_xy(), {random_poly(gen, ring_xy()), random_poly(gen, ring_xy())});
        MultiPoly a = random_poly(gen, ring_xy());
        MultiPoly b = random_poly(gen, ring_xy());
        CHECK(derive(d, a * b) == derive(d, a) * b + a * derive(d, b));
        CHECK(derive(d, a + b) == derive(d, a) + derive(d, b));
    }
}

TEST_CASE("endomorphism application is a ring map") {
    Endomorphism s = endo("X + Y; 2*Y");
    CHECK(apply(s, p("X^2 + Y")) == p("X^2 + 2*X*Y + Y^2 + 2*Y"));
    CHECK(apply(Endomorphism::identity(ring_xy()), p("X*Y - 1")) == p("X*Y - 1"));

    std::mt19937_64 gen(5150);
    for (int trial = 0; trial < 40; ++trial) {
        Endomorphism t(ring_xy(),
                       {random_poly(gen, ring_xy()), random_poly(gen, ring_xy())});
        MultiPoly a = random_poly(gen, ring_xy());
        MultiPoly b = random_poly(gen, ring_xy());
        CHECK(apply(t, a * b) == apply(t, a) * apply(t, b));
        CHECK(apply(t, a + b) == apply(t, a) + apply(t, b));
    }
}

TEST_CASE("elementary automorphisms validate and invert") {
    ElementaryAuto s(ring_xy(), 0, q(2), p("Y^2"));
    CHECK(apply(s, p("X")) == p("2*X + Y^2"));
    CHECK(apply(s, p("Y")) == p("Y"));
    CHECK_FALSE(s.is_identity());

    ElementaryAuto inv = elementary_inverse(s);
    CHECK(apply(inv, apply(s, p("X^3 - Y"))) == p("X^3 - Y"));
    CHECK(apply(s, apply(inv, p("X*Y + 2"))) == p("X*Y + 2"));

    CHECK_THROWS_AS(ElementaryAuto(ring_xy(), 0, q(0), p("0")), PreconditionError);
    CHECK_THROWS_AS(ElementaryAuto(ring_xy(), 0, q(1), p("X")), PreconditionError);
    CHECK_THROWS_AS(ElementaryAuto(ring_xy(), 5, q(1), p("0")), PreconditionError);
    CHECK(ElementaryAuto(ring_xy(), 1, q(1), p("0")).is_identity());
}

TEST_CASE("words compose left factor first") {
    std::vector<ElementaryAuto> fs = {
        ElementaryAuto(ring_xy(), 0, q(1), p("-1*Y")),
        ElementaryAuto(ring_xy(), 0, q(2), p("0")),
        ElementaryAuto(ring_xy(), 1, q(1), p("X")),
    };
    TameWord w(ring_xy(), fs);
    Endomorphism c = compose_word(w);
    // (u v)(p) = v(u(p)): the left-most factor substitutes first, so
    // X passes through X-Y, then 2X, then Y -> X+Y.
    CHECK(c.images[0] == p("X - Y"));
    CHECK(c.images[1] == p("X + Y"));

    TameWord winv = word_inverse(w);
    MultiPoly probe = p("X^2*Y - X + 3");
    CHECK(apply(winv, apply(w, probe)) == probe);
    CHECK(apply(w, apply(winv, probe)) == probe);
    CHECK(compose_word(TameWord(ring_xy())).images[0] == p("X"));
}

TEST_CASE("commutation with a derivation") {
    Derivation rot = der("-1*Y; X");
    CHECK(commutes(endo("X - Y; X + Y"), rot));
    CHECK_FALSE(commutes(endo("X; 2*Y"), rot));
    CHECK(commutes(Endomorphism::identity(ring_xy()), rot));

    Derivation dy = der("0; Y");
    CHECK(commutes(ElementaryAuto(ring_xy(), 1, q(5), p("0")), dy));
    CHECK(commutes(ElementaryAuto(ring_xy(), 0, q(1), p("7")), dy));
    CHECK_FALSE(commutes(ElementaryAuto(ring_xy(), 1, q(1), p("1")), dy));
}

TEST_CASE("conjugation transports a derivation along a word") {
    // Pushing d/dX through X -> X, Y -> Y + X^2.
    TameWord w(ring_xy(), {ElementaryAuto(ring_xy(), 1, q(1), p("X^2"))});
    Derivation d = der("1; 0");
    Derivation moved = conjugate(d, w);
    CHECK(moved.images[0] == p("1"));
    CHECK(moved.images[1] == p("-2*X"));

    // Conjugating back restores the original.
    Derivation back = conjugate(moved, word_inverse(w));
    CHECK(back.images[0] == d.images[0]);
    CHECK(back.images[1] == d.images[1]);

    // Conjugation preserves commutation.
    ElementaryAuto t(ring_xy(), 0, q(1), p("1"));
    REQUIRE(commutes(t, d));
    TameWord moved_t(ring_xy(), {ElementaryAuto(ring_xy(), 1, q(1), p("-1*X^2")),
                                 t,
                                 ElementaryAuto(ring_xy(), 1, q(1), p("X^2"))});
    CHECK(commutes(compose_word(moved_t), moved));
}

TEST_CASE("shape classification") {
    auto rxyz = PolyRing::make(FieldScalar::rationals(), {"X", "Y", "Z"});
    Derivation tri(rxyz, parse_image_list("1; X; X*Y", rxyz));
    ShapeInfo si = classify_shape(tri);
    CHECK(si.is_triangular);
    CHECK(si.translation_invariant_axes == std::vector<std::size_t>{2});

    ShapeInfo sham = classify_shape(der("1; X*Y + 1"));
    CHECK(sham.is_shamsuddin);
    CHECK_FALSE(classify_shape(der("1; Y^2")).is_shamsuddin);
    CHECK_FALSE(classify_shape(der("-1*Y; X")).is_shamsuddin);
    CHECK_FALSE(classify_shape(der("2; X")).is_shamsuddin);

    auto mixed = Derivation(rxyz, parse_image_list("1; X*Y; Z + X", rxyz));
    CHECK_FALSE(classify_shape(mixed).is_triangular);
    CHECK(classify_shape(mixed).is_shamsuddin);

    // Z appears in the image of Y: not a Shamsuddin pattern.
    auto cross = Derivation(rxyz, parse_image_list("1; Z*Y; Z", rxyz));
    CHECK_FALSE(classify_shape(cross).is_shamsuddin);

    ShapeInfo still = classify_shape(der("0; Y"));
    CHECK(still.translation_invariant_axes == std::vector<std::size_t>{0});
}
