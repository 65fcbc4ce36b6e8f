#include <catch2/catch_amalgamated.hpp>

#include <tameiso/cyclotomic.hpp>
#include <tameiso/errors.hpp>

#include <set>

using namespace tameiso;

namespace {

std::vector<Integer> modulus_of(unsigned m) {
    return CyclotomicField::make(m)->modulus();
}

}  // namespace

TEST_CASE("cyclotomic moduli match the classical table") {
    // Ascending coefficient lists, leading coefficient 1.
    CHECK(modulus_of(1) == std::vector<Integer>{-1, 1});
    CHECK(modulus_of(2) == std::vector<Integer>{1, 1});
    CHECK(modulus_of(3) == std::vector<Integer>{1, 1, 1});
    CHECK(modulus_of(4) == std::vector<Integer>{1, 0, 1});
    CHECK(modulus_of(5) == std::vector<Integer>{1, 1, 1, 1, 1});
    CHECK(modulus_of(6) == std::vector<Integer>{1, -1, 1});
    CHECK(modulus_of(8) == std::vector<Integer>{1, 0, 0, 0, 1});
    CHECK(modulus_of(9) == std::vector<Integer>{1, 0, 0, 1, 0, 0, 1});
    CHECK(modulus_of(10) == std::vector<Integer>{1, -1, 1, -1, 1});
    CHECK(modulus_of(12) == std::vector<Integer>{1, 0, -1, 0, 1});
}

TEST_CASE("field degrees equal Euler phi") {
    CHECK(CyclotomicField::make(1)->degree() == 1);
    CHECK(CyclotomicField::make(2)->degree() == 1);
    CHECK(CyclotomicField::make(7)->degree() == 6);
    CHECK(CyclotomicField::make(11)->degree() == 10);
    CHECK(CyclotomicField::make(12)->degree() == 4);
}

TEST_CASE("primitive root powers") {
    auto f4 = CyclotomicField::make(4);
    FieldScalar z = FieldScalar::zeta(f4);
    CHECK(z.pow(2) == -FieldScalar::one(f4));
    CHECK(z.pow(4) == FieldScalar::one(f4));
    CHECK(z.pow(-1) == -z);
    CHECK(z.pow(-1) * z == FieldScalar::one(f4));

    auto f3 = CyclotomicField::make(3);
    FieldScalar w = FieldScalar::zeta(f3);
    CHECK(w.pow(3) == FieldScalar::one(f3));
    CHECK((w * w + w + FieldScalar::one(f3)).is_zero());
}

TEST_CASE("inverse of 1 + zeta_5") {
    auto f5 = CyclotomicField::make(5);
    FieldScalar z = FieldScalar::zeta(f5);
    FieldScalar v = (FieldScalar::one(f5) + z).inverse();
    // Power-basis coefficients 0, -1, 0, -1: inverse is -z - z^3.
    CHECK(v == -z - z.pow(3));
    CHECK(v * (FieldScalar::one(f5) + z) == FieldScalar::one(f5));
}

TEST_CASE("rational scalars and recognition") {
    auto q = FieldScalar::rationals();
    FieldScalar half(q, Rational(1, 2));
    CHECK(half.is_rational());
    CHECK(half.rational_value() == Rational(1, 2));
    CHECK(half.inverse() == FieldScalar(q, Rational(2)));

    auto f4 = CyclotomicField::make(4);
    FieldScalar z = FieldScalar::zeta(f4);
    CHECK((z * z).is_rational());
    CHECK((z * z).rational_value() == Rational(-1));
    CHECK_FALSE(z.is_rational());
}

TEST_CASE("default scalar is zero over the rationals") {
    FieldScalar s;
    CHECK(s.is_zero());
    CHECK(s.field()->order() == 1);
}

TEST_CASE("mixed-field arithmetic is rejected") {
    auto f3 = CyclotomicField::make(3);
    auto f4 = CyclotomicField::make(4);
    FieldScalar a = FieldScalar::zeta(f3);
    FieldScalar b = FieldScalar::zeta(f4);
    CHECK_THROWS_AS(a + b, RingMismatchError);
    CHECK_THROWS_AS(a * b, RingMismatchError);
}

TEST_CASE("division by zero is rejected") {
    auto q = FieldScalar::rationals();
    CHECK_THROWS_AS(FieldScalar::zero(q).inverse(), Error);
}

TEST_CASE("torsion order is lcm(2, m)") {
    CHECK(CyclotomicField::make(1)->torsion_order() == 2);
    CHECK(CyclotomicField::make(2)->torsion_order() == 2);
    CHECK(CyclotomicField::make(3)->torsion_order() == 6);
    CHECK(CyclotomicField::make(4)->torsion_order() == 4);
    CHECK(CyclotomicField::make(6)->torsion_order() == 6);
    CHECK(CyclotomicField::make(5)->torsion_order() == 10);
}

TEST_CASE("primitive torsion root generates all roots of unity") {
    for (unsigned m : {1u, 2u, 3u, 4u, 5u, 6u, 8u, 12u}) {
        auto f = CyclotomicField::make(m);
        unsigned big = f->torsion_order();
        FieldScalar xi = primitive_torsion_root(f);
        CHECK(xi.pow(static_cast<long>(big)) == FieldScalar::one(f));
        std::set<FieldScalar> seen;
        FieldScalar p = FieldScalar::one(f);
        for (unsigned k = 0; k < big; ++k) {
            seen.insert(p);
            p = p * xi;
        }
        CHECK(seen.size() == big);  // xi has exact order lcm(2, m)
    }
    // Odd m: xi squares back to the primitive root itself.
    auto f3 = CyclotomicField::make(3);
    FieldScalar xi = primitive_torsion_root(f3);
    CHECK(xi * xi == FieldScalar::zeta(f3));
}

TEST_CASE("roots of unity of bounded order") {
    auto q = FieldScalar::rationals();
    auto all_q = roots_of_unity(q, 0);
    CHECK(all_q.size() == 2);
    auto square_q = roots_of_unity(q, 2);
    REQUIRE(square_q.size() == 2);
    CHECK(square_q[0] == FieldScalar::one(q));
    CHECK(square_q[1] == -FieldScalar::one(q));
    auto cube_q = roots_of_unity(q, 3);
    REQUIRE(cube_q.size() == 1);
    CHECK(cube_q[0] == FieldScalar::one(q));

    auto f4 = CyclotomicField::make(4);
    auto fourth = roots_of_unity(f4, 4);
    CHECK(fourth.size() == 4);
    std::set<FieldScalar> distinct(fourth.begin(), fourth.end());
    CHECK(distinct.size() == 4);
    for (const auto& r : fourth) CHECK(r.pow(4) == FieldScalar::one(f4));

    auto f3 = CyclotomicField::make(3);
    auto sixth = roots_of_unity(f3, 0);
    CHECK(sixth.size() == 6);
    auto square_3 = roots_of_unity(f3, 2);
    CHECK(square_3.size() == 2);
}

TEST_CASE("scalar ordering is a strict total order") {
    auto f4 = CyclotomicField::make(4);
    std::vector<FieldScalar> xs = {
        FieldScalar::zeta(f4),
        FieldScalar::one(f4),
        -FieldScalar::zeta(f4),
        FieldScalar::zero(f4),
        FieldScalar::one(f4) + FieldScalar::zeta(f4),
    };
    for (const auto& a : xs)
        for (const auto& b : xs) {
            if (a == b) {
                CHECK_FALSE(a < b);
                CHECK_FALSE(b < a);
            } else {
                CHECK(((a < b) != (b < a)));
            }
        }
}
