#include <catch2/catch_amalgamated.hpp>

#include <tameiso/linalg.hpp>

using namespace tameiso;

namespace {

const FieldPtr& QQ() { return FieldScalar::rationals(); }

FieldScalar q(long num, long den = 1) { return FieldScalar(QQ(), Rational(num, den)); }

Matrix mat(std::vector<std::vector<long>> rows) {
    Matrix m;
    for (auto& r : rows) {
        Vector v;
        for (long x : r) v.push_back(q(x));
        m.push_back(std::move(v));
    }
    return m;
}

Vector vec(std::vector<long> xs) {
    Vector v;
    for (long x : xs) v.push_back(q(x));
    return v;
}

}  // namespace

TEST_CASE("rref normalizes pivots and clears columns") {
    Matrix m = mat({{2, 4, 2}, {1, 2, 3}});
    auto pivots = rref(m);
    CHECK(pivots == std::vector<std::size_t>{0, 2});
    CHECK(m[0] == vec({1, 2, 0}));
    CHECK(m[1] == vec({0, 0, 1}));

    Matrix z = mat({{0, 0}, {0, 0}});
    CHECK(rref(z).empty());
}

TEST_CASE("nullspace basis is canonical") {
    auto basis = nullspace(mat({{1, 1, 0}, {0, 0, 1}}), 3, QQ());
    REQUIRE(basis.size() == 1);
    CHECK(basis[0] == vec({-1, 1, 0}));

    auto full = nullspace(mat({{0, 0}, {0, 0}}), 2, QQ());
    REQUIRE(full.size() == 2);
    CHECK(full[0] == vec({1, 0}));
    CHECK(full[1] == vec({0, 1}));

    CHECK(nullspace(mat({{1, 0}, {0, 1}}), 2, QQ()).empty());
}

TEST_CASE("affine solve finds particular plus homogeneous") {
    // x + y = 3, x - y = 1: unique solution (2, 1).
    auto sol = solve_affine(mat({{1, 1}, {1, -1}}), vec({3, 1}), 2, QQ());
    REQUIRE(sol.has_value());
    CHECK(sol->particular == vec({2, 1}));
    CHECK(sol->homogeneous.empty());

    // Underdetermined: x + y + z = 1.
    auto under = solve_affine(mat({{1, 1, 1}}), vec({1}), 3, QQ());
    REQUIRE(under.has_value());
    CHECK(under->particular == vec({1, 0, 0}));
    CHECK(under->homogeneous.size() == 2);

    // Inconsistent: x = 1 and x = 2.
    CHECK_FALSE(solve_affine(mat({{1}, {1}}), vec({1, 2}), 1, QQ()).has_value());

    // No rows at all: everything is a solution.
    auto free = solve_affine(Matrix{}, Vector{}, 2, QQ());
    REQUIRE(free.has_value());
    CHECK(free->particular == vec({0, 0}));
    CHECK(free->homogeneous.size() == 2);
}

TEST_CASE("canonical row basis is invariant under row operations") {
    auto b1 = canonical_row_basis(mat({{0, 1}, {1, 1}}));
    auto b2 = canonical_row_basis(mat({{1, 0}, {0, 1}, {1, 1}}));
    REQUIRE(b1.size() == 2);
    CHECK(b1 == b2);

    auto line1 = canonical_row_basis(mat({{2, 4}}));
    auto line2 = canonical_row_basis(mat({{-3, -6}, {1, 2}}));
    REQUIRE(line1.size() == 1);
    CHECK(line1 == line2);
    CHECK(line1[0] == vec({1, 2}));
}
