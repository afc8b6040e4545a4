#include <catch2/catch.hpp>

#include <random>

#include "catchain/linalg.hpp"
#include "catchain/matrix.hpp"
#include "fixtures.hpp"

using namespace catchain;

TEST_CASE("matmul basics", "[matrix]") {
    std::mt19937_64 rng(1);
    const Matrix m = fixtures::random_matrix(rng, 3, 3);
    CHECK(Matrix::identity(3) * m == m);
    CHECK(m * Matrix::identity(3) == m);

    const Matrix a = Matrix::from_rows({{1, 2}, {3, 4}});
    const Matrix v = Matrix::from_rows({{0}, {1}});
    CHECK(a * v == Matrix::from_rows({{2}, {4}}));

    const Matrix b = Matrix::from_rows({{Rational(1, 2), Rational(1, 3)}, {0, 1}});
    const Matrix w = Matrix::from_rows({{6}, {6}});
    CHECK(b * w == Matrix::from_rows({{5}, {6}}));

    CHECK_THROWS_AS(a * Matrix(3, 2), DimensionError);
}

TEST_CASE("matrix helpers", "[matrix]") {
    const Matrix a = Matrix::from_rows({{1, 2}, {3, 4}});
    CHECK(a.transpose() == Matrix::from_rows({{1, 3}, {2, 4}}));
    CHECK(hstack(a, Matrix::identity(2)) == Matrix::from_rows({{1, 2, 1, 0}, {3, 4, 0, 1}}));
    CHECK(vstack(a, a).rows() == 4);
    CHECK(select(a, {1}, {0, 1}) == Matrix::from_rows({{3, 4}}));
    CHECK(Matrix(2, 2).is_zero());
    CHECK_FALSE(a.is_zero());
    CHECK(a.str() == "[1 2; 3 4]");
    CHECK_THROWS_AS(Matrix::from_rows({{1, 2}, {3}}), DimensionError);
}

TEST_CASE("rank examples", "[linalg]") {
    CHECK(rank(Matrix(4, 4)) == 0);
    CHECK(rank(Matrix::identity(3)) == 3);
    CHECK(rank(Matrix::from_rows({{1, 2}, {2, 4}})) == 1);  // row 2 = 2 * row 1
}

TEST_CASE("kernel basis examples", "[linalg]") {
    CHECK(kernel_basis(Matrix(2, 2)).size() == 2);
    CHECK(kernel_basis(Matrix::identity(2)).empty());

    const auto basis = kernel_basis(Matrix::from_rows({{1, -1}}));
    REQUIRE(basis.size() == 1);
    CHECK(basis[0](0, 0) == basis[0](1, 0));  // solves x = y
    CHECK_FALSE(basis[0].is_zero());
}

TEST_CASE("solve_affine classifies systems", "[linalg]") {
    // {x = 1, x = 2} is inconsistent
    const auto none = solve_affine({{Matrix::from_rows({{1}}), Matrix::from_rows({{1}})},
                                    {Matrix::from_rows({{1}}), Matrix::from_rows({{2}})}},
                                   1);
    CHECK(none.kind == LinearSolution::Kind::None);

    // {x + y = 1} has a line of solutions
    const auto line = solve_affine({{Matrix::from_rows({{1, 1}}), Matrix::from_rows({{1}})}}, 2);
    CHECK(line.kind == LinearSolution::Kind::Affine);
    CHECK(line.affine_dim == 1);

    // {x + y = 3, x - y = 1} -> (2, 1)
    const auto unique = solve_affine(
        {{Matrix::from_rows({{1, 1}, {1, -1}}), Matrix::from_rows({{3}, {1}})}}, 2);
    REQUIRE(unique.kind == LinearSolution::Kind::Unique);
    CHECK(unique.solution == Matrix::from_rows({{2}, {1}}));

    // zero unknowns
    CHECK(solve_affine({}, 0).kind == LinearSolution::Kind::Unique);
    CHECK_THROWS_AS(solve_affine({{Matrix(1, 3), Matrix(1, 1)}}, 2), DimensionError);
}

TEST_CASE("rank is transpose invariant", "[linalg][property]") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<std::size_t> dim(1, 6);
    for (int trial = 0; trial < 40; ++trial) {
        const Matrix m = fixtures::random_matrix(rng, dim(rng), dim(rng));
        CHECK(rank(m) == rank(m.transpose()));
    }
}

TEST_CASE("kernel vectors are killed and independent", "[linalg][property]") {
    std::mt19937_64 rng(43);
    std::uniform_int_distribution<std::size_t> dim(1, 6);
    for (int trial = 0; trial < 40; ++trial) {
        const Matrix m = fixtures::random_matrix(rng, dim(rng), dim(rng));
        const auto basis = kernel_basis(m);
        CHECK(basis.size() == m.cols() - rank(m));
        Matrix assembled(m.cols(), basis.size());
        for (std::size_t j = 0; j < basis.size(); ++j) {
            CHECK((m * basis[j]).is_zero());
            for (std::size_t r = 0; r < m.cols(); ++r) assembled(r, j) = basis[j](r, 0);
        }
        CHECK(rank(assembled) == basis.size());
    }
}

TEST_CASE("rank of a product is bounded by both factors", "[linalg][property]") {
    std::mt19937_64 rng(44);
    std::uniform_int_distribution<std::size_t> dim(1, 6);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t a = dim(rng), b = dim(rng), c = dim(rng);
        const Matrix m = fixtures::random_matrix(rng, a, b);
        const Matrix n = fixtures::random_matrix(rng, b, c);
        CHECK(rank(m * n) <= std::min(rank(m), rank(n)));
    }
}

TEST_CASE("unique solutions satisfy every constraint", "[linalg][property]") {
    std::mt19937_64 rng(45);
    std::uniform_int_distribution<std::size_t> dim(1, 5);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = dim(rng);
        // build a consistent system around a planted solution
        const Matrix planted = fixtures::random_matrix(rng, n, 1);
        std::vector<AffineConstraint> constraints;
        for (std::size_t block = 0; block < 3; ++block) {
            const Matrix lhs = fixtures::random_matrix(rng, dim(rng), n);
            constraints.push_back({lhs, lhs * planted});
        }
        const auto sol = solve_affine(constraints, n);
        REQUIRE(sol.kind != LinearSolution::Kind::None);
        if (sol.kind == LinearSolution::Kind::Unique) {
            CHECK(sol.solution == planted);
            for (const auto& c : constraints) CHECK(c.lhs * sol.solution == c.rhs);
        }
    }
}
