#include <catch_amalgamated.hpp>

#include "milnor/oracles.hpp"

using namespace milnor;

TEST_CASE("determinant by cofactors")
{
    IntMatrix m(3, 3);
    m << 2, 0, 1,
         1, 3, 2,
         1, 1, 1;
    CHECK(oracle::det_laplace(m) == 0);
    m(2, 2) = 4;
    CHECK(oracle::det_laplace(m) == 18);
    CHECK(oracle::det_laplace(IntMatrix(0, 0)) == 1);
}

TEST_CASE("invariant factors from minors")
{
    IntMatrix m(2, 2);
    m << 2, 4,
         6, 8;
    CHECK(oracle::invariant_factors_by_minors(m) == std::vector<BigInt>{2, 4});
    CHECK(oracle::invariant_factors_by_minors(IntMatrix::Zero(2, 2)).empty());
}

TEST_CASE("rational rank")
{
    IntMatrix m(3, 3);
    m << 1, 2, 3,
         2, 4, 6,
         0, 1, 1;
    CHECK(oracle::rank_gauss(m) == 2);
    CHECK(oracle::rank_gauss(m) == rank_q(m));
}

TEST_CASE("random generators are reproducible")
{
    std::mt19937_64 a(42), b(42);
    for (int i = 0; i < 10; ++i)
        CHECK(oracle::random_word(a, 3, 10) == oracle::random_word(b, 3, 10));
    IntMatrix m = oracle::random_matrix(a, 4, 4, 5);
    CHECK(m.rows() >= 1);
    CHECK(m.cols() <= 4);
    CHECK(m.maxCoeff() <= 5);
}
