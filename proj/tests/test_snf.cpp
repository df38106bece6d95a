#include <catch_amalgamated.hpp>

#include "milnor/oracles.hpp"
#include "milnor/snf.hpp"

using namespace milnor;

namespace {

IntMatrix mat(Index rows, Index cols, std::initializer_list<long> values)
{
    IntMatrix m(rows, cols);
    auto it = values.begin();
    for (Index i = 0; i < rows; ++i)
        for (Index j = 0; j < cols; ++j)
            m(i, j) = *it++;
    return m;
}

std::vector<BigInt> big(std::initializer_list<long> values)
{
    return {values.begin(), values.end()};
}

}  // namespace

TEST_CASE("Smith normal form examples")
{
    CHECK(smith_normal_form<BigInt>(IntMatrix::Identity(3, 3)).diagonal == big({1, 1, 1}));
    CHECK(smith_normal_form<BigInt>(IntMatrix::Zero(2, 3)).rank() == 0);
    CHECK(smith_normal_form(mat(2, 2, {2, 4, 6, 8})).diagonal == big({2, 4}));
    CHECK(smith_normal_form(mat(2, 2, {2, 0, 0, 3})).diagonal == big({1, 6}));
    CHECK(smith_normal_form(mat(1, 3, {4, 6, 10})).diagonal == big({2}));
    CHECK(rank_q(mat(3, 3, {1, 2, 3, 4, 5, 6, 7, 8, 9})) == 2);
}

TEST_CASE("Smith decomposition transforms are unimodular inverses")
{
    std::mt19937_64 rng(3);
    for (int i = 0; i < 100; ++i) {
        IntMatrix m = oracle::random_matrix(rng, 6, 6, 9);
        SmithDecomposition<BigInt> d = smith_decomposition(m);
        CHECK(d.left * m * d.right == d.diagonal);
        CHECK(d.left * d.left_inverse == IntMatrix::Identity(m.rows(), m.rows()));
        CHECK(d.right * d.right_inverse == IntMatrix::Identity(m.cols(), m.cols()));
        for (Index k = 0; k + 1 < d.rank; ++k)
            CHECK(d.diagonal(k + 1, k + 1) % d.diagonal(k, k) == 0);
    }
}

TEST_CASE("invariant factors agree with the minor-gcd oracle")
{
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        IntMatrix m = oracle::random_matrix(rng, 4, 4, 8);
        CHECK(smith_normal_form(m).diagonal == oracle::invariant_factors_by_minors(m));
    }
}

TEST_CASE("the oracles catch a diagonalizer without the divisibility fix")
{
    IntMatrix m = mat(2, 2, {2, 0, 0, 3});
    CHECK(oracle::naive_diagonal(m) == big({2, 3}));
    CHECK(oracle::naive_diagonal(m) != oracle::invariant_factors_by_minors(m));

    std::mt19937_64 rng(5);
    int caught = 0;
    for (int i = 0; i < 200; ++i) {
        IntMatrix r = oracle::random_matrix(rng, 4, 4, 8);
        caught += oracle::naive_diagonal(r) != oracle::invariant_factors_by_minors(r);
    }
    CHECK(caught > 0);
}

TEST_CASE("rank modulo a prime")
{
    CHECK(rank_mod_p(IntMatrix::Identity(3, 3), 7) == 3);
    CHECK(rank_mod_p(mat(1, 1, {2}), 2) == 0);
    CHECK(rank_mod_p(mat(2, 2, {2, 4, 6, 8}), 2) == 0);
    CHECK(rank_mod_p(mat(2, 2, {2, 4, 6, 8}), 3) == 2);
    CHECK(rank_mod_p(mat(2, 2, {-1, 1, 1, -1}), 5) == 1);
    CHECK_THROWS_AS(rank_mod_p(mat(1, 1, {1}), 4), std::invalid_argument);
    CHECK_THROWS_AS(rank_mod_p(mat(1, 1, {1}), 1), std::invalid_argument);
}

TEST_CASE("quotient of kernel by image")
{
    SECTION("zero maps")
    {
        AbelianGroup g = quotient(IntMatrix::Zero(1, 4), IntMatrix::Zero(4, 0));
        CHECK(g == AbelianGroup{4, {}});
    }
    SECTION("torsion summand")
    {
        AbelianGroup g = quotient(IntMatrix::Zero(1, 2), mat(2, 1, {2, 0}));
        CHECK(g == AbelianGroup{1, {BigInt(2)}});
        CHECK(g.to_string() == "Z^1 + Z/2");
    }
    SECTION("kernel smaller than the chain group")
    {
        // ker [1 1] is spanned by (1, -1); the image is 3 (1, -1).
        AbelianGroup g = quotient(mat(1, 2, {1, 1}), mat(2, 1, {3, -3}));
        CHECK(g == AbelianGroup{0, {BigInt(3)}});
        CHECK(g.to_string() == "Z/3");
    }
    SECTION("chain condition enforced")
    {
        CHECK_THROWS_AS(quotient(mat(1, 2, {1, 0}), mat(2, 1, {1, 0})), std::invalid_argument);
        CHECK_THROWS_AS(quotient(mat(1, 2, {1, 0}), mat(3, 1, {0, 0, 0})), std::invalid_argument);
    }
    CHECK(AbelianGroup{}.to_string() == "0");
}

TEST_CASE("triplet round trip")
{
    std::mt19937_64 rng(17);
    for (int i = 0; i < 20; ++i) {
        IntMatrix m = oracle::random_matrix(rng, 5, 5, 3);
        CHECK(read_triplets(write_triplets(m)) == m);
    }
    CHECK_THROWS(read_triplets("2 2\n5 0 1\n"));
}
