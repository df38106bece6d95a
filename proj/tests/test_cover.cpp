#include <catch_amalgamated.hpp>

#include "milnor/cover.hpp"
#include "milnor/oracles.hpp"
#include "milnor/presets.hpp"

using namespace milnor;

namespace {

Word word(std::initializer_list<int> signed_gens)
{
    std::vector<Letter> letters;
    for (int s : signed_gens)
        letters.push_back({std::abs(s) - 1, s > 0 ? 1 : -1});
    return Word(std::move(letters));
}

std::vector<long> coeffs(const CycElement& e)
{
    std::vector<long> out;
    for (const auto& c : e.coeffs())
        out.push_back(c.convert_to<long>());
    return out;
}

Presentation decone_presentation(const Arrangement& arr)
{
    const int n = static_cast<int>(arr.size());
    return free_reduce_and_strip(arvola_randell(shear_to_generic(decone(arr, n - 1).affine)));
}

}  // namespace

TEST_CASE("group ring arithmetic")
{
    CycElement x = CycElement::monomial(3, 1);
    CHECK(coeffs(x) == std::vector<long>{0, 1, 0});
    CHECK(coeffs(CycElement::monomial(3, -1)) == std::vector<long>{0, 0, 1});
    CHECK(coeffs(x * x * x) == std::vector<long>{1, 0, 0});
    CHECK(coeffs(x.shifted(2)) == std::vector<long>{1, 0, 0});
    CHECK(coeffs(x - CycElement::monomial(3, 0)) == std::vector<long>{-1, 1, 0});
    CHECK((x + x).at_one() == 2);
    CHECK_THROWS_AS(CycElement(0), std::invalid_argument);
}

TEST_CASE("phi degree")
{
    CHECK(phi_degree(word({1, 2, -1, -2}), 3) == 0);
    CHECK(phi_degree(word({1, 2, 3}), 3) == 0);
    CHECK(phi_degree(word({1, 2}), 3) == 2);
    CHECK(phi_degree(word({-1}), 3) == 2);
}

TEST_CASE("Fox derivatives of a commutator")
{
    Word c = word({1, 2, -1, -2});
    CHECK(coeffs(fox_derivative(c, 0, 3)) == std::vector<long>{1, -1, 0});
    CHECK(coeffs(fox_derivative(c, 1, 3)) == std::vector<long>{-1, 1, 0});
    CHECK(coeffs(fox_derivative(word({1}), 1, 4)) == std::vector<long>{0, 0, 0, 0});
    CHECK(coeffs(fox_derivative(word({-1}), 0, 4)) == std::vector<long>{0, 0, 0, -1});
}

TEST_CASE("Fox fundamental identity on random words")
{
    std::mt19937_64 rng(99);
    for (int i = 0; i < 300; ++i) {
        const int gens = 1 + i % 4, n = 1 + i % 9;
        Word w = oracle::random_word(rng, gens, 16);
        INFO(w.to_string() << " n=" << n);
        CHECK(oracle::fox_fundamental_identity(w, gens, n));
    }
}

TEST_CASE("triangle cover complex")
{
    CoverComplex c = build_cover_complex(decone_presentation(triangle()));
    REQUIRE(c.d2.rows() == 3);
    REQUIRE(c.d2.cols() == 6);
    REQUIRE(c.d1.rows() == 6);
    REQUIRE(c.d1.cols() == 3);
    // Rows are the three rotations of (1, -1, 0 | -1, 1, 0).
    IntMatrix expected(3, 6);
    expected << 1, -1, 0, -1, 1, 0,
                0, 1, -1, 0, -1, 1,
                -1, 0, 1, 1, 0, -1;
    CHECK(c.d2 == expected);
    CHECK(chain_condition_holds(c));
    CHECK(c.euler_characteristic() == 0);

    H1Result h = h1_of_cover(c, {2, 3});
    CHECK(h.group == AbelianGroup{2, {}});
    CHECK(h.b0 == 1);
    CHECK(h.b2 == 1);
    CHECK(h.betti_mod.at(3) == 2);
}

TEST_CASE("free groups cover graphs")
{
    for (int n = 3; n <= 6; ++n) {
        CoverComplex c = build_cover_complex(decone_presentation(pencil(n)));
        CHECK(c.d2.rows() == 0);
        CHECK(oracle::rank_gauss(c.d1) == n - 1);
        H1Result h = h1_of_cover(c);
        long expected = static_cast<long>(n - 1) * (n - 1);
        CHECK(h.group == AbelianGroup{expected, {}});
        CHECK(1 - c.euler_characteristic() == expected);
    }
}

TEST_CASE("exact homology of reference arrangements")
{
    CHECK(h1_of_cover(build_cover_complex(decone_presentation(near_pencil(4)))).group == AbelianGroup{3, {}});
    CHECK(h1_of_cover(build_cover_complex(decone_presentation(braid_a3()))).group == AbelianGroup{7, {}});
}

TEST_CASE("cover degree override")
{
    Presentation p = decone_presentation(triangle());
    CoverComplex c = build_cover_complex(p, 1);
    CHECK(h1_of_cover(c).group == AbelianGroup{2, {}});  // the complement itself: Z^2
    CHECK(chain_condition_holds(build_cover_complex(p, 7)));
}

TEST_CASE("chain condition and dual route on random arrangements")
{
    for (int seed = 1; seed <= 30; ++seed) {
        CoverComplex c = build_cover_complex(decone_presentation(random_arrangement(3 + seed % 4, seed)));
        CHECK(chain_condition_holds(c));
        H1Result h = h1_of_cover(c);
        CHECK(h.group == oracle::h1_by_cokernel(c));
        CHECK(h.betti_q == oracle::euler_b1(c));
    }
}
