#include <catch_amalgamated.hpp>

#include <random>

#include "milnor/geometry.hpp"
#include "milnor/presets.hpp"

using namespace milnor;

namespace {

Triple T(long a, long b, long c)
{
    return {BigInt(a), BigInt(b), BigInt(c)};
}

std::vector<int> multiplicities(const IncidenceData& inc)
{
    std::vector<int> out;
    for (const auto& p : inc.points)
        out.push_back(p.multiplicity());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("canonical triples are primitive with positive leading entry")
{
    CHECK(canonical_triple(T(2, 4, -6)) == T(1, 2, -3));
    CHECK(canonical_triple(T(0, -3, 6)) == T(0, 1, -2));
    CHECK(canonical_triple(RationalTriple{Rational(1, 2), Rational(-1, 3), 0}) == T(3, -2, 0));
    CHECK_THROWS_AS(canonical_triple(T(0, 0, 0)), std::invalid_argument);
}

TEST_CASE("canonicalization is idempotent")
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> num(-30, 30), den(1, 9);
    for (int i = 0; i < 500; ++i) {
        RationalTriple t{Rational(num(rng), den(rng)), Rational(num(rng), den(rng)), Rational(num(rng), den(rng))};
        if (t[0] == 0 && t[1] == 0 && t[2] == 0)
            continue;
        Triple once = canonical_triple(t);
        CHECK(canonical_triple(once) == once);
    }
}

TEST_CASE("parse rationals")
{
    CHECK(parse_rational("3") == 3);
    CHECK(parse_rational("-2/6") == Rational(-1, 3));
    CHECK(parse_rational("+5/1") == 5);
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
    CHECK_THROWS_AS(parse_rational("x"), ParseError);
}

TEST_CASE("parse arrangements")
{
    SECTION("coordinate triangle")
    {
        auto parsed = parse_arrangement("projective\n1 0 0\n0 1 0\n0 0 1\n");
        REQUIRE(std::holds_alternative<Arrangement>(parsed));
        CHECK(std::get<Arrangement>(parsed) == triangle());
    }
    SECTION("affine with comments")
    {
        auto parsed = parse_arrangement("# decone of xyz\naffine\n1 0 0   # x = 0\n\n0 1 0\n");
        REQUIRE(std::holds_alternative<AffineArrangement>(parsed));
        const auto& aff = std::get<AffineArrangement>(parsed);
        CHECK(aff.size() == 2);
        CHECK(aff.cover_degree() == 3);
    }
    SECTION("rational coefficients canonicalize")
    {
        auto parsed = parse_arrangement("projective\n1/2 1/3 0\n0 0 7\n");
        CHECK(std::get<Arrangement>(parsed)[0].coeffs == T(3, 2, 0));
        CHECK(std::get<Arrangement>(parsed)[1].coeffs == T(0, 0, 1));
    }
    SECTION("errors")
    {
        CHECK_THROWS_AS(parse_arrangement("projective\n1 0 0\n2 0 0\n"), ParseError);
        CHECK_THROWS_AS(parse_arrangement("1 0 0\n0 1 0\n"), ParseError);
        CHECK_THROWS_AS(parse_arrangement("projective\n1 0\n0 1 0\n"), ParseError);
        CHECK_THROWS_AS(parse_arrangement("projective\n1 0 0\n"), ParseError);
        CHECK_THROWS_AS(parse_arrangement("projective\n0 0 0\n1 0 0\n"), ParseError);
        CHECK_THROWS_AS(parse_arrangement("affine\n0 0 1\n1 0 0\n"), ParseError);
        CHECK_THROWS_AS(parse_arrangement(""), ParseError);
    }
    SECTION("format round trip")
    {
        for (const auto& name : {"triangle", "braid-a3", "parallel-family", "generic:6:3"}) {
            Arrangement arr = preset(name);
            CHECK(std::get<Arrangement>(parse_arrangement(format_arrangement(arr))) == arr);
        }
    }
}

TEST_CASE("intersection points")
{
    CHECK(multiplicities(intersection_points(triangle())) == std::vector<int>{2, 2, 2});

    IncidenceData pencil4 = intersection_points(pencil(4));
    REQUIRE(pencil4.points.size() == 1);
    CHECK(pencil4.points[0].multiplicity() == 4);
    CHECK(pencil4.points[0].point == T(0, 0, 1));

    AffineArrangement rays({AffineLine(1, -1, 0), AffineLine(2, -1, 0), AffineLine(3, -1, 0)});
    IncidenceData inc = intersection_points(rays);
    REQUIRE(inc.points.size() == 1);
    CHECK(inc.points[0].multiplicity() == 3);
    CHECK(inc.points[0].point == T(0, 0, 1));

    SECTION("braid A3 census by brute force")
    {
        Arrangement arr = braid_a3();
        CHECK(multiplicities(intersection_points(arr)) == std::vector<int>{2, 2, 2, 3, 3, 3, 3});
        // Independent count: a point lies on line i iff the dot product vanishes.
        int triples = 0;
        for (std::size_t i = 0; i < arr.size(); ++i)
            for (std::size_t j = i + 1; j < arr.size(); ++j) {
                const auto& a = arr[i].coeffs;
                const auto& b = arr[j].coeffs;
                Triple p{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
                int on = 0;
                for (const auto& l : arr.lines())
                    on += l.contains(p);
                triples += on == 3;
            }
        CHECK(triples == 4 * 3);  // each triple point is seen from its 3 pairs
    }
    SECTION("per-line lists")
    {
        IncidenceData a3 = intersection_points(braid_a3());
        for (const auto& pts : a3.per_line) {
            CHECK(pts.size() == 3);
            int triple = 0;
            for (int p : pts)
                triple += a3.points[p].multiplicity() == 3;
            CHECK(triple == 2);
        }
    }
    SECTION("parallel lines do not meet in the affine chart")
    {
        AffineArrangement par({AffineLine(1, 0, 0), AffineLine(1, 0, -1), AffineLine(0, 1, 0)});
        CHECK(multiplicities(intersection_points(par)) == std::vector<int>{2, 2});
    }
}

TEST_CASE("decone")
{
    SECTION("triangle along z")
    {
        Decone d = decone(triangle(), 2);
        CHECK(d.affine[0].coeffs == T(1, 0, 0));
        CHECK(d.affine[1].coeffs == T(0, 1, 0));
        CHECK(d.source == std::vector<int>{0, 1});
    }
    SECTION("pencil along a member gives parallel lines")
    {
        Decone d = decone(pencil(5), 0);
        CHECK(d.affine.size() == 4);
        CHECK(intersection_points(d.affine).points.empty());
    }
    SECTION("near-pencil along z gives concurrent lines")
    {
        Decone d = decone(near_pencil(5), 4);
        IncidenceData inc = intersection_points(d.affine);
        REQUIRE(inc.points.size() == 1);
        CHECK(inc.points[0].multiplicity() == 4);
    }
    SECTION("decone then cone preserves the combinatorics")
    {
        for (const auto& name : {"braid-a3", "parallel-family", "random:6:4", "generic:5:2"}) {
            Arrangement arr = preset(name);
            IncidenceData original = intersection_points(arr);
            for (int inf = 0; inf < static_cast<int>(arr.size()); ++inf) {
                Decone d = decone(arr, inf);
                IncidenceData back = intersection_points(cone(d.affine));
                // cone() appends the line at infinity last; compare after relabeling.
                std::vector<int> label(arr.size());
                for (std::size_t i = 0; i < d.source.size(); ++i)
                    label[i] = d.source[i];
                label[arr.size() - 1] = inf;
                std::vector<std::vector<int>> a, b;
                for (const auto& p : original.points)
                    a.push_back(p.incident);
                for (const auto& p : back.points) {
                    std::vector<int> l;
                    for (int i : p.incident)
                        l.push_back(label[i]);
                    std::sort(l.begin(), l.end());
                    b.push_back(l);
                }
                std::sort(a.begin(), a.end());
                std::sort(b.begin(), b.end());
                CHECK(a == b);
                CHECK(decone_incidence(original, inf).points.size() ==
                      intersection_points(d.affine).points.size());
            }
        }
    }
    SECTION("transform sends the chosen line to z = 0")
    {
        Arrangement arr = braid_a3();
        Decone d = decone(arr, 4);
        for (const auto& p : intersection_points(arr).points) {
            Triple q = transform_point(d.transform, p.point);
            CHECK((q[2] == 0) == arr[4].contains(p.point));
        }
    }
    CHECK_THROWS_AS(decone(triangle(), 3), std::out_of_range);
}

TEST_CASE("shear to a sweep-generic position")
{
    SECTION("vertical line forces t = 1")
    {
        AffineArrangement aff({AffineLine(1, 0, 0), AffineLine(0, 1, 0)});
        AffineArrangement s = shear_to_generic(aff);
        CHECK(s.shear() == 1);
        CHECK(s[0].coeffs == T(1, -1, 0));  // x - y = 0
        CHECK(s[1].coeffs == T(0, 1, 0));
    }
    SECTION("already generic")
    {
        AffineArrangement aff({AffineLine(1, -1, 0), AffineLine(1, 1, 0), AffineLine(0, 1, 0)});
        AffineArrangement s = shear_to_generic(aff);
        CHECK(s.shear() == 0);
        CHECK(s.lines() == aff.lines());
    }
    SECTION("vertices sharing an x-coordinate")
    {
        // y = 0, y = x - 1 meet at (1, 0); y = 2, y = x + 1 meet at (1, 2).
        AffineArrangement aff({AffineLine(0, 1, 0), AffineLine(1, -1, -1), AffineLine(0, 1, -2),
                               AffineLine(1, -1, 1)});
        CHECK_FALSE(is_sweep_generic(aff));
        AffineArrangement s = shear_to_generic(aff);
        CHECK(s.shear() >= 1);
        CHECK(is_sweep_generic(s));
        for (int t = 0; t < s.shear(); ++t)
            CHECK_FALSE(is_sweep_generic(apply_shear(aff, t)));
    }
    SECTION("shear preserves incidence")
    {
        for (int seed = 1; seed <= 20; ++seed) {
            Arrangement arr = random_arrangement(6, seed);
            AffineArrangement aff = decone(arr, 5).affine;
            IncidenceData before = intersection_points(aff);
            IncidenceData after = intersection_points(shear_to_generic(aff));
            REQUIRE(before.points.size() == after.points.size());
            for (std::size_t i = 0; i < before.points.size(); ++i)
                CHECK(before.points[i].incident == after.points[i].incident);
        }
    }
}
