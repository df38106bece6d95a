#include "milnor/checks.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>

#include "milnor/bounds.hpp"
#include "milnor/oracles.hpp"
#include "milnor/presets.hpp"
#include "milnor/report.hpp"

namespace milnor {

const char* const cdo_example_incidence = R"(incidence N=12
# lines 0-3 carry only the quadruple point and double points
m=4 lines=0,1,2,3
# lines 4-11 carry only triple points and double points
m=3 lines=4,5,6
m=3 lines=7,8,9
m=3 lines=4,10,11
)";

namespace {

struct Outcome {
    bool correct = true;
    std::string detail;
};

// Collects the first few failures and a count.
class Tally {
  public:
    void check(bool ok, const std::string& what)
    {
        ++total_;
        if (ok)
            return;
        ++failed_;
        if (failed_ <= 3)
            first_ += (first_.empty() ? "" : "; ") + what;
    }
    Outcome outcome(const std::string& summary) const
    {
        if (failed_ == 0)
            return {true, summary};
        return {false, std::to_string(failed_) + "/" + std::to_string(total_) + " failed: " + first_};
    }

  private:
    long total_ = 0, failed_ = 0;
    std::string first_;
};

AbelianGroup free_group(long rank)
{
    return AbelianGroup{rank, {}};
}

bool fired(const BoundReport& b, const std::string& criterion)
{
    return std::any_of(b.applicable.begin(), b.applicable.end(),
                       [&](const Witness& w) { return w.criterion == criterion; });
}

AnalyzeOptions quick()
{
    AnalyzeOptions o;
    o.cross_check_projective = false;
    return o;
}

Outcome triangle_check()
{
    Tally t;
    Report r = analyze(triangle());
    t.check(r.h1 == free_group(2), "H1 = " + r.h1.to_string());
    t.check(r.all_passed(), "a verdict failed");
    CoverComplex c = build_cover_complex(free_reduce_and_strip(arvola_randell(
        shear_to_generic(decone(triangle(), 2).affine))));
    t.check(c.euler_characteristic() == 0, "chi != 0");
    t.check(oracle::euler_b1(c) == 2, "Euler oracle b1 = " + std::to_string(oracle::euler_b1(c)));
    t.check(h1_of_cover(c).b2 == 1, "b2 != 1");
    bool note = std::any_of(r.notes.begin(), r.notes.end(), [](const std::string& n) {
        return n.find("Z^2") != std::string::npos && n.find("Z^3") != std::string::npos;
    });
    t.check(note, "erratum note missing");
    return t.outcome("H1 = Z^2, chi = 0, b2 = 1, erratum noted");
}

Outcome near_pencil_check()
{
    Tally t;
    for (int n = 4; n <= 10; ++n) {
        Report r = analyze(near_pencil(n), quick());
        t.check(r.h1 == free_group(n - 1), "N=" + std::to_string(n) + " H1 = " + r.h1.to_string());
        t.check(fired(r.bounds, "corollary"), "N=" + std::to_string(n) + " corollary silent");
    }
    return t.outcome("N = 4..10: H1 = Z^(N-1), corollary fires");
}

Outcome generic_check()
{
    Tally t;
    for (int n = 4; n <= 8; ++n) {
        Arrangement arr = generic(n, 1);
        IncidenceData inc = intersection_points(arr);
        t.check(std::all_of(inc.points.begin(), inc.points.end(),
                            [](const IncidencePoint& p) { return p.multiplicity() == 2; }),
                "N=" + std::to_string(n) + " not generic");
        H1Result h = milnor_h1(decone(arr, n - 1).affine);
        t.check(h.group == free_group(n - 1), "N=" + std::to_string(n) + " H1 = " + h.group.to_string());
        t.check(oka_sakamoto_check(decone_incidence(inc, n - 1)).has_value(),
                "N=" + std::to_string(n) + " Oka-Sakamoto silent");
    }
    return t.outcome("N = 4..8: H1 = Z^(N-1), Oka-Sakamoto split found");
}

Outcome pencil_check()
{
    Tally t;
    for (int n = 3; n <= 10; ++n) {
        const long expected = static_cast<long>(n - 1) * (n - 1);
        Arrangement arr = pencil(n);
        Presentation pres = free_reduce_and_strip(arvola_randell(shear_to_generic(decone(arr, n - 1).affine)));
        CoverComplex c = build_cover_complex(pres);
        H1Result h = h1_of_cover(c);
        const std::string tag = "N=" + std::to_string(n);
        t.check(h.group == free_group(expected), tag + " H1 = " + h.group.to_string());
        t.check(oracle::euler_b1(c) == expected, tag + " Euler oracle disagrees");
        BoundReport b = evaluate_bounds(intersection_points(arr));
        t.check(b.onehyp_best == expected, tag + " one-line bound " + std::to_string(b.onehyp_best));
    }
    return t.outcome("N = 3..10: H1 = Z^((N-1)^2) = one-line bound, Euler oracle agrees");
}

Outcome sandwich_check()
{
    Tally t;
    std::size_t count = 0;
    for (const auto& e : corpus()) {
        Report r = analyze(e.arrangement, quick());
        const long n = static_cast<long>(e.arrangement.size());
        t.check(r.betti_q >= n - 1, e.name + " b1 below N-1");
        t.check(r.betti_q <= r.prediction.upper, e.name + " b1(Q) above upper");
        for (const auto& [p, b] : r.betti_mod)
            t.check(b <= r.prediction.upper, e.name + " b1(F" + std::to_string(p) + ") above upper");
        ++count;
    }
    return t.outcome(std::to_string(count) + " arrangements, zero violations");
}

Outcome equivalence_check()
{
    Tally t;
    std::size_t choices = 0;
    for (const auto& e : corpus()) {
        const int n = static_cast<int>(e.arrangement.size());
        AbelianGroup affine = milnor_h1(decone(e.arrangement, n - 1).affine).group;
        AbelianGroup projective = milnor_h1_projective(e.arrangement, n - 1).group;
        t.check(affine == projective, e.name + ": " + affine.to_string() + " vs " + projective.to_string());
        if (n > 6)
            continue;
        for (int inf = 0; inf < n - 1; ++inf) {
            AbelianGroup other = milnor_h1(decone(e.arrangement, inf).affine).group;
            t.check(other == affine, e.name + " infinity " + std::to_string(inf));
            ++choices;
        }
    }
    return t.outcome("affine = projective on the corpus; " + std::to_string(choices) +
                     " extra decone choices agree");
}

Outcome identity_check()
{
    Tally t;
    for (const auto& e : corpus()) {
        const int n = static_cast<int>(e.arrangement.size());
        Presentation pres =
            free_reduce_and_strip(arvola_randell(shear_to_generic(decone(e.arrangement, n - 1).affine)));
        t.check(chain_condition_holds(build_cover_complex(pres)), e.name + " chain condition");
    }
    std::mt19937_64 rng(20261015);
    for (int i = 0; i < 1000; ++i) {
        const int gens = 1 + i % 5, n = 2 + i % 7;
        Word w = oracle::random_word(rng, gens, 20);
        t.check(oracle::fox_fundamental_identity(w, gens, n), "Fox identity on " + w.to_string());
    }
    for (int i = 0; i < 200; ++i) {
        IntMatrix m = oracle::random_matrix(rng, 4, 4, 6);
        SmithDecomposition<BigInt> d = smith_decomposition(m);
        std::vector<BigInt> diag;
        for (Index k = 0; k < d.rank; ++k)
            diag.push_back(d.diagonal(k, k));
        bool chain = true;
        for (std::size_t k = 0; k < diag.size(); ++k)
            chain = chain && diag[k] > 0 && (k + 1 == diag.size() || diag[k + 1] % diag[k] == 0);
        t.check(chain, "divisibility chain broken");
        t.check(d.left * m * d.right == d.diagonal, "U A V != D");
        t.check(diag == oracle::invariant_factors_by_minors(m), "minor-gcd oracle disagrees");
    }
    return t.outcome("chain condition on corpus, 1000 Fox identities, 200 SNF oracle checks");
}

Outcome cdo_example_check()
{
    Tally t;
    IncidenceData inc = parse_incidence(cdo_example_incidence);
    CdoBound cdo = cdo_bound(inc, inc.line_count);
    long best = onehyp_bound(inc, 12, 0);
    for (int h = 1; h < 12; ++h)
        best = std::min(best, onehyp_bound(inc, 12, h));
    t.check(cdo.total == 11, "cdo_total = " + std::to_string(cdo.total));
    t.check(best == 13, "one-line best = " + std::to_string(best));
    t.check(!corollary_check(inc, 12).has_value(), "corollary unexpectedly fires");
    return t.outcome("cdo_total = 11, one-line best = 13");
}

Outcome torsion_check()
{
    Tally t;
    long probes = 0;
    for (const auto& e : corpus()) {
        const int n = static_cast<int>(e.arrangement.size());
        std::vector<long> primes = probe_primes(intersection_points(e.arrangement), {});
        H1Result h = milnor_h1(decone(e.arrangement, n - 1).affine, primes);
        for (long p : primes) {
            bool divides = std::any_of(h.group.torsion.begin(), h.group.torsion.end(),
                                       [p](const BigInt& d) { return d % p == 0; });
            t.check(divides == (h.betti_mod.at(p) > h.betti_q), e.name + " p=" + std::to_string(p));
            ++probes;
        }
    }
    return t.outcome(std::to_string(probes) + " (arrangement, prime) probes consistent");
}

Outcome guard_check()
{
    Tally t;
    long fired_count = 0;
    for (const auto& e : corpus()) {
        IncidenceData inc = intersection_points(e.arrangement);
        const int n = inc.line_count;
        if (!one_point_check(inc, n).guarded)
            continue;
        ++fired_count;
        H1Result h = milnor_h1(decone(e.arrangement, n - 1).affine);
        t.check(h.group == free_group(n - 1), e.name + " H1 = " + h.group.to_string());
    }
    for (int n = 3; n <= 10; ++n) {
        const std::string tag = "pencil:" + std::to_string(n);
        OnePointCheck op = one_point_check(intersection_points(pencil(n)), n);
        t.check(op.literal.has_value(), tag + " literal condition silent");
        t.check(op.blocked_by_guard(), tag + " guard did not block");
        Report r = analyze(pencil(n), quick());
        bool noted = std::any_of(r.notes.begin(), r.notes.end(),
                                 [](const std::string& s) { return s.rfind("guard", 0) == 0; });
        t.check(!r.bounds.guard_blocked.empty() && noted, tag + " report does not document the guard");
        t.check(!r.prediction.exact, tag + " exact prediction made");
    }
    return t.outcome("guarded criterion fired on " + std::to_string(fired_count) +
                     " arrangements, all Z^(N-1); guard blocks pencils 3..10");
}

struct Criterion {
    const char* title;
    double budget;
    std::function<Outcome()> body;
};

const std::vector<Criterion>& criteria()
{
    static const std::vector<Criterion> all = {
        {"triangle H1 = Z^2", 1, triangle_check},
        {"near-pencil H1 free of rank N-1", 5, near_pencil_check},
        {"generic H1 free of rank N-1", 30, generic_check},
        {"pencil H1 = Z^((N-1)^2)", 10, pencil_check},
        {"bound sandwich on corpus", 300, sandwich_check},
        {"pipeline and decone independence", 300, equivalence_check},
        {"chain, Fox and SNF identities", 60, identity_check},
        {"synthetic CDO example", 1, cdo_example_check},
        {"torsion consistency", 60, torsion_check},
        {"guarded one-point criterion", 60, guard_check},
    };
    return all;
}

}  // namespace

std::vector<CorpusEntry> corpus()
{
    std::vector<CorpusEntry> out;
    auto add = [&](const std::string& name) { out.push_back({name, preset(name)}); };
    add("triangle");
    for (int n = 3; n <= 10; ++n)
        add("pencil:" + std::to_string(n));
    for (int n = 4; n <= 10; ++n)
        add("nearpencil:" + std::to_string(n));
    for (int n = 4; n <= 8; ++n)
        add("generic:" + std::to_string(n) + ":1");
    add("braid-a3");
    add("parallel-family");
    for (int seed = 1; seed <= 100; ++seed)
        add("random:" + std::to_string(3 + seed % 5) + ":" + std::to_string(seed));
    return out;
}

std::string CriterionResult::line() const
{
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.3f s, budget %g s", seconds, budget);
    std::string status = passed() ? "PASS" : "FAIL";
    return status + " [" + std::to_string(id) + "] " + title + " (" + timing + "): " +
           (correct && seconds > budget ? "over budget; " : "") + detail;
}

CriterionResult run_criterion(int id)
{
    if (id < 1 || id > static_cast<int>(criteria().size()))
        throw std::out_of_range("no acceptance criterion " + std::to_string(id));
    const Criterion& s = criteria()[id - 1];
    CriterionResult r;
    r.id = id;
    r.title = s.title;
    r.budget = s.budget;
    auto start = std::chrono::steady_clock::now();
    try {
        Outcome o = s.body();
        r.correct = o.correct;
        r.detail = o.detail;
    } catch (const std::exception& e) {
        r.correct = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::vector<CriterionResult> run_acceptance()
{
    std::vector<CriterionResult> out;
    for (int id = 1; id <= static_cast<int>(criteria().size()); ++id)
        out.push_back(run_criterion(id));
    return out;
}

}  // namespace milnor
