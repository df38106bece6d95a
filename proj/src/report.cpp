#include "milnor/report.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace milnor {

using nlohmann::json;

bool Report::all_passed() const
{
    return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.passed; });
}

const Verdict* Report::verdict(const std::string& name) const
{
    for (const auto& v : verdicts)
        if (v.name == name)
            return &v;
    return nullptr;
}

std::vector<long> probe_primes(const IncidenceData& proj, const std::vector<long>& extra)
{
    std::set<long> primes{2, 3, 5, 7, 11};
    auto add_factors = [&](long v) {
        for (long d = 2; d * d <= v; ++d)
            while (v % d == 0) {
                primes.insert(d);
                v /= d;
            }
        if (v > 1)
            primes.insert(v);
    };
    add_factors(proj.line_count);
    for (const auto& p : proj.points)
        add_factors(p.multiplicity());
    for (long p : extra) {
        if (!is_prime(p))
            throw std::invalid_argument(std::to_string(p) + " is not prime");
        primes.insert(p);
    }
    return {primes.begin(), primes.end()};
}

H1Result milnor_h1(const AffineArrangement& aff, const std::vector<long>& primes, SweepOptions sweep,
                   std::optional<int> modulus)
{
    Presentation pres = free_reduce_and_strip(arvola_randell(shear_to_generic(aff), sweep));
    return h1_of_cover(build_cover_complex(pres, modulus), primes);
}

H1Result milnor_h1_projective(const Arrangement& arr, int base_line, const std::vector<long>& primes,
                              SweepOptions sweep)
{
    Presentation pres = free_reduce_and_strip(projective_presentation(arr, base_line, sweep));
    return h1_of_cover(build_cover_complex(pres), primes);
}

namespace {

bool divides_torsion(const AbelianGroup& g, long p)
{
    return std::any_of(g.torsion.begin(), g.torsion.end(),
                       [p](const BigInt& t) { return t % p == 0; });
}

}  // namespace

Report analyze(const ParsedArrangement& input, const AnalyzeOptions& options)
{
    Report r;
    Arrangement proj;
    AffineArrangement aff;
    if (const auto* arr = std::get_if<Arrangement>(&input)) {
        const int count = static_cast<int>(arr->size());
        r.mode = "projective";
        r.infinity = options.infinity.value_or(count - 1);
        if (r.infinity < 0 || r.infinity >= count)
            throw std::out_of_range("infinity line index out of range");
        proj = *arr;
        aff = decone(proj, r.infinity).affine;
        for (const auto& l : arr->lines())
            r.lines.push_back(format_triple(l.coeffs));
    } else {
        aff = std::get<AffineArrangement>(input);
        r.mode = "affine";
        proj = cone(aff);
        r.infinity = static_cast<int>(proj.size()) - 1;
        for (const auto& l : aff.lines())
            r.lines.push_back(format_triple(l.coeffs));
    }
    const int lines = static_cast<int>(proj.size());
    const int n = options.modulus.value_or(lines);
    r.cover_degree = n;

    IncidenceData inc = intersection_points(proj);
    for (const auto& p : inc.points)
        ++r.census[p.multiplicity()];

    AffineArrangement swept = shear_to_generic(aff);
    r.shear = swept.shear();
    Presentation pres = free_reduce_and_strip(arvola_randell(swept));
    r.presentation = {pres.generator_count, static_cast<int>(pres.relators.size()),
                      static_cast<long>(pres.total_length())};

    std::vector<long> primes = probe_primes(inc, options.primes);
    CoverComplex cover = build_cover_complex(pres, n);
    H1Result h1 = h1_of_cover(cover, primes);
    r.h1 = h1.group;
    r.betti_q = h1.betti_q;
    r.betti_mod = h1.betti_mod;

    r.bounds = evaluate_bounds(inc);
    r.prediction = predict(r.bounds, lines);

    auto verdict = [&](std::string name, bool ok, std::string detail) {
        r.verdicts.push_back({std::move(name), ok, std::move(detail)});
    };

    verdict("chain_condition", chain_condition_holds(cover), "d1 after d2 vanishes");
    {
        long chi = cover.euler_characteristic();
        long from_betti = h1.b0 - h1.betti_q + h1.b2;
        verdict("euler_characteristic", chi == from_betti,
                "chi = " + std::to_string(chi) + ", b0 - b1 + b2 = " + std::to_string(from_betti));
    }
    verdict("connected", h1.b0 == 1, "b0 = " + std::to_string(h1.b0));
    verdict("rational_rank", h1.group.free_rank == h1.betti_q,
            "rank " + std::to_string(h1.group.free_rank) + ", b1(Q) " + std::to_string(h1.betti_q));
    {
        bool ok = true;
        std::string detail;
        for (long p : primes) {
            bool torsion = divides_torsion(h1.group, p);
            bool jump = h1.betti_mod.at(p) > h1.betti_q;
            ok = ok && torsion == jump;
            detail += (detail.empty() ? "" : ", ") + std::string("p=") + std::to_string(p) + ":" +
                      std::to_string(h1.betti_mod.at(p));
        }
        verdict("torsion_consistency", ok, detail);
    }

    if (n == lines) {
        verdict("lower_bound", h1.betti_q >= r.prediction.lower,
                std::to_string(r.prediction.lower) + " <= " + std::to_string(h1.betti_q));
        bool ok = h1.betti_q <= r.prediction.upper;
        for (const auto& [p, b] : h1.betti_mod)
            ok = ok && b <= r.prediction.upper;
        verdict("upper_bound", ok, "every b1 <= " + std::to_string(r.prediction.upper));
        if (r.prediction.exact)
            verdict("exact_prediction", h1.group == *r.prediction.exact,
                    "predicted " + r.prediction.exact->to_string() + ", computed " + h1.group.to_string());
        bool witnesses = std::all_of(r.bounds.applicable.begin(), r.bounds.applicable.end(),
                                     [&](const Witness& w) { return verify_witness(w, inc, lines); });
        verdict("witnesses", witnesses, std::to_string(r.bounds.applicable.size()) + " checked");
        if (options.cross_check_projective) {
            H1Result other = milnor_h1_projective(proj, r.infinity, {});
            verdict("pipeline_equivalence", other.group == h1.group,
                    "projective presentation gives " + other.group.to_string());
        }
        if (h1.betti_q == lines - 1)
            r.notes.push_back("erratum: the lower bound on b1(F) is N-1 = b1 of the deconed complement; "
                              "a lower bound of N would be violated here");
        if (lines == 3 && r.census == std::map<int, int>{{2, 3}})
            r.notes.push_back("erratum: for the coordinate triangle xyz the cover is a 3-fold cover of a "
                              "torus, so H1(F;Z) = Z^2 (chi = 0, b2 = 1), not Z^3");
        if (!r.bounds.guard_blocked.empty()) {
            std::string ids;
            for (int h : r.bounds.guard_blocked)
                ids += (ids.empty() ? "" : ",") + std::to_string(h);
            r.notes.push_back("guard: one-point criterion holds literally on line(s) " + ids +
                              ", but the offending point lies on every line (m_v = N); "
                              "no exact prediction is made from it");
        }
    } else {
        r.notes.push_back("cover degree " + std::to_string(n) + " differs from N = " +
                          std::to_string(lines) + "; bounds and predictions not checked");
    }
    return r;
}

namespace {

json big_to_json(const BigInt& v)
{
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return v.convert_to<std::int64_t>();
    return v.str();
}

BigInt big_from_json(const json& j)
{
    if (j.is_string())
        return BigInt(j.get<std::string>());
    return BigInt(j.get<std::int64_t>());
}

json group_to_json(const AbelianGroup& g)
{
    json t = json::array();
    for (const auto& v : g.torsion)
        t.push_back(big_to_json(v));
    return {{"rank", g.free_rank}, {"torsion", t}};
}

AbelianGroup group_from_json(const json& j)
{
    AbelianGroup g;
    g.free_rank = j.at("rank").get<long>();
    for (const auto& t : j.at("torsion"))
        g.torsion.push_back(big_from_json(t));
    return g;
}

}  // namespace

json bounds_to_json(const BoundReport& b)
{
    json applicable = json::array();
    for (const auto& w : b.applicable)
        applicable.push_back({{"criterion", w.criterion},
                              {"line", w.line},
                              {"point", w.point},
                              {"infinity_line", w.infinity_line},
                              {"split", {{"a", w.split.a}, {"b", w.split.b}}}});
    return {{"lower_bound", b.lower_bound},
            {"onehyp_per_line", b.onehyp_per_line},
            {"onehyp_best", b.onehyp_best},
            {"cdo_per_k", b.cdo_per_k},
            {"cdo_total", b.cdo_total},
            {"applicable", applicable},
            {"guard_blocked", b.guard_blocked}};
}

json prediction_to_json(const Prediction& p)
{
    return {{"exact", p.exact ? group_to_json(*p.exact) : json(nullptr)},
            {"upper", p.upper},
            {"lower", p.lower}};
}

json to_json(const Report& r)
{
    json j;
    j["input"] = {{"mode", r.mode},
                  {"lines", r.lines},
                  {"infinity", r.infinity},
                  {"shear", r.shear},
                  {"cover_degree", r.cover_degree}};
    json census = json::object();
    for (const auto& [m, c] : r.census)
        census[std::to_string(m)] = c;
    j["incidence"] = {{"census", census}};
    j["presentation"] = {{"generators", r.presentation.generators},
                         {"relators", r.presentation.relators},
                         {"total_length", r.presentation.total_length}};
    j["h1"] = group_to_json(r.h1);
    json mod = json::object();
    for (const auto& [p, b] : r.betti_mod)
        mod[std::to_string(p)] = b;
    j["betti"] = {{"q", r.betti_q}, {"mod", mod}};

    j["bounds"] = bounds_to_json(r.bounds);
    j["prediction"] = prediction_to_json(r.prediction);
    json verdicts = json::array();
    for (const auto& v : r.verdicts)
        verdicts.push_back({{"name", v.name}, {"passed", v.passed}, {"detail", v.detail}});
    j["verdicts"] = verdicts;
    j["notes"] = r.notes;
    return j;
}

Report report_from_json(const json& j)
{
    Report r;
    const json& in = j.at("input");
    r.mode = in.at("mode").get<std::string>();
    r.lines = in.at("lines").get<std::vector<std::string>>();
    r.infinity = in.at("infinity").get<int>();
    r.shear = in.at("shear").get<int>();
    r.cover_degree = in.at("cover_degree").get<int>();
    for (const auto& [m, c] : j.at("incidence").at("census").items())
        r.census[std::stoi(m)] = c.get<int>();
    const json& pres = j.at("presentation");
    r.presentation = {pres.at("generators").get<int>(), pres.at("relators").get<int>(),
                      pres.at("total_length").get<long>()};
    r.h1 = group_from_json(j.at("h1"));
    r.betti_q = j.at("betti").at("q").get<long>();
    for (const auto& [p, b] : j.at("betti").at("mod").items())
        r.betti_mod[std::stol(p)] = b.get<long>();

    const json& b = j.at("bounds");
    r.bounds.lower_bound = b.at("lower_bound").get<long>();
    r.bounds.onehyp_per_line = b.at("onehyp_per_line").get<std::vector<long>>();
    r.bounds.onehyp_best = b.at("onehyp_best").get<long>();
    r.bounds.cdo_per_k = b.at("cdo_per_k").get<std::vector<long>>();
    r.bounds.cdo_total = b.at("cdo_total").get<long>();
    for (const auto& w : b.at("applicable")) {
        Witness wit;
        wit.criterion = w.at("criterion").get<std::string>();
        wit.line = w.at("line").get<int>();
        wit.point = w.at("point").get<int>();
        wit.infinity_line = w.at("infinity_line").get<int>();
        wit.split.a = w.at("split").at("a").get<std::vector<int>>();
        wit.split.b = w.at("split").at("b").get<std::vector<int>>();
        r.bounds.applicable.push_back(std::move(wit));
    }
    r.bounds.guard_blocked = b.at("guard_blocked").get<std::vector<int>>();

    const json& p = j.at("prediction");
    if (!p.at("exact").is_null())
        r.prediction.exact = group_from_json(p.at("exact"));
    r.prediction.upper = p.at("upper").get<long>();
    r.prediction.lower = p.at("lower").get<long>();
    for (const auto& v : j.at("verdicts"))
        r.verdicts.push_back({v.at("name").get<std::string>(), v.at("passed").get<bool>(),
                              v.at("detail").get<std::string>()});
    r.notes = j.at("notes").get<std::vector<std::string>>();
    return r;
}

std::string format_report(const Report& r)
{
    std::ostringstream out;
    out << r.mode << " arrangement of " << r.lines.size() << " lines";
    if (r.mode == "projective")
        out << ", line " << r.infinity << " at infinity";
    out << ", shear t=" << r.shear << "\n";
    for (const auto& l : r.lines)
        out << "  " << l << "\n";
    out << "multiple points:";
    for (const auto& [m, c] : r.census)
        out << " " << c << "x(m=" << m << ")";
    out << "\n";
    out << "presentation: " << r.presentation.generators << " generators, " << r.presentation.relators
        << " relators, total length " << r.presentation.total_length << "\n";
    out << "cover degree: " << r.cover_degree << "\n";
    out << "H1(F;Z) = " << r.h1.to_string() << "\n";
    out << "b1: Q=" << r.betti_q;
    for (const auto& [p, b] : r.betti_mod)
        out << " F" << p << "=" << b;
    out << "\n";
    out << "bounds: lower " << r.prediction.lower << ", one-line best " << r.bounds.onehyp_best
        << ", cdo total " << r.bounds.cdo_total << ", upper " << r.prediction.upper << "\n";
    out << "prediction: " << (r.prediction.exact ? r.prediction.exact->to_string() : std::string("none"));
    for (const auto& w : r.bounds.applicable)
        out << " [" << w.criterion << "]";
    out << "\n";
    for (const auto& v : r.verdicts)
        out << (v.passed ? "  pass " : "  FAIL ") << v.name << ": " << v.detail << "\n";
    for (const auto& note : r.notes)
        out << "note: " << note << "\n";
    return out.str();
}

}  // namespace milnor
