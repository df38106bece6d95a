#include "milnor/bounds.hpp"

#include <algorithm>
#include <numeric>
#include <regex>
#include <set>
#include <sstream>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/connected_components.hpp>

namespace milnor {

namespace {

bool harmless(int m, int n)
{
    return m == 2 || std::gcd(m, n) == 1;
}

void check_line(const IncidenceData& inc, int line)
{
    if (line < 0 || line >= inc.line_count)
        throw std::out_of_range("line index " + std::to_string(line) + " out of range");
}

}  // namespace

long onehyp_bound(const IncidenceData& inc, int n, int line)
{
    check_line(inc, line);
    long bound = n - 1;
    for (int p : inc.per_line[line]) {
        long m = inc.points[p].multiplicity();
        bound += (m - 2) * (std::gcd(m, static_cast<long>(n)) - 1);
    }
    return bound;
}

std::optional<int> corollary_check(const IncidenceData& inc, int n)
{
    for (int h = 0; h < inc.line_count; ++h) {
        const auto& pts = inc.per_line[h];
        if (std::all_of(pts.begin(), pts.end(),
                        [&](int p) { return harmless(inc.points[p].multiplicity(), n); }))
            return h;
    }
    return std::nullopt;
}

OnePointCheck one_point_check(const IncidenceData& inc, int n)
{
    OnePointCheck out;
    for (int h = 0; h < inc.line_count; ++h) {
        int offending = -1, count = 0;
        for (int p : inc.per_line[h])
            if (!harmless(inc.points[p].multiplicity(), n)) {
                offending = p;
                ++count;
            }
        if (count != 1)
            continue;
        if (!out.literal)
            out.literal = OnePointWitness{h, offending};
        if (!out.guarded && inc.points[offending].multiplicity() < n)
            out.guarded = OnePointWitness{h, offending};
    }
    return out;
}

std::optional<Bipartition> oka_sakamoto_check(const IncidenceData& affine)
{
    const int n = affine.line_count;
    if (n < 2)
        return std::nullopt;
    using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
    Graph conflicts(n);

    std::vector<std::vector<bool>> meet(n, std::vector<bool>(n, false));
    for (const auto& p : affine.points) {
        for (std::size_t i = 0; i < p.incident.size(); ++i)
            for (std::size_t j = i + 1; j < p.incident.size(); ++j) {
                int a = p.incident[i], b = p.incident[j];
                meet[a][b] = meet[b][a] = true;
                if (p.multiplicity() >= 3)
                    boost::add_edge(a, b, conflicts);
            }
    }
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (!meet[a][b])
                boost::add_edge(a, b, conflicts);

    std::vector<int> component(n);
    int count = boost::connected_components(conflicts, component.data());
    if (count < 2)
        return std::nullopt;
    Bipartition split;
    for (int l = 0; l < n; ++l)
        (component[l] == component[0] ? split.a : split.b).push_back(l);
    return split;
}

CdoBound cdo_bound(const IncidenceData& inc, int n)
{
    CdoBound out;
    out.total = n - 1;
    for (int k = 1; k < n; ++k) {
        long best = -1;
        for (int h = 0; h < inc.line_count; ++h) {
            long sum = 0;
            for (int p : inc.per_line[h]) {
                long m = inc.points[p].multiplicity();
                if (m > 2 && (static_cast<long>(k) * m) % n == 0)
                    sum += m - 2;
            }
            if (best < 0 || sum < best)
                best = sum;
        }
        out.per_k.push_back(std::max(best, 0L));
        out.total += out.per_k.back();
    }
    return out;
}

bool verify_witness(const Witness& w, const IncidenceData& proj, int n)
{
    if (w.criterion == "corollary") {
        if (w.line < 0 || w.line >= proj.line_count)
            return false;
        for (int p : proj.per_line[w.line])
            if (!harmless(proj.points[p].multiplicity(), n))
                return false;
        return true;
    }
    if (w.criterion == "one_point") {
        if (w.line < 0 || w.line >= proj.line_count || w.point < 0 ||
            w.point >= static_cast<int>(proj.points.size()))
            return false;
        const auto& on_line = proj.per_line[w.line];
        if (std::find(on_line.begin(), on_line.end(), w.point) == on_line.end())
            return false;
        int m = proj.points[w.point].multiplicity();
        if (m <= 2 || std::gcd(m, n) == 1 || m >= n)
            return false;
        for (int p : on_line)
            if (p != w.point && !harmless(proj.points[p].multiplicity(), n))
                return false;
        return true;
    }
    if (w.criterion == "oka_sakamoto") {
        if (w.infinity_line < 0 || w.infinity_line >= proj.line_count)
            return false;
        IncidenceData aff = decone_incidence(proj, w.infinity_line);
        std::vector<int> all = w.split.a;
        all.insert(all.end(), w.split.b.begin(), w.split.b.end());
        std::sort(all.begin(), all.end());
        std::vector<int> expected(aff.line_count);
        std::iota(expected.begin(), expected.end(), 0);
        if (w.split.a.empty() || w.split.b.empty() || all != expected)
            return false;
        for (int a : w.split.a)
            for (int b : w.split.b) {
                bool ordinary = false;
                for (int p : aff.per_line[a]) {
                    const auto& inc = aff.points[p].incident;
                    if (std::binary_search(inc.begin(), inc.end(), b))
                        ordinary = aff.points[p].multiplicity() == 2;
                }
                if (!ordinary)
                    return false;
            }
        return true;
    }
    return false;
}

BoundReport evaluate_bounds(const IncidenceData& proj)
{
    if (!proj.projective)
        throw std::invalid_argument("bounds need projective incidence data");
    const int n = proj.line_count;
    BoundReport r;
    r.lower_bound = n - 1;
    for (int h = 0; h < n; ++h)
        r.onehyp_per_line.push_back(onehyp_bound(proj, n, h));
    r.onehyp_best = *std::min_element(r.onehyp_per_line.begin(), r.onehyp_per_line.end());
    CdoBound cdo = cdo_bound(proj, n);
    r.cdo_per_k = cdo.per_k;
    r.cdo_total = cdo.total;

    if (auto h = corollary_check(proj, n)) {
        Witness w;
        w.criterion = "corollary";
        w.line = *h;
        r.applicable.push_back(w);
    }
    OnePointCheck op = one_point_check(proj, n);
    if (op.guarded) {
        Witness w;
        w.criterion = "one_point";
        w.line = op.guarded->line;
        w.point = op.guarded->point;
        r.applicable.push_back(w);
    }
    for (int h = 0; h < n; ++h) {
        int offending = -1, count = 0;
        for (int p : proj.per_line[h])
            if (!harmless(proj.points[p].multiplicity(), n)) {
                offending = p;
                ++count;
            }
        if (count == 1 && proj.points[offending].multiplicity() >= n)
            r.guard_blocked.push_back(h);
    }
    for (int inf = 0; inf < n; ++inf) {
        if (auto split = oka_sakamoto_check(decone_incidence(proj, inf))) {
            Witness w;
            w.criterion = "oka_sakamoto";
            w.infinity_line = inf;
            w.split = *split;
            r.applicable.push_back(w);
            break;
        }
    }
    return r;
}

Prediction predict(const BoundReport& report, int n)
{
    Prediction p;
    p.lower = report.lower_bound;
    p.upper = std::min(report.onehyp_best, report.cdo_total);
    if (!report.applicable.empty())
        p.exact = AbelianGroup{n - 1, {}};
    return p;
}

bool is_complete_projective(const IncidenceData& inc)
{
    const int n = inc.line_count;
    std::vector<std::vector<int>> seen(n, std::vector<int>(n, 0));
    for (const auto& p : inc.points)
        for (std::size_t i = 0; i < p.incident.size(); ++i)
            for (std::size_t j = i + 1; j < p.incident.size(); ++j)
                ++seen[p.incident[i]][p.incident[j]];
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (seen[a][b] != 1)
                return false;
    return true;
}

IncidenceData parse_incidence(std::string_view text)
{
    static const std::regex header(R"(^incidence\s+N=([0-9]+)$)");
    static const std::regex row(R"(^m=([0-9]+)\s+lines=([0-9]+(,[0-9]+)*)$)");
    std::istringstream in{std::string(text)};
    std::string raw;
    IncidenceData inc;
    inc.projective = true;
    bool have_header = false;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = raw.substr(0, raw.find('#'));
        line.erase(0, line.find_first_not_of(" \t\r"));
        line.erase(line.find_last_not_of(" \t\r") + 1);
        if (line.empty())
            continue;
        std::smatch m;
        const std::string where = "line " + std::to_string(line_no) + ": ";
        if (!have_header) {
            if (!std::regex_match(line, m, header))
                throw ParseError(where + "expected 'incidence N=<int>' header");
            inc.line_count = std::stoi(m[1].str());
            if (inc.line_count < 2)
                throw ParseError(where + "fewer than 2 lines");
            have_header = true;
            continue;
        }
        if (!std::regex_match(line, m, row))
            throw ParseError(where + "expected 'm=<int> lines=<i,j,...>'");
        IncidencePoint p{{BigInt(0), BigInt(0), BigInt(0)}, {}};
        std::stringstream list(m[2].str());
        for (std::string tok; std::getline(list, tok, ',');) {
            int l = std::stoi(tok);
            if (l >= inc.line_count)
                throw ParseError(where + "line index " + tok + " out of range");
            p.incident.push_back(l);
        }
        std::sort(p.incident.begin(), p.incident.end());
        if (std::adjacent_find(p.incident.begin(), p.incident.end()) != p.incident.end())
            throw ParseError(where + "repeated line index");
        if (p.multiplicity() != std::stoi(m[1].str()))
            throw ParseError(where + "m does not match the number of lines");
        if (p.multiplicity() < 2)
            throw ParseError(where + "a multiple point needs at least two lines");
        inc.points.push_back(std::move(p));
    }
    if (!have_header)
        throw ParseError("missing 'incidence N=<int>' header");
    // Pairs not covered by a listed point meet in a double point.
    const int n = inc.line_count;
    std::vector<std::vector<int>> seen(n, std::vector<int>(n, 0));
    for (const auto& p : inc.points)
        for (std::size_t i = 0; i < p.incident.size(); ++i)
            for (std::size_t j = i + 1; j < p.incident.size(); ++j)
                if (++seen[p.incident[i]][p.incident[j]] > 1)
                    throw ParseError("lines " + std::to_string(p.incident[i]) + " and " +
                                     std::to_string(p.incident[j]) + " meet in more than one point");
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (seen[a][b] == 0)
                inc.points.push_back({{BigInt(0), BigInt(0), BigInt(0)}, {a, b}});
    finalize_incidence(inc);
    return inc;
}

std::string format_incidence(const IncidenceData& inc)
{
    std::string out = "incidence N=" + std::to_string(inc.line_count) + "\n";
    for (const auto& p : inc.points) {
        out += "m=" + std::to_string(p.multiplicity()) + " lines=";
        for (std::size_t i = 0; i < p.incident.size(); ++i)
            out += (i ? "," : "") + std::to_string(p.incident[i]);
        out += "\n";
    }
    return out;
}

}  // namespace milnor
