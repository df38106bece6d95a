#include "milnor/geometry.hpp"

#include <algorithm>
#include <map>
#include <regex>
#include <set>
#include <sstream>

namespace milnor {

namespace {

Triple cross(const Triple& u, const Triple& v)
{
    return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

BigInt dot(const Triple& u, const Triple& v)
{
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
}

std::string strip_comment(std::string_view line)
{
    auto hash = line.find('#');
    std::string s(line.substr(0, hash));
    auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos)
        return {};
    auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

}  // namespace

Triple canonical_triple(const RationalTriple& coeffs)
{
    BigInt denominator_lcm = 1;
    for (const auto& c : coeffs)
        denominator_lcm = boost::multiprecision::lcm(denominator_lcm, denominator(c));
    Triple t;
    for (int i = 0; i < 3; ++i) {
        Rational scaled = coeffs[i] * denominator_lcm;
        t[i] = numerator(scaled);
    }
    return canonical_triple(t);
}

Triple canonical_triple(const Triple& coeffs)
{
    BigInt g = 0;
    for (const auto& c : coeffs)
        g = boost::multiprecision::gcd(g, c);
    if (g == 0)
        throw std::invalid_argument("zero triple does not define a line or point");
    Triple t = coeffs;
    int lead = 0;
    while (t[lead] == 0)
        ++lead;
    if (t[lead] < 0)
        g = -abs(g);
    else
        g = abs(g);
    for (auto& c : t)
        c /= g;
    return t;
}

Rational parse_rational(std::string_view token)
{
    static const std::regex pattern(R"(^([+-]?[0-9]+)(/([0-9]+))?$)");
    std::string s(token);
    std::smatch m;
    if (!std::regex_match(s, m, pattern))
        throw ParseError("malformed rational '" + s + "'");
    BigInt num(m[1].str().front() == '+' ? m[1].str().substr(1) : m[1].str());
    BigInt den = 1;
    if (m[3].matched)
        den = BigInt(m[3].str());
    if (den == 0)
        throw ParseError("zero denominator in '" + s + "'");
    return Rational(num, den);
}

std::string format_triple(const Triple& t)
{
    std::ostringstream out;
    out << t[0] << ' ' << t[1] << ' ' << t[2];
    return out.str();
}

bool ProjLine::contains(const Triple& point) const
{
    return dot(coeffs, point) == 0;
}

AffineLine::AffineLine(const RationalTriple& c) : coeffs(canonical_triple(c))
{
    if (coeffs[0] == 0 && coeffs[1] == 0)
        throw std::invalid_argument("affine line needs (a, b) != (0, 0)");
}

AffineLine::AffineLine(const Triple& c) : coeffs(canonical_triple(c))
{
    if (coeffs[0] == 0 && coeffs[1] == 0)
        throw std::invalid_argument("affine line needs (a, b) != (0, 0)");
}

Rational AffineLine::slope() const
{
    return Rational(-coeffs[0], coeffs[1]);
}

Rational AffineLine::y_at(const Rational& x) const
{
    return -(Rational(coeffs[0]) * x + Rational(coeffs[2])) / Rational(coeffs[1]);
}

Arrangement::Arrangement(std::vector<ProjLine> lines) : lines_(std::move(lines))
{
    if (lines_.size() < 2)
        throw std::invalid_argument("an arrangement needs at least two lines");
    std::set<Triple> seen;
    for (std::size_t i = 0; i < lines_.size(); ++i) {
        if (!seen.insert(lines_[i].coeffs).second)
            throw std::invalid_argument("duplicate line " + format_triple(lines_[i].coeffs) +
                                        " at index " + std::to_string(i));
    }
}

AffineArrangement::AffineArrangement(std::vector<AffineLine> lines, int shear)
    : lines_(std::move(lines)), shear_(shear)
{
    if (lines_.empty())
        throw std::invalid_argument("an affine arrangement needs at least one line");
    std::set<Triple> seen;
    for (std::size_t i = 0; i < lines_.size(); ++i) {
        if (!seen.insert(lines_[i].coeffs).second)
            throw std::invalid_argument("duplicate line " + format_triple(lines_[i].coeffs) +
                                        " at index " + std::to_string(i));
    }
}

ParsedArrangement parse_arrangement(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string raw;
    std::string mode;
    std::vector<RationalTriple> rows;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = strip_comment(raw);
        if (line.empty())
            continue;
        if (mode.empty()) {
            if (line != "projective" && line != "affine")
                throw ParseError("line " + std::to_string(line_no) +
                                 ": expected 'projective' or 'affine' header, got '" + line + "'");
            mode = line;
            continue;
        }
        std::istringstream fields(line);
        std::vector<std::string> tokens;
        for (std::string tok; fields >> tok;)
            tokens.push_back(tok);
        if (tokens.size() != 3)
            throw ParseError("line " + std::to_string(line_no) + ": expected three rationals");
        RationalTriple t;
        for (int i = 0; i < 3; ++i) {
            try {
                t[i] = parse_rational(tokens[i]);
            } catch (const ParseError& e) {
                throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
            }
        }
        rows.push_back(t);
    }
    if (mode.empty())
        throw ParseError("missing 'projective' or 'affine' header");
    if (rows.size() < 2)
        throw ParseError("fewer than 2 lines");

    try {
        if (mode == "projective") {
            std::vector<ProjLine> lines;
            for (const auto& r : rows)
                lines.emplace_back(r);
            return Arrangement(std::move(lines));
        }
        std::vector<AffineLine> lines;
        for (const auto& r : rows)
            lines.emplace_back(r);
        return AffineArrangement(std::move(lines));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

std::string format_arrangement(const Arrangement& arr)
{
    std::string out = "projective\n";
    for (const auto& l : arr.lines())
        out += format_triple(l.coeffs) + "\n";
    return out;
}

std::string format_arrangement(const AffineArrangement& aff)
{
    std::string out = "affine\n";
    for (const auto& l : aff.lines())
        out += format_triple(l.coeffs) + "\n";
    return out;
}

void finalize_incidence(IncidenceData& inc)
{
    for (auto& p : inc.points)
        std::sort(p.incident.begin(), p.incident.end());
    std::sort(inc.points.begin(), inc.points.end(),
              [](const IncidencePoint& a, const IncidencePoint& b) { return a.incident < b.incident; });
    inc.per_line.assign(inc.line_count, {});
    for (std::size_t i = 0; i < inc.points.size(); ++i)
        for (int l : inc.points[i].incident)
            inc.per_line[l].push_back(static_cast<int>(i));
}

namespace {

IncidenceData collect(const std::vector<Triple>& lines, bool projective)
{
    std::map<Triple, std::set<int>> by_point;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            Triple p = cross(lines[i], lines[j]);
            if (!projective && p[2] == 0)
                continue;  // parallel in the affine chart
            p = canonical_triple(p);
            by_point[p].insert(static_cast<int>(i));
            by_point[p].insert(static_cast<int>(j));
        }
    }
    IncidenceData inc;
    inc.line_count = static_cast<int>(lines.size());
    inc.projective = projective;
    for (auto& [p, ls] : by_point)
        inc.points.push_back({p, std::vector<int>(ls.begin(), ls.end())});
    finalize_incidence(inc);
    return inc;
}

}  // namespace

IncidenceData intersection_points(const Arrangement& arr)
{
    std::vector<Triple> lines;
    for (const auto& l : arr.lines())
        lines.push_back(l.coeffs);
    return collect(lines, true);
}

IncidenceData intersection_points(const AffineArrangement& aff)
{
    std::vector<Triple> lines;
    for (const auto& l : aff.lines())
        lines.push_back(l.coeffs);
    return collect(lines, false);
}

IncidenceData decone_incidence(const IncidenceData& proj, int infinity)
{
    if (infinity < 0 || infinity >= proj.line_count)
        throw std::out_of_range("infinity line index out of range");
    IncidenceData out;
    out.line_count = proj.line_count - 1;
    out.projective = false;
    auto reindex = [infinity](int l) { return l < infinity ? l : l - 1; };
    for (const auto& p : proj.points) {
        if (std::binary_search(p.incident.begin(), p.incident.end(), infinity))
            continue;
        IncidencePoint q{p.point, {}};
        for (int l : p.incident)
            q.incident.push_back(reindex(l));
        out.points.push_back(std::move(q));
    }
    finalize_incidence(out);
    return out;
}

Decone decone(const Arrangement& arr, int infinity_index)
{
    if (infinity_index < 0 || infinity_index >= static_cast<int>(arr.size()))
        throw std::out_of_range("infinity line index out of range");
    const Triple& ell = arr[infinity_index].coeffs;
    int pivot = 0;
    while (ell[pivot] == 0)
        ++pivot;

    Eigen::Matrix<Rational, 3, 3> T = Eigen::Matrix<Rational, 3, 3>::Zero();
    int row = 0;
    for (int k = 0; k < 3; ++k)
        if (k != pivot)
            T(row++, k) = 1;
    for (int k = 0; k < 3; ++k)
        T(2, k) = Rational(ell[k]);
    Eigen::Matrix<Rational, 3, 3> T_inv = T.inverse();

    Decone d;
    d.transform = T;
    d.infinity_index = infinity_index;
    std::vector<AffineLine> lines;
    for (int i = 0; i < static_cast<int>(arr.size()); ++i) {
        if (i == infinity_index)
            continue;
        RationalTriple c;
        for (int k = 0; k < 3; ++k) {
            c[k] = 0;
            for (int j = 0; j < 3; ++j)
                c[k] += Rational(arr[i].coeffs[j]) * T_inv(j, k);
        }
        lines.emplace_back(c);
        d.source.push_back(i);
    }
    d.affine = AffineArrangement(std::move(lines));
    return d;
}

Arrangement cone(const AffineArrangement& aff)
{
    std::vector<ProjLine> lines;
    for (const auto& l : aff.lines())
        lines.emplace_back(l.coeffs);
    lines.emplace_back(0, 0, 1);
    return Arrangement(std::move(lines));
}

Triple transform_point(const Eigen::Matrix<Rational, 3, 3>& transform, const Triple& p)
{
    RationalTriple q;
    for (int i = 0; i < 3; ++i) {
        q[i] = 0;
        for (int j = 0; j < 3; ++j)
            q[i] += transform(i, j) * Rational(p[j]);
    }
    return canonical_triple(q);
}

AffineArrangement apply_shear(const AffineArrangement& aff, int t)
{
    std::vector<AffineLine> lines;
    for (const auto& l : aff.lines()) {
        const auto& [a, b, c] = l.coeffs;
        lines.emplace_back(Triple{a, b - a * t, c});
    }
    return AffineArrangement(std::move(lines), t);
}

namespace {

bool generic_for(const AffineArrangement& aff, const IncidenceData& inc, const BigInt& t)
{
    for (const auto& l : aff.lines())
        if (l.coeffs[1] - l.coeffs[0] * t == 0)
            return false;
    std::set<Rational> xs;
    for (const auto& p : inc.points) {
        Rational x(p.point[0] + t * p.point[1], p.point[2]);
        if (!xs.insert(x).second)
            return false;
    }
    return true;
}

}  // namespace

bool is_sweep_generic(const AffineArrangement& aff)
{
    return generic_for(aff, intersection_points(aff), 0);
}

AffineArrangement shear_to_generic(const AffineArrangement& aff)
{
    IncidenceData inc = intersection_points(aff);
    // Each line excludes at most one t and each pair of points at most one.
    const std::size_t excluded = aff.size() + inc.points.size() * inc.points.size();
    for (std::size_t t = 0; t <= excluded; ++t) {
        if (generic_for(aff, inc, BigInt(t))) {
            int shear = static_cast<int>(t);
            if (aff.sweep_generic())
                shear += aff.shear();
            AffineArrangement out = apply_shear(aff, static_cast<int>(t));
            return AffineArrangement(out.lines(), shear);
        }
    }
    throw std::logic_error("no generic shear found");
}

}  // namespace milnor
