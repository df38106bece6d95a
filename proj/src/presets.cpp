#include "milnor/presets.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace milnor {

namespace {

void require(bool ok, const std::string& what)
{
    if (!ok)
        throw UnknownPreset(what);
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::stringstream in(s);
    for (std::string tok; std::getline(in, tok, sep);)
        out.push_back(tok);
    return out;
}

int to_int(const std::string& s)
{
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    require(used == s.size() && !s.empty(), "bad preset parameter '" + s + "'");
    return v;
}

}  // namespace

Arrangement triangle()
{
    return Arrangement({ProjLine(1, 0, 0), ProjLine(0, 1, 0), ProjLine(0, 0, 1)});
}

Arrangement pencil(int n)
{
    require(n >= 2, "pencil needs at least 2 lines");
    std::vector<ProjLine> lines{ProjLine(1, 0, 0)};
    for (int k = 1; k < n; ++k)
        lines.emplace_back(k, -1, 0);  // y = k x
    return Arrangement(std::move(lines));
}

Arrangement near_pencil(int n)
{
    require(n >= 3, "near-pencil needs at least 3 lines");
    std::vector<ProjLine> lines;
    for (int k = 1; k < n; ++k)
        lines.emplace_back(k, -1, 0);
    lines.emplace_back(0, 0, 1);
    return Arrangement(std::move(lines));
}

Arrangement generic(int n, std::uint64_t seed)
{
    require(n >= 2, "generic arrangement needs at least 2 lines");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> coeff(-20, 20);
    for (int attempt = 0; attempt < 100; ++attempt) {
        std::vector<ProjLine> lines;
        std::set<Triple> seen;
        while (static_cast<int>(lines.size()) < n) {
            Triple t{BigInt(coeff(rng)), BigInt(coeff(rng)), BigInt(coeff(rng))};
            if (t[0] == 0 && t[1] == 0 && t[2] == 0)
                continue;
            ProjLine l(t);
            if (seen.insert(l.coeffs).second)
                lines.push_back(l);
        }
        Arrangement arr(std::move(lines));
        IncidenceData inc = intersection_points(arr);
        if (std::all_of(inc.points.begin(), inc.points.end(),
                        [](const IncidencePoint& p) { return p.multiplicity() == 2; }))
            return arr;
    }
    throw std::runtime_error("no generic arrangement found after 100 attempts");
}

Arrangement braid_a3()
{
    return Arrangement({ProjLine(1, 0, 0), ProjLine(0, 1, 0), ProjLine(0, 0, 1),
                        ProjLine(1, -1, 0), ProjLine(1, 0, -1), ProjLine(0, 1, -1)});
}

Arrangement parallel_family()
{
    std::vector<ProjLine> lines{ProjLine(1, 0, 0), ProjLine(1, 0, -1), ProjLine(0, 0, 1)};
    // y = s (x - 2) for s = 1, 2, 3
    for (long s = 1; s <= 3; ++s)
        lines.emplace_back(s, -1, -2 * s);
    // y - 5 = s (x - 3) for s = -1, -2, -3
    for (long s = -1; s >= -3; --s)
        lines.emplace_back(s, -1, 5 - 3 * s);
    return Arrangement(std::move(lines));
}

Arrangement random_arrangement(int n, std::uint64_t seed)
{
    require(n >= 2, "random arrangement needs at least 2 lines");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> coeff(-2, 2);
    std::vector<ProjLine> lines;
    std::set<Triple> seen;
    while (static_cast<int>(lines.size()) < n) {
        Triple t{BigInt(coeff(rng)), BigInt(coeff(rng)), BigInt(coeff(rng))};
        if (t[0] == 0 && t[1] == 0 && t[2] == 0)
            continue;
        ProjLine l(t);
        if (seen.insert(l.coeffs).second)
            lines.push_back(l);
    }
    return Arrangement(std::move(lines));
}

Arrangement preset(const std::string& spec, std::uint64_t default_seed)
{
    std::vector<std::string> parts = split(spec, ':');
    require(!parts.empty(), "empty preset name");
    const std::string& name = parts[0];
    auto seed_at = [&](std::size_t i) {
        return parts.size() > i ? static_cast<std::uint64_t>(to_int(parts[i])) : default_seed;
    };
    if (name == "triangle" && parts.size() == 1)
        return triangle();
    if (name == "braid-a3" && parts.size() == 1)
        return braid_a3();
    if (name == "parallel-family" && parts.size() == 1)
        return parallel_family();
    if (name == "pencil" && parts.size() == 2)
        return pencil(to_int(parts[1]));
    if (name == "nearpencil" && parts.size() == 2)
        return near_pencil(to_int(parts[1]));
    if (name == "generic" && (parts.size() == 2 || parts.size() == 3))
        return generic(to_int(parts[1]), seed_at(2));
    if (name == "random" && (parts.size() == 2 || parts.size() == 3))
        return random_arrangement(to_int(parts[1]), seed_at(2));
    throw UnknownPreset("unknown preset '" + spec + "'");
}

std::vector<std::string> preset_names()
{
    return {"triangle", "pencil:n", "nearpencil:n", "generic:n:seed", "braid-a3",
            "parallel-family", "random:n:seed"};
}

}  // namespace milnor
