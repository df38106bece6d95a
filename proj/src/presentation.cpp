#include "milnor/presentation.hpp"

#include <algorithm>
#include <numeric>

namespace milnor {

Word::Word(std::vector<Letter> letters)
{
    letters_.reserve(letters.size());
    for (const Letter& l : letters) {
        if (l.exponent != 1 && l.exponent != -1)
            throw std::invalid_argument("letter exponent must be +1 or -1");
        if (!letters_.empty() && letters_.back().generator == l.generator &&
            letters_.back().exponent == -l.exponent)
            letters_.pop_back();
        else
            letters_.push_back(l);
    }
}

Word Word::inverse() const
{
    std::vector<Letter> out(letters_.rbegin(), letters_.rend());
    for (auto& l : out)
        l.exponent = -l.exponent;
    Word w;
    w.letters_ = std::move(out);
    return w;
}

Word Word::conjugated_by(const Word& b) const
{
    return b.inverse() * *this * b;
}

long Word::exponent_sum() const
{
    long s = 0;
    for (const auto& l : letters_)
        s += l.exponent;
    return s;
}

std::vector<long> Word::abelianization(int generator_count) const
{
    std::vector<long> v(generator_count, 0);
    for (const auto& l : letters_)
        v.at(l.generator) += l.exponent;
    return v;
}

std::string Word::to_string() const
{
    if (letters_.empty())
        return "1";
    std::string out;
    for (const auto& l : letters_) {
        if (!out.empty())
            out += ' ';
        out += "g" + std::to_string(l.generator + 1);
        if (l.exponent < 0)
            out += "^-1";
    }
    return out;
}

Word operator*(const Word& u, const Word& v)
{
    std::vector<Letter> all = u.letters_;
    all.insert(all.end(), v.letters_.begin(), v.letters_.end());
    return Word(std::move(all));
}

Word commutator(const Word& u, const Word& v)
{
    return u * v * u.inverse() * v.inverse();
}

std::size_t Presentation::total_length() const
{
    std::size_t n = 0;
    for (const auto& r : relators)
        n += r.word.size();
    return n;
}

namespace {

struct Vertex {
    Rational x;
    std::vector<int> lines;
};

std::vector<Vertex> sweep_order(const AffineArrangement& aff)
{
    for (const auto& l : aff.lines())
        if (l.is_vertical())
            throw NonGenericError("vertical line " + format_triple(l.coeffs) + "; shear first");
    IncidenceData inc = intersection_points(aff);
    std::vector<Vertex> vertices;
    for (const auto& p : inc.points)
        vertices.push_back({Rational(p.point[0], p.point[2]), p.incident});
    std::sort(vertices.begin(), vertices.end(),
              [](const Vertex& a, const Vertex& b) { return a.x > b.x; });
    for (std::size_t i = 1; i < vertices.size(); ++i)
        if (vertices[i].x == vertices[i - 1].x)
            throw NonGenericError("two vertices share an x-coordinate; shear first");
    return vertices;
}

}  // namespace

Presentation arvola_randell(const AffineArrangement& aff, SweepOptions options)
{
    const int n_lines = static_cast<int>(aff.size());
    Presentation pres;
    pres.generator_count = n_lines;
    pres.kind = PresentationKind::affine_decone;
    pres.phi_modulus = aff.cover_degree();

    std::vector<Word> current(n_lines);
    for (int i = 0; i < n_lines; ++i)
        current[i] = Word::generator(i);

    std::vector<Vertex> vertices = sweep_order(aff);
    for (std::size_t v = 0; v < vertices.size(); ++v) {
        std::vector<int> order = vertices[v].lines;
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            Rational sa = aff[a].slope(), sb = aff[b].slope();
            return options.reverse_slope_order ? sa > sb : sa < sb;
        });
        const int m = static_cast<int>(order.size());

        // top[k] = W_m ... W_{m-k}, bottom[k] = W_{k} ... W_1 (1-based k).
        std::vector<Word> below(m + 1);  // below[k] = W_k ... W_1
        for (int k = 1; k <= m; ++k)
            below[k] = current[order[k - 1]] * below[k - 1];
        Word above;  // W_m ... W_{m-k+1}
        for (int k = 1; k < m; ++k) {
            above = above * current[order[m - k]];
            Relator r;
            r.word = commutator(above, below[m - k]);
            r.kind = Relator::Kind::vertex;
            r.vertex = static_cast<int>(v);
            r.index = k - 1;
            pres.relators.push_back(std::move(r));
        }
        for (int i = 2; i < m; ++i)
            current[order[i - 1]] = current[order[i - 1]].conjugated_by(below[i - 1]);
    }
    return pres;
}

ProjLine auxiliary_line(const Arrangement& arr, int base_line)
{
    if (base_line < 0 || base_line >= static_cast<int>(arr.size()))
        throw std::out_of_range("base line index out of range");
    IncidenceData inc = intersection_points(arr);
    const Triple& base = arr[base_line].coeffs;
    // Each family base + k d shares the point base ∩ d; if that point is a
    // multiple point the whole family fails, so try many directions.
    std::vector<Triple> directions{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}};
    for (long a = -2; a <= 2; ++a)
        for (long b = -2; b <= 2; ++b)
            for (long c = -2; c <= 2; ++c)
                if (a != 0 || b != 0 || c != 0)
                    directions.push_back({a, b, c});
    const long bound = static_cast<long>(inc.points.size() + arr.size()) + 2;
    for (const Triple& d : directions) {
        for (long k = 1; k <= bound; ++k) {
            Triple cand{base[0] + k * d[0], base[1] + k * d[1], base[2] + k * d[2]};
            if (cand[0] == 0 && cand[1] == 0 && cand[2] == 0)
                continue;
            ProjLine line(cand);
            bool ok = std::none_of(arr.lines().begin(), arr.lines().end(),
                                   [&](const ProjLine& l) { return l == line; });
            for (const auto& p : inc.points)
                ok = ok && !line.contains(p.point);
            if (ok)
                return line;
        }
    }
    throw std::logic_error("no auxiliary line in general position found");
}

Presentation projective_presentation(const Arrangement& arr, int base_line, SweepOptions options)
{
    const int n = static_cast<int>(arr.size());
    std::vector<ProjLine> lines = arr.lines();
    lines.push_back(auxiliary_line(arr, base_line));
    Decone d = decone(Arrangement(std::move(lines)), n);
    AffineArrangement chart = shear_to_generic(d.affine);

    Presentation pres = arvola_randell(chart, options);
    pres.kind = PresentationKind::projective;
    pres.phi_modulus = n;

    // At the far right the lines are stacked by slope; parallels cannot
    // occur because the auxiliary line avoids every intersection point.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        Rational sa = chart[a].slope(), sb = chart[b].slope();
        return options.reverse_slope_order ? sa < sb : sa > sb;
    });
    Word product;
    for (int i : order)
        product = product * Word::generator(i);
    Relator p;
    p.word = product;
    p.kind = Relator::Kind::projective;
    pres.relators.push_back(std::move(p));
    return pres;
}

Presentation free_reduce_and_strip(const Presentation& pres)
{
    Presentation out = pres;
    out.relators.clear();
    for (const auto& r : pres.relators) {
        Word w(r.word.letters());
        long sum = w.exponent_sum();
        if (pres.phi_modulus > 0 && sum % pres.phi_modulus == 0) {
            std::vector<Letter> letters = w.letters();
            std::size_t lo = 0, hi = letters.size();
            while (hi - lo >= 2 && letters[lo].generator == letters[hi - 1].generator &&
                   letters[lo].exponent == -letters[hi - 1].exponent) {
                ++lo;
                --hi;
            }
            w = Word(std::vector<Letter>(letters.begin() + lo, letters.begin() + hi));
        }
        if (w.empty())
            continue;
        Relator reduced = r;
        reduced.word = std::move(w);
        out.relators.push_back(std::move(reduced));
    }
    return out;
}

std::string format_presentation(const Presentation& pres)
{
    std::string out = "gens: " + std::to_string(pres.generator_count) + "\n";
    for (const auto& r : pres.relators)
        out += r.word.to_string() + "\n";
    return out;
}

}  // namespace milnor
