#include "milnor/cover.hpp"

namespace milnor {

namespace {

long mod(long a, long n)
{
    long r = a % n;
    return r < 0 ? r + n : r;
}

}  // namespace

CycElement CycElement::monomial(int n, long k)
{
    CycElement e(n);
    e[static_cast<int>(mod(k, n))] = 1;
    return e;
}

CycElement CycElement::shifted(long k) const
{
    const int n = modulus();
    CycElement out(n);
    for (int i = 0; i < n; ++i)
        out[static_cast<int>(mod(i + k, n))] = coeffs_[i];
    return out;
}

BigInt CycElement::at_one() const
{
    BigInt s = 0;
    for (const auto& c : coeffs_)
        s += c;
    return s;
}

CycElement& CycElement::operator+=(const CycElement& o)
{
    if (o.modulus() != modulus())
        throw std::invalid_argument("cyclic group orders differ");
    for (int i = 0; i < modulus(); ++i)
        coeffs_[i] += o.coeffs_[i];
    return *this;
}

CycElement& CycElement::operator-=(const CycElement& o)
{
    if (o.modulus() != modulus())
        throw std::invalid_argument("cyclic group orders differ");
    for (int i = 0; i < modulus(); ++i)
        coeffs_[i] -= o.coeffs_[i];
    return *this;
}

CycElement operator*(const CycElement& a, const CycElement& b)
{
    if (a.modulus() != b.modulus())
        throw std::invalid_argument("cyclic group orders differ");
    const int n = a.modulus();
    CycElement out(n);
    for (int i = 0; i < n; ++i) {
        if (a[i] == 0)
            continue;
        for (int j = 0; j < n; ++j)
            out[(i + j) % n] += a[i] * b[j];
    }
    return out;
}

int phi_degree(const Word& w, int n)
{
    return static_cast<int>(mod(w.exponent_sum(), n));
}

CycElement fox_derivative(const Word& w, int generator, int n)
{
    CycElement d(n);
    long prefix = 0;  // phi of the letters read so far
    for (const auto& l : w.letters()) {
        if (l.generator == generator) {
            if (l.exponent > 0)
                d[static_cast<int>(mod(prefix, n))] += 1;
            else
                d[static_cast<int>(mod(prefix - 1, n))] -= 1;
        }
        prefix += l.exponent;
    }
    return d;
}

FoxMatrix fox_matrix(const Presentation& pres, int n)
{
    FoxMatrix m;
    for (const auto& r : pres.relators) {
        std::vector<CycElement> row;
        for (int j = 0; j < pres.generator_count; ++j)
            row.push_back(fox_derivative(r.word, j, n));
        m.push_back(std::move(row));
    }
    return m;
}

CoverComplex build_cover_complex(const Presentation& pres, std::optional<int> modulus)
{
    const int n = modulus.value_or(pres.phi_modulus);
    if (n < 1)
        throw std::invalid_argument("cover degree must be positive");
    CoverComplex c;
    c.n = n;
    c.generator_count = pres.generator_count;
    c.relator_count = static_cast<int>(pres.relators.size());
    const Index edges = static_cast<Index>(n) * c.generator_count;
    const Index cells = static_cast<Index>(n) * c.relator_count;

    c.d2 = IntMatrix::Zero(cells, edges);
    FoxMatrix fox = fox_matrix(pres, n);
    for (int r = 0; r < c.relator_count; ++r)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < c.generator_count; ++j) {
                CycElement lifted = fox[r][j].shifted(i);
                for (int k = 0; k < n; ++k)
                    c.d2(static_cast<Index>(r) * n + i, static_cast<Index>(j) * n + k) = lifted[k];
            }

    c.d1 = IntMatrix::Zero(edges, n);
    for (int j = 0; j < c.generator_count; ++j)
        for (int i = 0; i < n; ++i) {
            Index e = static_cast<Index>(j) * n + i;
            c.d1(e, (i + 1) % n) += 1;
            c.d1(e, i) -= 1;
        }
    return c;
}

bool chain_condition_holds(const CoverComplex& c)
{
    for (Index r = 0; r < c.d2.rows(); ++r)
        for (Index v = 0; v < c.d1.cols(); ++v) {
            BigInt s = 0;
            for (Index e = 0; e < c.d2.cols(); ++e)
                if (c.d2(r, e) != 0 && c.d1(e, v) != 0)
                    s += c.d2(r, e) * c.d1(e, v);
            if (s != 0)
                return false;
        }
    return true;
}

H1Result h1_of_cover(const CoverComplex& c, const std::vector<long>& primes)
{
    // quotient() works with column vectors.
    IntMatrix d1 = c.d1.transpose();
    IntMatrix d2 = c.d2.transpose();
    H1Result out;
    out.group = quotient(d1, d2);

    const long edges = static_cast<long>(c.d1.rows());
    const long rank_d1 = static_cast<long>(rank_q(c.d1));
    const long rank_d2 = static_cast<long>(rank_q(c.d2));
    out.betti_q = edges - rank_d1 - rank_d2;
    out.b0 = static_cast<long>(c.d1.cols()) - rank_d1;
    out.b2 = static_cast<long>(c.d2.rows()) - rank_d2;
    for (long p : primes)
        out.betti_mod[p] = edges - static_cast<long>(rank_mod_p(c.d1, p)) -
                           static_cast<long>(rank_mod_p(c.d2, p));
    return out;
}

}  // namespace milnor
