#include "milnor/oracles.hpp"

#include <functional>

namespace milnor::oracle {

Index rank_gauss(const IntMatrix& m)
{
    Matrix<Rational> a = m.cast<Rational>();
    Index rank = 0;
    for (Index c = 0; c < a.cols() && rank < a.rows(); ++c) {
        Index pivot = -1;
        for (Index i = rank; i < a.rows() && pivot < 0; ++i)
            if (a(i, c) != 0)
                pivot = i;
        if (pivot < 0)
            continue;
        a.row(pivot).swap(a.row(rank));
        for (Index i = rank + 1; i < a.rows(); ++i) {
            if (a(i, c) == 0)
                continue;
            Rational f = a(i, c) / a(rank, c);
            a.row(i) -= f * a.row(rank);
        }
        ++rank;
    }
    return rank;
}

long euler_b1(const CoverComplex& c)
{
    const long r1 = static_cast<long>(rank_gauss(c.d1));
    const long r2 = static_cast<long>(rank_gauss(c.d2));
    const long b0 = static_cast<long>(c.d1.cols()) - r1;
    const long b2 = static_cast<long>(c.d2.rows()) - r2;
    return b0 + b2 - c.euler_characteristic();
}

BigInt det_laplace(const IntMatrix& m)
{
    const Index n = m.rows();
    if (n == 0)
        return 1;
    if (n == 1)
        return m(0, 0);
    BigInt det = 0;
    for (Index j = 0; j < n; ++j) {
        if (m(0, j) == 0)
            continue;
        IntMatrix minor(n - 1, n - 1);
        for (Index i = 1; i < n; ++i)
            for (Index k = 0, col = 0; k < n; ++k)
                if (k != j)
                    minor(i - 1, col++) = m(i, k);
        BigInt term = m(0, j) * det_laplace(minor);
        det += (j % 2 == 0) ? term : BigInt(-term);
    }
    return det;
}

namespace {

void for_each_subset(Index n, Index k, const std::function<void(const std::vector<Index>&)>& f)
{
    std::vector<Index> pick(k);
    std::function<void(Index, Index)> rec = [&](Index pos, Index start) {
        if (pos == k) {
            f(pick);
            return;
        }
        for (Index i = start; i < n; ++i) {
            pick[pos] = i;
            rec(pos + 1, i + 1);
        }
    };
    rec(0, 0);
}

}  // namespace

std::vector<BigInt> invariant_factors_by_minors(const IntMatrix& m)
{
    std::vector<BigInt> factors;
    BigInt previous = 1;
    const Index limit = std::min(m.rows(), m.cols());
    for (Index k = 1; k <= limit; ++k) {
        BigInt g = 0;
        for_each_subset(m.rows(), k, [&](const std::vector<Index>& rows) {
            for_each_subset(m.cols(), k, [&](const std::vector<Index>& cols) {
                IntMatrix sub(k, k);
                for (Index i = 0; i < k; ++i)
                    for (Index j = 0; j < k; ++j)
                        sub(i, j) = m(rows[i], cols[j]);
                g = gcd(g, det_laplace(sub));
            });
        });
        if (g == 0)
            break;
        factors.push_back(g / previous);
        previous = g;
    }
    return factors;
}

AbelianGroup h1_by_cokernel(const CoverComplex& c)
{
    AbelianGroup g;
    const long edges = static_cast<long>(c.d1.rows());
    g.free_rank = edges - static_cast<long>(rank_gauss(c.d1)) - static_cast<long>(rank_gauss(c.d2));
    for (const auto& d : smith_normal_form(c.d2).diagonal)
        if (d > 1)
            g.torsion.push_back(d);
    return g;
}

bool fox_fundamental_identity(const Word& w, int generator_count, int n)
{
    CycElement lhs(n);
    const CycElement x_minus_one = CycElement::monomial(n, 1) - CycElement::monomial(n, 0);
    for (int j = 0; j < generator_count; ++j)
        lhs += fox_derivative(w, j, n) * x_minus_one;
    CycElement rhs = CycElement::monomial(n, phi_degree(w, n)) - CycElement::monomial(n, 0);
    return lhs == rhs;
}

Word random_word(std::mt19937_64& rng, int generator_count, int max_length)
{
    std::uniform_int_distribution<int> length(0, max_length);
    std::uniform_int_distribution<int> gen(0, generator_count - 1);
    std::bernoulli_distribution sign(0.5);
    std::vector<Letter> letters(static_cast<std::size_t>(length(rng)));
    for (auto& l : letters)
        l = {gen(rng), sign(rng) ? 1 : -1};
    return Word(std::move(letters));
}

IntMatrix random_matrix(std::mt19937_64& rng, int max_rows, int max_cols, long bound)
{
    std::uniform_int_distribution<int> rows(1, max_rows), cols(1, max_cols);
    std::uniform_int_distribution<long> entry(-bound, bound);
    IntMatrix m(rows(rng), cols(rng));
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j)
            m(i, j) = entry(rng);
    return m;
}

std::vector<BigInt> naive_diagonal(const IntMatrix& m)
{
    IntMatrix a = m;
    std::vector<BigInt> diag;
    for (Index t = 0; t < std::min(a.rows(), a.cols()); ++t) {
        for (;;) {
            Index pi = -1, pj = -1;
            for (Index i = t; i < a.rows(); ++i)
                for (Index j = t; j < a.cols(); ++j)
                    if (a(i, j) != 0 && (pi < 0 || abs(a(i, j)) < abs(a(pi, pj)))) {
                        pi = i;
                        pj = j;
                    }
            if (pi < 0)
                return diag;
            a.row(pi).swap(a.row(t));
            a.col(pj).swap(a.col(t));
            bool clean = true;
            for (Index i = t + 1; i < a.rows(); ++i) {
                BigInt q = a(i, t) / a(t, t);
                a.row(i) -= q * a.row(t);
                clean = clean && a(i, t) == 0;
            }
            for (Index j = t + 1; j < a.cols(); ++j) {
                BigInt q = a(t, j) / a(t, t);
                a.col(j) -= q * a.col(t);
                clean = clean && a(t, j) == 0;
            }
            if (clean)
                break;
        }
        diag.push_back(abs(a(t, t)));
    }
    return diag;
}

}  // namespace milnor::oracle
