#include "milnor/snf.hpp"

#include <sstream>

namespace milnor {

bool is_prime(long p)
{
    if (p < 2)
        return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

Index rank_mod_p(const IntMatrix& m, long p)
{
    if (p >= (1L << 31) || !is_prime(p))
        throw std::invalid_argument(std::to_string(p) + " is not a prime below 2^31");
    const Index rows = m.rows(), cols = m.cols();
    Matrix<long> a(rows, cols);
    for (Index i = 0; i < rows; ++i)
        for (Index j = 0; j < cols; ++j) {
            BigInt r = m(i, j) % p;
            if (r < 0)
                r += p;
            a(i, j) = r.convert_to<long>();
        }

    auto inverse = [p](long x) {
        long result = 1, e = p - 2;
        x %= p;
        while (e > 0) {
            if (e & 1)
                result = result * x % p;
            x = x * x % p;
            e >>= 1;
        }
        return result;
    };

    Index rank = 0;
    for (Index c = 0; c < cols && rank < rows; ++c) {
        Index pivot = -1;
        for (Index i = rank; i < rows; ++i)
            if (a(i, c) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0)
            continue;
        a.row(pivot).swap(a.row(rank));
        long inv = inverse(a(rank, c));
        for (Index j = c; j < cols; ++j)
            a(rank, j) = a(rank, j) * inv % p;
        for (Index i = rank + 1; i < rows; ++i) {
            long f = a(i, c);
            if (f == 0)
                continue;
            for (Index j = c; j < cols; ++j)
                a(i, j) = ((a(i, j) - f * a(rank, j)) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

std::string AbelianGroup::to_string() const
{
    std::ostringstream out;
    bool first = true;
    if (free_rank > 0 || torsion.empty()) {
        out << (free_rank == 0 ? std::string("0") : "Z^" + std::to_string(free_rank));
        first = false;
    }
    for (const auto& t : torsion) {
        if (!first)
            out << " + ";
        out << "Z/" << t;
        first = false;
    }
    return out.str();
}

AbelianGroup quotient(const IntMatrix& d1, const IntMatrix& d2)
{
    if (d1.cols() != d2.rows())
        throw std::invalid_argument("boundary matrices have incompatible shapes");
    for (Index i = 0; i < d1.rows(); ++i)
        for (Index j = 0; j < d2.cols(); ++j) {
            BigInt s = 0;
            for (Index k = 0; k < d1.cols(); ++k)
                if (d1(i, k) != 0 && d2(k, j) != 0)
                    s += d1(i, k) * d2(k, j);
            if (s != 0)
                throw std::invalid_argument("chain condition violated: d1 * d2 != 0");
        }

    SmithDecomposition<BigInt> dec = smith_decomposition(d1);
    const Index kernel_dim = d1.cols() - dec.rank;
    IntMatrix in_kernel_basis = (dec.right_inverse * d2).bottomRows(kernel_dim);

    SmithForm<BigInt> snf = smith_normal_form(in_kernel_basis);
    AbelianGroup g;
    g.free_rank = static_cast<long>(kernel_dim - snf.rank());
    for (const auto& d : snf.diagonal)
        if (d > 1)
            g.torsion.push_back(d);
    return g;
}

std::string write_triplets(const IntMatrix& m)
{
    std::ostringstream out;
    out << m.rows() << ' ' << m.cols() << '\n';
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0)
                out << i << ' ' << j << ' ' << m(i, j) << '\n';
    return out.str();
}

IntMatrix read_triplets(const std::string& text)
{
    std::istringstream in(text);
    Index rows = -1, cols = -1;
    if (!(in >> rows >> cols) || rows < 0 || cols < 0)
        throw std::invalid_argument("triplet matrix: missing 'rows cols' header");
    IntMatrix m = IntMatrix::Zero(rows, cols);
    Index i, j;
    std::string value;
    while (in >> i >> j >> value) {
        if (i < 0 || i >= rows || j < 0 || j >= cols)
            throw std::invalid_argument("triplet matrix: entry out of range");
        m(i, j) = BigInt(value);
    }
    if (!in.eof())
        throw std::invalid_argument("triplet matrix: malformed entry");
    return m;
}

}  // namespace milnor
