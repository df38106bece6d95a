/**
 * Smith normal form and related integer linear algebra.
 *
 * The elimination routines are templates over the scalar so the same code
 * runs on BigInt matrices in the pipeline and on small machine-integer
 * matrices in tests. Matrices act on column vectors throughout this header.
 */
#ifndef MILNOR_SNF_HPP
#define MILNOR_SNF_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "milnor/types.hpp"

namespace milnor {

template <typename Scalar>
struct SmithForm {
    /// Nonzero invariant factors d_1 | d_2 | ... | d_r, all positive.
    std::vector<Scalar> diagonal;
    Index rank() const { return static_cast<Index>(diagonal.size()); }
};

/**
 * Full decomposition left * a * right = diagonal with unimodular left and
 * right. The inverses are tracked alongside so kernels and cokernels can be
 * expressed in either basis without a separate inversion.
 */
template <typename Scalar>
struct SmithDecomposition {
    Matrix<Scalar> left, left_inverse;
    Matrix<Scalar> right, right_inverse;
    Matrix<Scalar> diagonal;
    Index rank = 0;
};

namespace detail {

template <typename Scalar>
Scalar abs_value(const Scalar& s)
{
    return s < 0 ? Scalar(-s) : s;
}

template <typename Scalar>
class Eliminator {
  public:
    Eliminator(Matrix<Scalar> a, bool track) : a_(std::move(a)), track_(track)
    {
        if (track_) {
            u_ = Matrix<Scalar>::Identity(a_.rows(), a_.rows());
            u_inv_ = u_;
            v_ = Matrix<Scalar>::Identity(a_.cols(), a_.cols());
            v_inv_ = v_;
        }
    }

    Index run()
    {
        const Index rows = a_.rows(), cols = a_.cols();
        Index t = 0;
        for (; t < rows && t < cols; ++t) {
            Index pi, pj;
            if (!min_pivot(t, t, rows, t, cols, pi, pj))
                break;
            move_to(t, pi, pj);
            for (;;) {
                bool dirty = false;
                for (Index i = t + 1; i < rows; ++i) {
                    if (a_(i, t) == 0)
                        continue;
                    Scalar q = a_(i, t) / a_(t, t);
                    add_row(i, t, Scalar(-q));
                    dirty = dirty || a_(i, t) != 0;
                }
                for (Index j = t + 1; j < cols; ++j) {
                    if (a_(t, j) == 0)
                        continue;
                    Scalar q = a_(t, j) / a_(t, t);
                    add_col(j, t, Scalar(-q));
                    dirty = dirty || a_(t, j) != 0;
                }
                if (dirty) {
                    // Smallest remainder in row t or column t becomes the pivot.
                    Index bi = t, bj = t;
                    Scalar best = abs_value(a_(t, t));
                    for (Index i = t + 1; i < rows; ++i)
                        if (a_(i, t) != 0 && abs_value(a_(i, t)) < best) {
                            best = abs_value(a_(i, t));
                            bi = i;
                            bj = t;
                        }
                    for (Index j = t + 1; j < cols; ++j)
                        if (a_(t, j) != 0 && abs_value(a_(t, j)) < best) {
                            best = abs_value(a_(t, j));
                            bi = t;
                            bj = j;
                        }
                    move_to(t, bi, bj);
                    continue;
                }
                Index bad = -1;
                for (Index i = t + 1; i < rows && bad < 0; ++i)
                    for (Index j = t + 1; j < cols; ++j)
                        if (a_(i, j) % a_(t, t) != 0) {
                            bad = i;
                            break;
                        }
                if (bad < 0)
                    break;
                add_row(t, bad, Scalar(1));
            }
            if (a_(t, t) < 0)
                negate_row(t);
        }
        return t;
    }

    Matrix<Scalar> a_, u_, u_inv_, v_, v_inv_;

  private:
    bool min_pivot(Index r0, Index c0, Index rows, Index, Index cols, Index& pi, Index& pj) const
    {
        bool found = false;
        Scalar best = 0;
        for (Index i = r0; i < rows; ++i)
            for (Index j = c0; j < cols; ++j) {
                if (a_(i, j) == 0)
                    continue;
                Scalar v = abs_value(a_(i, j));
                if (!found || v < best) {
                    found = true;
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        return found;
    }

    void move_to(Index t, Index i, Index j)
    {
        if (i != t) {
            a_.row(i).swap(a_.row(t));
            if (track_) {
                u_.row(i).swap(u_.row(t));
                u_inv_.col(i).swap(u_inv_.col(t));
            }
        }
        if (j != t) {
            a_.col(j).swap(a_.col(t));
            if (track_) {
                v_.col(j).swap(v_.col(t));
                v_inv_.row(j).swap(v_inv_.row(t));
            }
        }
    }

    // row dst += q * row src
    void add_row(Index dst, Index src, const Scalar& q)
    {
        if (q == 0)
            return;
        a_.row(dst) += q * a_.row(src);
        if (track_) {
            u_.row(dst) += q * u_.row(src);
            u_inv_.col(src) -= q * u_inv_.col(dst);
        }
    }

    // col dst += q * col src
    void add_col(Index dst, Index src, const Scalar& q)
    {
        if (q == 0)
            return;
        a_.col(dst) += q * a_.col(src);
        if (track_) {
            v_.col(dst) += q * v_.col(src);
            v_inv_.row(src) -= q * v_inv_.row(dst);
        }
    }

    void negate_row(Index t)
    {
        a_.row(t) = -a_.row(t);
        if (track_) {
            u_.row(t) = -u_.row(t);
            u_inv_.col(t) = -u_inv_.col(t);
        }
    }

    bool track_;
};

}  // namespace detail

/**
 * Invariant factors of an integer matrix.
 *
 * Pivot rule: the nonzero entry of least absolute value in the active
 * block, ties broken by lowest row then lowest column. Deterministic.
 */
template <typename Scalar>
SmithForm<Scalar> smith_normal_form(const Matrix<Scalar>& m)
{
    detail::Eliminator<Scalar> e(m, false);
    Index r = e.run();
    SmithForm<Scalar> out;
    for (Index i = 0; i < r; ++i)
        out.diagonal.push_back(e.a_(i, i));
    return out;
}

template <typename Scalar>
SmithDecomposition<Scalar> smith_decomposition(const Matrix<Scalar>& m)
{
    detail::Eliminator<Scalar> e(m, true);
    SmithDecomposition<Scalar> out;
    out.rank = e.run();
    out.diagonal = std::move(e.a_);
    out.left = std::move(e.u_);
    out.left_inverse = std::move(e.u_inv_);
    out.right = std::move(e.v_);
    out.right_inverse = std::move(e.v_inv_);
    return out;
}

/// Rank over the rationals.
template <typename Scalar>
Index rank_q(const Matrix<Scalar>& m)
{
    return smith_normal_form(m).rank();
}

bool is_prime(long p);

/// Rank over F_p by modular elimination. Throws std::invalid_argument if p
/// is not a prime below 2^31.
Index rank_mod_p(const IntMatrix& m, long p);

/// Finitely generated abelian group Z^free_rank + (+) Z/t_i.
struct AbelianGroup {
    long free_rank = 0;
    /// Invariant factors > 1, each dividing the next.
    std::vector<BigInt> torsion;

    bool torsion_free() const { return torsion.empty(); }
    std::string to_string() const;
    friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

/**
 * Homology ker d1 / im d2 for boundary maps d1: C_1 -> C_0 and
 * d2: C_2 -> C_1 acting on column vectors, so d1 has one column per
 * 1-cell and d2 one column per 2-cell.
 *
 * A Z-basis of ker d1 is read off a Smith decomposition of d1; the columns
 * of d2 are rewritten in that basis and the resulting matrix is reduced to
 * Smith form. Throws std::invalid_argument unless d1 * d2 = 0.
 */
AbelianGroup quotient(const IntMatrix& d1, const IntMatrix& d2);

/// Sparse triplet text: "rows cols" then one "row col value" per nonzero
/// entry, 0-based, in row-major order.
std::string write_triplets(const IntMatrix& m);
IntMatrix read_triplets(const std::string& text);

}  // namespace milnor

#endif
