/**
 * Independent reference computations used to cross-check the main pipeline.
 * Each one takes a different code path from the production routine it checks.
 */
#ifndef MILNOR_ORACLES_HPP
#define MILNOR_ORACLES_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "milnor/cover.hpp"
#include "milnor/presentation.hpp"
#include "milnor/snf.hpp"

namespace milnor::oracle {

/// Rank over Q by rational Gaussian elimination.
Index rank_gauss(const IntMatrix& m);

/// b1 = b0 + b2 - chi with b0, b2 from rank_gauss.
long euler_b1(const CoverComplex& c);

/// Determinant by cofactor expansion; for small matrices only.
BigInt det_laplace(const IntMatrix& m);

/**
 * Invariant factors from gcds of k x k minors: d_k = D_k / D_{k-1}.
 * Exponential in the size; intended for matrices up to 4 x 4.
 */
std::vector<BigInt> invariant_factors_by_minors(const IntMatrix& m);

/// H_1 via coker(d2) in the row convention of CoverComplex: torsion of the
/// cokernel plus rank = nullity(d1) - rank(d2).
AbelianGroup h1_by_cokernel(const CoverComplex& c);

/// Checks sum_j (d w / d g_j) (x - 1) = x^phi(w) - 1 in Z[Z/n].
bool fox_fundamental_identity(const Word& w, int generator_count, int n);

Word random_word(std::mt19937_64& rng, int generator_count, int max_length);

IntMatrix random_matrix(std::mt19937_64& rng, int max_rows, int max_cols, long bound);

/**
 * Diagonal of a deliberately broken diagonalizer that never enforces the
 * divisibility chain. Used as a mutation to prove the oracles notice.
 */
std::vector<BigInt> naive_diagonal(const IntMatrix& m);

}  // namespace milnor::oracle

#endif
