/**
 * Scalar and matrix typedefs shared by every module.
 *
 * All arithmetic in this library is exact: integers are GMP-backed and
 * unbounded, rationals are always stored in lowest terms. Dense matrices
 * are plain Eigen matrices over those scalars, so the usual block, row and
 * column expressions are available.
 */
#ifndef MILNOR_TYPES_HPP
#define MILNOR_TYPES_HPP

#include <Eigen/Dense>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

namespace milnor {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<BigInt>;
using Index = Eigen::Index;

}  // namespace milnor

#endif
