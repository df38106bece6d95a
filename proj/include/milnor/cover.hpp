/**
 * Cellular chain complex of the cyclic cover of a presentation complex.
 *
 * For a presentation P and the map sending every generator to 1 in Z/n,
 * the n-fold cover K has vertices x^i v, edges x^i g_j running from x^i v
 * to x^{i+1} v, and 2-cells x^i r lifting each relator r. Boundaries of the
 * 2-cells are Fox derivatives evaluated in the group ring Z[x]/(x^n - 1).
 */
#ifndef MILNOR_COVER_HPP
#define MILNOR_COVER_HPP

#include <map>
#include <optional>
#include <vector>

#include "milnor/presentation.hpp"
#include "milnor/snf.hpp"

namespace milnor {

/**
 * Element of Z[x]/(x^n - 1) as an n-tuple: entry i is the coefficient of
 * x^i.
 */
class CycElement {
  public:
    explicit CycElement(int n) : coeffs_(static_cast<std::size_t>(n), BigInt(0))
    {
        if (n < 1)
            throw std::invalid_argument("cyclic group order must be positive");
    }

    /// x^k as a tuple.
    static CycElement monomial(int n, long k);

    int modulus() const { return static_cast<int>(coeffs_.size()); }
    const BigInt& operator[](int i) const { return coeffs_[i]; }
    BigInt& operator[](int i) { return coeffs_[i]; }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    /// x^k . t: entry i moves to position i + k (mod n).
    CycElement shifted(long k) const;
    /// Augmentation: the sum of the entries.
    BigInt at_one() const;

    CycElement& operator+=(const CycElement& o);
    CycElement& operator-=(const CycElement& o);
    friend CycElement operator+(CycElement a, const CycElement& b) { return a += b; }
    friend CycElement operator-(CycElement a, const CycElement& b) { return a -= b; }
    friend CycElement operator*(const CycElement& a, const CycElement& b);
    friend bool operator==(const CycElement&, const CycElement&) = default;

  private:
    std::vector<BigInt> coeffs_;
};

/// Exponent sum of w reduced into [0, n).
int phi_degree(const Word& w, int n);

/**
 * Fox derivative of w with respect to generator j, pushed into Z[Z/n]
 * through the map g -> x. Satisfies d(uv) = du + x^{phi(u)} dv,
 * d(g_j)/dg_j = 1 and d(g_j^-1)/dg_j = -x^{-1}.
 */
CycElement fox_derivative(const Word& w, int generator, int n);

/// Rows are relators, columns generators.
using FoxMatrix = std::vector<std::vector<CycElement>>;

FoxMatrix fox_matrix(const Presentation& pres, int n);

/**
 * Boundary matrices with one row per cell (chains as row vectors):
 *
 *   d2: row r*n + i is the boundary of 2-cell x^i r, column j*n + k is
 *       edge x^k g_j;
 *   d1: row j*n + i is edge x^i g_j with boundary x^{i+1} v - x^i v.
 *
 * So d2 * d1 = 0 as matrices, i.e. d1 after d2 vanishes.
 */
struct CoverComplex {
    int n = 1;
    int generator_count = 0;
    int relator_count = 0;
    IntMatrix d2;
    IntMatrix d1;

    long euler_characteristic() const
    {
        return static_cast<long>(n) * (1 - generator_count + relator_count);
    }
};

/// Cover of degree `modulus` (default: the presentation's phi_modulus).
CoverComplex build_cover_complex(const Presentation& pres, std::optional<int> modulus = {});

bool chain_condition_holds(const CoverComplex& c);

struct H1Result {
    AbelianGroup group;
    long betti_q = 0;
    std::map<long, long> betti_mod;
    /// Betti numbers of the complex in degrees 0 and 2 over Q.
    long b0 = 0, b2 = 0;
};

/// H_1 of the cover with integer coefficients, plus the first betti number
/// over Q and over F_p for every prime in `primes`.
H1Result h1_of_cover(const CoverComplex& c, const std::vector<long>& primes = {});

}  // namespace milnor

#endif
