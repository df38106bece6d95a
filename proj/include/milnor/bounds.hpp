/**
 * Combinatorial bounds on the first homology of the Milnor fiber, computed
 * from incidence data alone, and the exactness criteria that pin it down to
 * Z^{N-1}.
 */
#ifndef MILNOR_BOUNDS_HPP
#define MILNOR_BOUNDS_HPP

#include <optional>
#include <string>
#include <vector>

#include "milnor/geometry.hpp"
#include "milnor/snf.hpp"

namespace milnor {

/// (N - 1) + sum over multiple points v on line H of (m_v - 2)(gcd(m_v, N) - 1).
long onehyp_bound(const IncidenceData& inc, int n, int line);

/// A line all of whose multiple points are double or have multiplicity
/// prime to N.
std::optional<int> corollary_check(const IncidenceData& inc, int n);

struct OnePointWitness {
    int line = -1;
    int point = -1;  // index into IncidenceData::points
    friend bool operator==(const OnePointWitness&, const OnePointWitness&) = default;
};

/**
 * Lines carrying exactly one multiple point v with m_v > 2 and
 * gcd(m_v, N) != 1. `literal` is the first such line; `guarded` the first
 * one whose point also misses some line of the arrangement (m_v < N). A
 * pencil satisfies the literal condition on every line while its first
 * homology has rank (N - 1)^2, so only the guarded witness predicts Z^{N-1}.
 */
struct OnePointCheck {
    std::optional<OnePointWitness> literal;
    std::optional<OnePointWitness> guarded;
    bool blocked_by_guard() const { return literal && !guarded; }
};

OnePointCheck one_point_check(const IncidenceData& inc, int n);

struct Bipartition {
    std::vector<int> a, b;
    friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

/**
 * Split of affine lines into nonempty A, B meeting only in ordinary double
 * points. Lines conflict when parallel or when they share a point of
 * multiplicity at least three; A is the conflict component of line 0 and B
 * everything else. Needs affine incidence data.
 */
std::optional<Bipartition> oka_sakamoto_check(const IncidenceData& affine);

struct CdoBound {
    /// per_k[k - 1] for k = 1 .. N - 1.
    std::vector<long> per_k;
    long total = 0;
};

/**
 * For each 0 < k < N: the minimum over lines H of the sum of (m_x - 2) over
 * points x on H with m_x > 2 and N | k m_x. Total is (N - 1) plus the sum
 * over k.
 */
CdoBound cdo_bound(const IncidenceData& inc, int n);

/// One exactness criterion that fired, with enough data to re-check it.
struct Witness {
    std::string criterion;  // "corollary", "one_point", "oka_sakamoto"
    int line = -1;
    int point = -1;
    int infinity_line = -1;
    Bipartition split;
    friend bool operator==(const Witness&, const Witness&) = default;
};

bool verify_witness(const Witness& w, const IncidenceData& proj, int n);

struct BoundReport {
    long lower_bound = 0;
    std::vector<long> onehyp_per_line;
    long onehyp_best = 0;
    std::vector<long> cdo_per_k;
    long cdo_total = 0;
    std::vector<Witness> applicable;
    /// Lines where the one-point criterion holds literally but the m_v < N
    /// guard blocks it.
    std::vector<int> guard_blocked;
    friend bool operator==(const BoundReport&, const BoundReport&) = default;
};

struct Prediction {
    std::optional<AbelianGroup> exact;
    long upper = 0;
    long lower = 0;
    friend bool operator==(const Prediction&, const Prediction&) = default;
};

/**
 * Evaluate every bound and criterion on projective incidence data. The
 * split criterion is tried on every decone. The upper bound is the smaller
 * of the best single-line bound and the CDO total.
 */
BoundReport evaluate_bounds(const IncidenceData& proj);
Prediction predict(const BoundReport& report, int n);

/**
 * Raw incidence format: a header "incidence N=<int>", then one point per
 * row as "m=<int> lines=<i,j,...>". Pairs of lines not listed together
 * meet in an implicit double point; a pair listed twice is an error.
 */
IncidenceData parse_incidence(std::string_view text);
std::string format_incidence(const IncidenceData& inc);

/// Check that every pair of lines lies on exactly one point.
bool is_complete_projective(const IncidenceData& inc);

}  // namespace milnor

#endif
