/**
 * Exact real line arrangements in the projective plane and in its affine
 * charts.
 *
 * Lines are stored as primitive integer triples whose first nonzero entry is
 * positive, so two lines are equal exactly when their triples are equal.
 * Intersection points use the same normal form.
 */
#ifndef MILNOR_GEOMETRY_HPP
#define MILNOR_GEOMETRY_HPP

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "milnor/types.hpp"

namespace milnor {

using Triple = std::array<BigInt, 3>;
using RationalTriple = std::array<Rational, 3>;

/// Thrown for malformed arrangement or incidence input.
class ParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/**
 * Scale a nonzero rational triple to a primitive integer triple with
 * positive leading entry. Throws std::invalid_argument on the zero triple.
 */
Triple canonical_triple(const RationalTriple& coeffs);
Triple canonical_triple(const Triple& coeffs);

Rational parse_rational(std::string_view token);
std::string format_triple(const Triple& t);

/// The line {a x + b y + c z = 0} in the projective plane.
struct ProjLine {
    Triple coeffs;

    ProjLine() = default;
    explicit ProjLine(const RationalTriple& c) : coeffs(canonical_triple(c)) {}
    explicit ProjLine(const Triple& c) : coeffs(canonical_triple(c)) {}
    ProjLine(long a, long b, long c) : ProjLine(Triple{BigInt(a), BigInt(b), BigInt(c)}) {}

    bool contains(const Triple& point) const;
    friend bool operator==(const ProjLine&, const ProjLine&) = default;
};

/// The line {a x + b y + c = 0} in the affine plane; (a, b) is never zero.
struct AffineLine {
    Triple coeffs;

    AffineLine() = default;
    explicit AffineLine(const RationalTriple& c);
    explicit AffineLine(const Triple& c);
    AffineLine(long a, long b, long c) : AffineLine(Triple{BigInt(a), BigInt(b), BigInt(c)}) {}

    bool is_vertical() const { return coeffs[1] == 0; }
    /// Slope -a/b; only meaningful for non-vertical lines.
    Rational slope() const;
    /// y-coordinate of the line at the given x; non-vertical lines only.
    Rational y_at(const Rational& x) const;
    friend bool operator==(const AffineLine&, const AffineLine&) = default;
};

/// Ordered list of pairwise distinct projective lines, at least two.
class Arrangement {
  public:
    Arrangement() = default;
    explicit Arrangement(std::vector<ProjLine> lines);

    const std::vector<ProjLine>& lines() const { return lines_; }
    const ProjLine& operator[](std::size_t i) const { return lines_[i]; }
    std::size_t size() const { return lines_.size(); }
    friend bool operator==(const Arrangement&, const Arrangement&) = default;

  private:
    std::vector<ProjLine> lines_;
};

/**
 * Ordered list of pairwise distinct affine lines. The cover degree is the
 * number of lines plus one: the line at infinity is implicit.
 *
 * `shear` records the parameter t of the substitution (x, y) -> (x + t y, y)
 * applied by shear_to_generic, or -1 when the arrangement has not been
 * checked for sweep genericity.
 */
class AffineArrangement {
  public:
    AffineArrangement() = default;
    explicit AffineArrangement(std::vector<AffineLine> lines, int shear = -1);

    const std::vector<AffineLine>& lines() const { return lines_; }
    const AffineLine& operator[](std::size_t i) const { return lines_[i]; }
    std::size_t size() const { return lines_.size(); }
    int cover_degree() const { return static_cast<int>(lines_.size()) + 1; }
    int shear() const { return shear_; }
    bool sweep_generic() const { return shear_ >= 0; }
    friend bool operator==(const AffineArrangement&, const AffineArrangement&) = default;

  private:
    std::vector<AffineLine> lines_;
    int shear_ = -1;
};

using ParsedArrangement = std::variant<Arrangement, AffineArrangement>;

/**
 * Parse the text arrangement format: a `projective` or `affine` header,
 * then one line per row as three rationals `p` or `p/q`. `#` comments run
 * to end of line; blank lines are ignored.
 */
ParsedArrangement parse_arrangement(std::string_view text);
std::string format_arrangement(const Arrangement& arr);
std::string format_arrangement(const AffineArrangement& aff);

struct IncidencePoint {
    /// Projective coordinates (x : y : z), primitive; z = 0 never occurs in
    /// affine mode.
    Triple point;
    /// Sorted indices of the lines through the point.
    std::vector<int> incident;

    int multiplicity() const { return static_cast<int>(incident.size()); }
    friend bool operator==(const IncidencePoint&, const IncidencePoint&) = default;
};

/**
 * Intersection lattice in rank at most two: all multiple points together
 * with, for each line, the indices (into `points`) of the points it carries.
 * Points are sorted by their incident line lists.
 */
struct IncidenceData {
    int line_count = 0;
    bool projective = true;
    std::vector<IncidencePoint> points;
    std::vector<std::vector<int>> per_line;

    friend bool operator==(const IncidenceData&, const IncidenceData&) = default;
};

IncidenceData intersection_points(const Arrangement& arr);
IncidenceData intersection_points(const AffineArrangement& aff);

/// Fill `per_line` and sort points; used by the constructors above and by
/// raw incidence input.
void finalize_incidence(IncidenceData& inc);

/**
 * Combinatorial decone: drop `infinity`, drop every point on it, reindex
 * the remaining lines in order. Pairs that met on the dropped line become
 * parallel, i.e. appear in no point.
 */
IncidenceData decone_incidence(const IncidenceData& proj, int infinity);

/// Result of sending one line to infinity.
struct Decone {
    AffineArrangement affine;
    /// p' = transform * p maps the projective chart onto the new one; the
    /// chosen line becomes {z' = 0}.
    Eigen::Matrix<Rational, 3, 3> transform;
    int infinity_index = -1;
    /// Affine line i comes from projective line source[i].
    std::vector<int> source;
};

Decone decone(const Arrangement& arr, int infinity_index);

/// Re-homogenize and append the line at infinity {z = 0} last.
Arrangement cone(const AffineArrangement& aff);

/// Image of a projective point under a decone transform, normalized.
Triple transform_point(const Eigen::Matrix<Rational, 3, 3>& transform, const Triple& p);

/**
 * Apply the smallest shear t = 0, 1, 2, ... for which no line is vertical
 * and no two intersection points share an x-coordinate. The incidence
 * structure is unchanged; the returned arrangement records t.
 */
AffineArrangement shear_to_generic(const AffineArrangement& aff);

/// Apply (x, y) -> (x + t y, y) to every line.
AffineArrangement apply_shear(const AffineArrangement& aff, int t);

bool is_sweep_generic(const AffineArrangement& aff);

}  // namespace milnor

#endif
