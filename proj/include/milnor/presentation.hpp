/**
 * Free-group words and finite presentations of arrangement complement
 * fundamental groups.
 */
#ifndef MILNOR_PRESENTATION_HPP
#define MILNOR_PRESENTATION_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "milnor/geometry.hpp"

namespace milnor {

struct Letter {
    int generator = 0;
    int exponent = 1;  // +1 or -1
    friend bool operator==(const Letter&, const Letter&) = default;
};

/**
 * A freely reduced word in the generators g_0, g_1, ... Every constructor
 * and operation returns a reduced word.
 */
class Word {
  public:
    Word() = default;
    explicit Word(std::vector<Letter> letters);

    static Word generator(int g) { return Word({{g, 1}}); }

    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    Word inverse() const;
    /// a^b = b^-1 a b.
    Word conjugated_by(const Word& b) const;
    long exponent_sum() const;
    /// Exponent sum of each generator, for generator_count generators.
    std::vector<long> abelianization(int generator_count) const;

    /// Printed with 1-based generator names, e.g. "g1 g2 g1^-1 g2^-1".
    std::string to_string() const;

    friend Word operator*(const Word& u, const Word& v);
    friend bool operator==(const Word&, const Word&) = default;

  private:
    std::vector<Letter> letters_;
};

/// u v u^-1 v^-1
Word commutator(const Word& u, const Word& v);

struct Relator {
    enum class Kind { vertex, projective };
    Word word;
    Kind kind = Kind::vertex;
    /// Sweep position of the vertex (0 = rightmost) and the relator's index
    /// k in 0..m-2 among that vertex's relators; -1 for the projective one.
    int vertex = -1;
    int index = -1;
    friend bool operator==(const Relator&, const Relator&) = default;
};

enum class PresentationKind { affine_decone, projective };

struct Presentation {
    int generator_count = 0;
    std::vector<Relator> relators;
    PresentationKind kind = PresentationKind::affine_decone;
    /// Degree of the cyclic cover; every generator maps to 1 in Z/phi_modulus.
    int phi_modulus = 1;

    std::size_t total_length() const;
    friend bool operator==(const Presentation&, const Presentation&) = default;
};

class NonGenericError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

struct SweepOptions {
    /// Order the lines at each vertex by descending instead of ascending
    /// slope. Gives the presentation of the mirror image arrangement.
    bool reverse_slope_order = false;
};

/**
 * Presentation of pi_1 of the affine complement, one generator per line
 * (the meridian at its rightmost ray) and m - 1 commutation relators per
 * vertex of multiplicity m.
 *
 * Vertices are visited in decreasing x. At a vertex the incident lines are
 * ordered by ascending slope, so a_1 .. a_m run bottom to top just right of
 * the vertex, and with their current meridian words W_1 .. W_m the vertex
 * contributes
 *
 *     [W_m, W_{m-1} ... W_1], [W_m W_{m-1}, W_{m-2} ... W_1], ...,
 *     [W_m ... W_2, W_1].
 *
 * Continuing to the left, W_i becomes W_i conjugated by W_{i-1} ... W_1
 * for 1 < i < m; W_1 and W_m pass through unchanged.
 *
 * Throws NonGenericError unless the input has no vertical line and no two
 * vertices with equal x; run shear_to_generic first.
 */
Presentation arvola_randell(const AffineArrangement& aff, SweepOptions options = {});

/**
 * Presentation with one generator per projective line: the lines are
 * viewed in an affine chart whose line at infinity is an auxiliary line in
 * general position (seeded from `base_line`), so every intersection point
 * of the arrangement contributes its commutation relators. The relation
 * killing the auxiliary line's meridian is the product of all generators,
 * ordered top to bottom at the right end of the sweep.
 */
Presentation projective_presentation(const Arrangement& arr, int base_line,
                                     SweepOptions options = {});

/// The auxiliary line used by projective_presentation.
ProjLine auxiliary_line(const Arrangement& arr, int base_line);

/**
 * Freely reduce every relator, strip conjugating prefixes w r w^-1 -> r
 * from relators with exponent sum divisible by the cover degree, and drop
 * empty relators. The cover chain complex is unchanged up to reordering of
 * 2-cells.
 */
Presentation free_reduce_and_strip(const Presentation& pres);

/// "gens: k" followed by one relator per line.
std::string format_presentation(const Presentation& pres);

}  // namespace milnor

#endif
