#ifndef MILNOR_PRESETS_HPP
#define MILNOR_PRESETS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "milnor/geometry.hpp"

namespace milnor {

class UnknownPreset : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Coordinate triangle xyz.
Arrangement triangle();
// n lines through (0:0:1).
Arrangement pencil(int n);
// n - 1 lines through (0:0:1) and the line z = 0.
Arrangement near_pencil(int n);
// n lines with only double points, seeded rational coefficients.
Arrangement generic(int n, std::uint64_t seed);
// Reflection arrangement of type A3: x, y, z, x-y, x-z, y-z.
Arrangement braid_a3();
// Nine lines: x = 0 and x = 1 meet z = 0 in a triple point; two triples of
// lines through (2, 0) and (3, 5) cross them.
Arrangement parallel_family();
// n lines with small random integer coefficients; frequently non-generic.
Arrangement random_arrangement(int n, std::uint64_t seed);

/**
 * Resolve "triangle", "pencil:n", "nearpencil:n", "generic:n:seed",
 * "braid-a3", "parallel-family", "random:n:seed". `default_seed` is used by
 * generic/random when the name omits it.
 */
Arrangement preset(const std::string& spec, std::uint64_t default_seed = 1);

std::vector<std::string> preset_names();

}  // namespace milnor

#endif
