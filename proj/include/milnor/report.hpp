/**
 * End-to-end analysis of one arrangement and its report.
 *
 * The pipeline is parse -> decone -> shear -> presentation -> cover -> H_1
 * -> bounds -> verdicts. Every run is deterministic in its inputs.
 */
#ifndef MILNOR_REPORT_HPP
#define MILNOR_REPORT_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "milnor/bounds.hpp"
#include "milnor/cover.hpp"
#include "milnor/geometry.hpp"
#include "milnor/presentation.hpp"

namespace milnor {

struct AnalyzeOptions {
    /// Projective input only: line sent to infinity (default: the last).
    std::optional<int> infinity;
    /// Extra primes for torsion probing; the defaults are always included.
    std::vector<long> primes;
    /// Cover degree override. Bounds and predictions are only checked when
    /// the degree equals the number of lines.
    std::optional<int> modulus;
    /// Also build the projective presentation and compare homology.
    bool cross_check_projective = true;
};

struct Verdict {
    std::string name;
    bool passed = true;
    std::string detail;
    friend bool operator==(const Verdict&, const Verdict&) = default;
};

struct PresentationStats {
    int generators = 0;
    int relators = 0;
    long total_length = 0;
    friend bool operator==(const PresentationStats&, const PresentationStats&) = default;
};

struct Report {
    std::string mode;                 // "projective" or "affine"
    std::vector<std::string> lines;   // canonical triples as text
    int infinity = -1;
    int shear = 0;
    int cover_degree = 0;
    std::map<int, int> census;        // multiplicity -> number of points
    PresentationStats presentation;
    AbelianGroup h1;
    long betti_q = 0;
    std::map<long, long> betti_mod;
    BoundReport bounds;
    Prediction prediction;
    std::vector<Verdict> verdicts;
    std::vector<std::string> notes;

    bool all_passed() const;
    const Verdict* verdict(const std::string& name) const;
    friend bool operator==(const Report&, const Report&) = default;
};

/// Torsion-probe primes: 2, 3, 5, 7, 11, every prime factor of N or of a
/// point multiplicity, and the extras.
std::vector<long> probe_primes(const IncidenceData& proj, const std::vector<long>& extra);

/// H_1 of the Milnor fiber through the affine decone presentation.
H1Result milnor_h1(const AffineArrangement& aff, const std::vector<long>& primes = {},
                   SweepOptions sweep = {}, std::optional<int> modulus = {});

/// H_1 of the Milnor fiber through the projective presentation.
H1Result milnor_h1_projective(const Arrangement& arr, int base_line,
                              const std::vector<long>& primes = {}, SweepOptions sweep = {});

Report analyze(const ParsedArrangement& input, const AnalyzeOptions& options = {});

nlohmann::json bounds_to_json(const BoundReport& b);
nlohmann::json prediction_to_json(const Prediction& p);
nlohmann::json to_json(const Report& r);
Report report_from_json(const nlohmann::json& j);
std::string format_report(const Report& r);

}  // namespace milnor

#endif
