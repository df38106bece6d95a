// Acceptance criteria and corpus runs shared by the test suite and `selftest`.
#ifndef MILNOR_CHECKS_HPP
#define MILNOR_CHECKS_HPP

#include <string>
#include <vector>

#include "milnor/geometry.hpp"

namespace milnor {

struct CorpusEntry {
    std::string name;
    Arrangement arrangement;
};

// Named presets followed by 100 seeded random arrangements of 3 to 7 lines.
std::vector<CorpusEntry> corpus();

// The synthetic 12-line incidence with one quadruple and three triple points.
extern const char* const cdo_example_incidence;

struct CriterionResult {
    int id = 0;
    std::string title;
    bool correct = false;
    std::string detail;
    double seconds = 0;
    double budget = 0;

    bool passed() const { return correct && seconds <= budget; }
    std::string line() const;
};

CriterionResult run_criterion(int id);
std::vector<CriterionResult> run_acceptance();

}  // namespace milnor

#endif
