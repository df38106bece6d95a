// Prints one PASS/FAIL line per acceptance criterion.
#include <iostream>

#include "milnor/checks.hpp"

int main()
{
    bool ok = true;
    for (int id = 1; id <= 10; ++id) {
        milnor::CriterionResult r = milnor::run_criterion(id);
        std::cout << r.line() << std::endl;
        ok = ok && r.passed();
    }
    return ok ? 0 : 1;
}
