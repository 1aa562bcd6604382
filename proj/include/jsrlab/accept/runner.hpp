#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace jsrlab::accept {

/// One acceptance criterion: an end-to-end property of the library checked at
/// its stated tolerance. `detail` is deterministic for a fixed seed (timing
/// never goes into it) so emitted reports stay byte-stable.
struct CriterionResult {
    int id = 0;
    std::string label;
    bool pass = false;
    std::string detail; // "<counts / bounds reached>" or "<file:line> <what failed>"
};

struct AcceptanceOptions {
    unsigned seed = 20240811;
};

/// Runs the full criteria list in order. Never throws: a criterion that
/// raises records the exception text and fails.
std::vector<CriterionResult> run_criteria(const AcceptanceOptions& opt = {});

/// Prints one "[PASS]/[FAIL] criterion N: label -- detail" line per criterion
/// to `out` and returns the number of failures.
int run_acceptance(std::ostream& out, const AcceptanceOptions& opt = {});

} // namespace jsrlab::accept
