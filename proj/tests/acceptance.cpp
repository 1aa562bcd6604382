// Acceptance gate: one pass/fail line per criterion, nonzero exit on failure.
#include "jsrlab/accept/runner.hpp"

#include <cstdlib>
#include <iostream>

int main() {
    int failures = jsrlab::accept::run_acceptance(std::cout);
    if (failures > 0) std::exit(1);
    return 0;
}
