#pragma once

#include <stdexcept>
#include <string>

namespace jsrlab {

// Base for all library failures so callers can catch one type at the boundary.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input (bad JSON schema, bad grammar, bad config). `where` is a
// structural position: a JSON path, a token offset, or a config line number.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::string where_)
        : Error(msg + " (at " + where_ + ")"), where(std::move(where_)) {}
    std::string where;
};

// A requested computation would exceed an explicit resource budget.
class BudgetError : public Error {
public:
    explicit BudgetError(const std::string& msg) : Error(msg) {}
};

// Iteration failed to converge; carries the best estimate found so far.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& msg, double partial_)
        : Error(msg), partial(partial_) {}
    double partial;
};

// Precondition violated by otherwise well-formed data (dimension mismatch,
// non-associative structure constants, unscalable set, ...).
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

} // namespace jsrlab
