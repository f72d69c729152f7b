#ifndef GRADSEM_ERRORS_HPP
#define GRADSEM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gradsem {

/// Invalid input data: malformed files, broken invariants, bad identifiers.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Lookup of an argument name that is not declared in the framework.
class UnknownArgumentError : public ValidationError {
public:
    explicit UnknownArgumentError(const std::string& name)
        : ValidationError("unknown argument: " + name) {}
};

/// Bisection called with f(alpha) < 0 or f(beta) > 0.
class BracketError : public std::runtime_error {
public:
    explicit BracketError(const std::string& what) : std::runtime_error(what) {}
};

/// Fixed-point iteration exhausted its iteration budget.
class ConvergenceError : public std::runtime_error {
public:
    explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace gradsem

#endif // GRADSEM_ERRORS_HPP
