#pragma once

#include <stdexcept>
#include <string>

namespace mideal {

/// Malformed or inconsistent input: dimension mismatch, zero ideal where a
/// nonzero one is required, syntax errors, desk-scale bound violations.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A theorem check was asked to run outside the range where the statement
/// applies (e.g. Skoda with m < n).
class PreconditionError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An internal invariant failed. Always a bug.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

namespace detail {

[[noreturn]] inline void invariant_failed(const std::string &what)
{
    throw InvariantError("internal invariant violated: " + what);
}

inline void ensure(bool cond, const char *what)
{
    if (!cond) {
        invariant_failed(what);
    }
}

} // namespace detail
} // namespace mideal
