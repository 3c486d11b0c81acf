#ifndef LIEDERIV_ERRORS_HPP
#define LIEDERIV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace liederiv {

/// Caller passed arguments of the wrong shape (dimension mismatch, bad composition, ...).
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Input is well formed but mathematically invalid (not a derivation, not bracket-closed, ...).
class PreconditionError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An internal identity that should hold by theory failed. Always a bug.
class InvariantViolation : public std::logic_error {
public:
    InvariantViolation(const std::string& what, std::string diagnostics)
        : std::logic_error(what), diagnostics_(std::move(diagnostics)) {}
    explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}

    const std::string& diagnostics() const noexcept { return diagnostics_; }

private:
    std::string diagnostics_;
};

} // namespace liederiv

#endif // LIEDERIV_ERRORS_HPP
