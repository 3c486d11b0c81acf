#ifndef LIEDERIV_CLI_HPP
#define LIEDERIV_CLI_HPP

#include <iosfwd>

namespace liederiv::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 2,
    kViolation = 3,    ///< theorem or internal invariant failed; a bug if it ever happens
    kInvalidInput = 4, ///< input is well formed but not a derivation
};

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace liederiv::cli

#endif // LIEDERIV_CLI_HPP
