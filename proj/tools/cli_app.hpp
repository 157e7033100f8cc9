#ifndef MONOSEP_CLI_APP_HPP_
#define MONOSEP_CLI_APP_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace monosep::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

/// Runs one CLI invocation. `args` excludes the program name. All output
/// goes to the given streams, so runs are byte-reproducible and testable.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace monosep::cli

#endif  // MONOSEP_CLI_APP_HPP_
