#ifndef MODULI_CLI_HPP
#define MODULI_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace moduli::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCrossCheck = 3;

/// Runs the command line (args excludes the program name). Returns the
/// process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace moduli::cli

#endif
