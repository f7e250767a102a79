#ifndef DZETA_CLI_HPP
#define DZETA_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace dzeta::cli {

// Exit code contract:
//   0 success / all checks passed
//   2 precondition violation (bad parity, divergent case, bad usage)
//   3 verification failure (an exact check or overlap verdict came back false)
//   4 resource / tolerance failure
inline constexpr int kExitOk = 0;
inline constexpr int kExitPrecondition = 2;
inline constexpr int kExitVerification = 3;
inline constexpr int kExitResource = 4;

// The whole command-line surface, in-process testable.  args excludes the
// program name.  Results go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace dzeta::cli

#endif
