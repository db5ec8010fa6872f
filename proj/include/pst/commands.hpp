#ifndef PST_COMMANDS_HPP
#define PST_COMMANDS_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace pst::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumerical = 3;

/// Runs the command line `args` (without the program name). Subcommands:
/// sweep, series, check, disorder, babinet, replay.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::string engine_version();

}  // namespace pst::cli

#endif  // PST_COMMANDS_HPP
