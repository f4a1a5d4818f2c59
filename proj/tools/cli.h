#ifndef WHITEHEAD_TOOLS_CLI_H_
#define WHITEHEAD_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace whitehead::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitCap = 3;

// Runs the command line `args` (without the program name). Results go to
// `out`; failures go to `err` as a single `error: <kind>: <message>` line.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace whitehead::cli

#endif  // WHITEHEAD_TOOLS_CLI_H_
