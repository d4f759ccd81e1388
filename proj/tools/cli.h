// The `expertise` command-line tool, callable in-process.
//
// Exit codes: 0 true/ok/no countermodel, 1 false/mismatch/countermodel/bad
// proof, 2 usage, parse or load errors.

#ifndef EXPERTISE_TOOLS_CLI_H_
#define EXPERTISE_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace expertise::cli {

inline constexpr int kExitTrue = 0;
inline constexpr int kExitFalse = 1;
inline constexpr int kExitError = 2;

// args excludes the program name.
int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace expertise::cli

#endif  // EXPERTISE_TOOLS_CLI_H_
