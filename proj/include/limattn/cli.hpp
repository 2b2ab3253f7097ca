#ifndef LIMATTN_CLI_HPP
#define LIMATTN_CLI_HPP

#include <ostream>

namespace limattn {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 2;
inline constexpr int kExitPrecondition = 3;
inline constexpr int kExitDefect = 4;

// Entry point of the command-line tool; argv[0] is the program name.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace limattn

#endif  // LIMATTN_CLI_HPP
