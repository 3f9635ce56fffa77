#ifndef POLYZETA_CLI_HPP
#define POLYZETA_CLI_HPP

#include <ostream>

namespace polyzeta {

// Exit codes of the command-line tool.
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitRefused = 2;

// Entry point of `polyzeta <np|fan|nondeg|poles|zeta|analyze> <polynomial> -n <dim> ...`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace polyzeta

#endif
