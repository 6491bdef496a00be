#ifndef MUIG_CLI_HPP
#define MUIG_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace muig {

inline constexpr const char* kVersion = "1.0.0";

// Runs one command line (without the program name). Returns the exit code:
// 0 success, 1 input error, 2 property violation or failed check.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace muig

#endif // MUIG_CLI_HPP
