#ifndef SYMCA_CLI_HPP
#define SYMCA_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace symca::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitVerifyFailed = 2;

/// Entry point behind the `symca` executable. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symca::cli

#endif  // SYMCA_CLI_HPP
