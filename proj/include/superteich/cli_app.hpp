#ifndef SUPERTEICH_CLI_APP_HPP
#define SUPERTEICH_CLI_APP_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace superteich {

/// Runs the command-line front end.  Exit codes: 0 success, 1 domain or
/// invariant failure, 2 I/O or parse failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace superteich

#endif
