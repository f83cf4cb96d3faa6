#ifndef STRATA_CLI_HPP
#define STRATA_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace strata {

// Full command line surface (subcommands ideal, stratum, eval, verify,
// charts).  args excludes the program name.  Returns the process exit
// code: 0 on success, nonzero on bad input or failed verification.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace strata

#endif
