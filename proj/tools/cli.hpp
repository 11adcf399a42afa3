#ifndef NSMP_CLI_HPP
#define NSMP_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace nsmp::cli {

/// Runs one subcommand. args excludes the program name.
/// Exit codes: 0 success / predicate true; 1 predicate false (documented per
/// subcommand); 2 usage or parse error; 3 internal size limit.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace nsmp::cli

#endif
