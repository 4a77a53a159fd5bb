#ifndef STRINGY_CLI_HPP
#define STRINGY_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace stringy::cli {

// Dispatches one invocation. args excludes the program name. Returns the
// process exit status: 0 success, 2 malformed input, 3 domain errors (not
// canonical, non-Gorenstein, ...). Identical inputs produce byte-identical
// output.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stringy::cli

#endif
