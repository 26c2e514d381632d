#ifndef TCKIT_CLI_HPP
#define TCKIT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "tckit/verify.hpp"

namespace tckit::cli {

// Exit codes: 0 success, 1 property failure, 2 parse/usage error,
// 3 capacity error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const ImmersionOracle& oracle);

}  // namespace tckit::cli

#endif
