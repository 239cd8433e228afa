#ifndef FSG_CLI_HPP
#define FSG_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace fsg {

// Exit codes: 0 success, 1 unreachable or failed verification, 2 usage error,
// 3 state budget exceeded.
int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace fsg

#endif  // FSG_CLI_HPP
