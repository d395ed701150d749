#ifndef DP4A13_CLI_HPP
#define DP4A13_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace dp4a13 {

// Command-line front end (count, predict, compare, classify, fp, points,
// constants). Returns the process exit code; 2 flags a disagreement
// between the two counting methods, 1 any other error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace dp4a13

#endif
