#ifndef KNOTCONC_CLI_HPP
#define KNOTCONC_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace knotconc {

// Runs one command (args exclude the program name). Returns the process
// exit code: 0 computed, 1 obstruction found / verification failed,
// 2 usage or input error.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace knotconc

#endif
