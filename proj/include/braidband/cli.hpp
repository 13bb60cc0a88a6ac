#ifndef BRAIDBAND_CLI_HPP
#define BRAIDBAND_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace braidband {

/// Runs the command-line interface. Results go to `out`, diagnostics to
/// `err`. Exit code 0 on success, 1 when the mathematics rejects the input
/// (parity failure, invalid complex, violated property sweep, failed
/// scenario), 2 on usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace braidband

#endif
