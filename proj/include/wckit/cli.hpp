#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wc::cli {

/// Dispatch one command line (without the program name). Exit code 0 on
/// success, 1 when a named check fails or an internal invariant breaks,
/// 2 on unknown subcommands, bad keys, parse errors or guard violations.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::string usage();

} // namespace wc::cli
