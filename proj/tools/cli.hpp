#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace catlab::cli {

enum ExitCode : int { Ok = 0, DomainOrFormat = 1, Usage = 2 };

/// Runs one command line (args exclude the program name). Standard output is
/// buffered and written to `out` only on success; failures write a single
/// diagnostic line to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace catlab::cli
