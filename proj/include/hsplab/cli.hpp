// Command-line front door: every pipeline as a reproducible, JSON-emitting
// subcommand. Output on stdout is machine-readable JSON and byte-identical
// for identical argv + seed; human text appears on stderr under --verbose.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hsplab::cli {

/// Exit codes: 0 success, 1 verified failure, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace hsplab::cli
