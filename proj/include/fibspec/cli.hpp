// Command-line surface tying the library together for scripted use.
//
// Subcommands: count, poly, spectrum, census, construct, encode,
// combine-plan, avoider, verify-lemmas.  Output is JSON by default
// (--format table for a human-readable rendering); exit code 0 on success,
// 1 on validation or parse failure, 2 when a ceiling is exceeded.  Every
// numeric ceiling is a flag with a safe default, never silent truncation.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fibspec {

// Runs the CLI on argv-style arguments (without the program name), writing
// the payload to out and diagnostics to err.  Returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace fibspec
