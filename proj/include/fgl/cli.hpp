#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fgl::cli {

enum ExitStatus : int {
    ok = 0,
    io_error = 1,         // unreadable input, malformed JSON, bad flags
    validation_error = 2, // input parsed but violates a domain constraint
};

// Runs one invocation. args excludes the program name, e.g.
// {"fgl", "inverse", "--backend", "mult", "--order", "3"}. The result (or the
// violation report on exit 2) goes to `out` unless --output names a file;
// diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace fgl::cli
