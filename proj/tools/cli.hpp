#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace braids::cli {

/// Runs one deterministic invocation. Results go to `out` as a single JSON
/// line (or to the --out file); errors go to `err` as a JSON object with a
/// machine-readable code. Returns 0 on success, 2 on validation errors
/// (unknown command, malformed JSON, precondition failures), 1 on internal
/// errors.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace braids::cli
