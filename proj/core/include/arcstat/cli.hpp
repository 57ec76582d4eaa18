#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace arcstat::cli {

/// Runs one CLI invocation. args excludes the program name. Data goes to
/// out, diagnostics to err. Returns 0 on success, 1 on verification
/// failure (counterexample on out), 2 on usage or parse errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace arcstat::cli
