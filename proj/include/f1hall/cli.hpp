#pragma once

/* Command line front end, exposed as a function so tests can drive it.
 * Subcommands: reps, forms, mul, comul, act, coact, primitives, verify.
 */

#include <iosfwd>
#include <string>
#include <vector>

namespace f1hall {

/// Returns the process exit code: 0 on success (and all checks passing),
/// 1 when a verify check fails, 2 on usage or input errors.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace f1hall
