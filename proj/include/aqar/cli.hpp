#pragma once

#include <iosfwd>

namespace aqar::cli {

/// Runs one subcommand and writes its report to `out`, diagnostics to `err`.
/// Returns 0 when every claim checked is verified, 2 on an unexpected
/// violation and 1 on usage or engine errors.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace aqar::cli
