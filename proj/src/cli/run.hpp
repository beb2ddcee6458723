#pragma once

namespace gapspec::cli {

/// Full command-line entry point.  Exit codes: 0 success, 1 malformed
/// configuration or flags, 2 domain/regime errors, 3 numerical
/// non-convergence.
int run(int argc, const char* const* argv);

}  // namespace gapspec::cli
