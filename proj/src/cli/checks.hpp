#pragma once

#include <functional>
#include <vector>

#include "cli/tables.hpp"
#include "gapspec/medium.hpp"

namespace gapspec::cli {

/// The correctness criteria, numbered 1-8, evaluated on the canonical
/// configuration (criterion 6 runs at beta = 1e-4, inside the validity
/// regime of the effective-mass approximation).  None of them depend on the
/// parallelism degree.
std::vector<CheckResult> run_core_checks();

/// The same criteria as individually invocable runners, in suite order.
std::vector<std::function<CheckResult()>> core_check_runners();

/// Criterion 9: the emitted validation report and a 100-point band sweep are
/// byte-identical across parallelism degrees 1, 4 and 8.
CheckResult determinism_check();

/// Core checks plus the determinism check; drives `gapspec validate`.
std::vector<CheckResult> run_validation_suite();

}  // namespace gapspec::cli
