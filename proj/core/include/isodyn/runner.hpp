#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "isodyn/scenario.hpp"

namespace isodyn {

/// Outcome of executing a scenario.
struct RunReport {
    std::vector<std::string> artifacts; ///< file names written into out_dir
    bool checks_passed = true;          ///< false only when a verify run fails
    std::string summary;                ///< one-line result description
};

/// Executes the scenario and writes its artifacts into out_dir (created if
/// missing).  Progress goes to `log` when non-null.  Output is deterministic:
/// a fixed scenario produces byte-identical artifacts on every run.
///
/// Validation errors throw InvalidArgument/ConstraintViolation; runtime
/// domain or convergence problems throw the corresponding Error subclass.
RunReport run_scenario(const Scenario& sc, const std::string& out_dir, std::ostream* log);

} // namespace isodyn
