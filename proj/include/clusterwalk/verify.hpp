#pragma once

#include "clusterwalk/basis.hpp"

#include <optional>
#include <string>
#include <vector>

namespace clusterwalk {

// Verification suites. Each returns a Report with one check per tested
// fact; the defaults pin the bounds used by the acceptance gate.

Report suite_kronecker();
Report suite_a13_tables();
Report suite_chebyshev(const std::optional<std::string>& surface = std::nullopt, int max_m = 4);
Report suite_oracle_equivalence();
Report suite_denominator_crossing();
Report suite_degree_lemmas();
Report suite_positivity();
Report suite_atomicity();
Report suite_decomposition();
Report suite_counts();

std::vector<std::string> suite_names();

/// Dispatch by name ("kronecker", ..., "all" aggregates everything).
std::vector<Report> run_suites(const std::string& name,
                               const std::optional<std::string>& surface = std::nullopt,
                               std::optional<int> max_m = std::nullopt);

}  // namespace clusterwalk
