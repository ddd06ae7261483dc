#pragma once

#include <iosfwd>

#include "charsum/bounds.hpp"
#include "charsum/characters.hpp"
#include "charsum/config.hpp"
#include "charsum/report.hpp"

namespace charsum {

// One row comparing the observed double sum against every bound evaluator:
// observed |sum|, the classical bound, the energy bound with measured E(D),
// the refined bound, and the observed/bound ratios (0 when a bound is 0;
// refined columns empty when |D| < 2).
ReportRow tightness_report(const FieldCtx& ctx, const Subset& C, const Subset& D, CharId id,
                           const BoundParams& params);

// Executes a validated config end to end: builds the field, resolves sets,
// runs the task, writes the report artifact atomically (stdout when no path
// is set).  Returns the process exit code: 0 success, 1 a check failed,
// 2 validation error, 3 computational guard.
int run_experiment(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace charsum
