#pragma once

#include <string>
#include <vector>

#include "charsum/field.hpp"

namespace charsum {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// The library's self-check battery for one field: arithmetic axioms,
// encoding round-trips, trace fibers, character orthogonality, the exact
// fourth-moment identity, and the double-sum bounds on random sets.
// Exhaustive where q permits, sampled otherwise.
std::vector<CheckResult> run_identity_checks(const FieldCtx& ctx, std::uint64_t seed,
                                             unsigned trials);

}  // namespace charsum
