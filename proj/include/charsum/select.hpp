#pragma once

#include <optional>
#include <utility>

#include "charsum/bounds.hpp"
#include "charsum/energy.hpp"
#include "charsum/rational_map.hpp"

namespace charsum {

// How to pick a large low-energy subset U of a set D stabilized by a
// rational self-map of degree k.  Every strategy guarantees U subset of D
// with |U| >= ceil(|D| / (k+1)); the energy guarantee differs:
//   Exhaustive  - global minimum of E over subsets of size exactly the floor
//                 (|D| <= 20); ties broken by lexicographic order.
//   LocalSearch - greedy element-swap descent from a seeded start, bounded
//                 by an evaluation budget.
//   ProofRule   - the split rule: given disjoint (S, T) with D = S u T,
//                 take U = S when |S| >= |D|/(k+1), else U = f(T).
enum class Strategy { Exhaustive, LocalSearch, ProofRule };

struct SelectionOptions {
    Strategy strategy = Strategy::LocalSearch;
    std::uint64_t seed = 0;
    std::uint64_t budget = 20000;  // LocalSearch energy evaluations
    bool assume_nonlinearity = false;   // accept an Unknown nonlinearity status
    bool override_nonlinearity = false; // proceed even on Violates
    std::optional<std::pair<Subset, Subset>> split;  // ProofRule input
    BoundParams params;
};

struct SelectionResult {
    Subset u;
    Strategy strategy = Strategy::LocalSearch;
    EnergyValue energy = 0;
    std::uint64_t size_floor = 0;  // ceil(|D| / (k+1))
    bool assumed_nonlinearity = false;
    double lambda = 1.0;
    double kappa = 1.0;
};

// Requires maps_into(f, D), |D| >= 2 and a nonlinearity status that is not
// Violates (unless overridden); Unknown requires the explicit assumption
// flag.  Errors: UnstableSet, PoleInSet, ConditionViolated, TooLarge
// (Exhaustive beyond 20 elements), BadParameters (ill-formed split).
SelectionResult select_low_energy_subset(const FieldCtx& ctx, const Subset& D,
                                         const RationalMap& f, const SelectionOptions& opts);

const char* to_string(Strategy s);
Strategy strategy_from_string(const std::string& name);  // ValidationError

}  // namespace charsum
