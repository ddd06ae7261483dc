#pragma once

#include <cstdint>

#include "charsum/energy.hpp"

namespace charsum {

// The implied constants of the refined estimates, left free by the theory;
// defaults are 1 and every report echoes the values used.
struct BoundParams {
    double lambda = 1.0;
    double kappa = 1.0;
};

void validate(const BoundParams& params);  // BadParameters unless both > 0

// Gain factor M(n) controlling how far the refined bound can beat the
// classical one:
//   M(n) = min{ q^{1/2} / (n^{1/2} (log n)^{11/4}),
//               n^{4/5} / (q^{2/5} (log n)^{31/10}) }.
// Natural logarithms throughout.  DomainError for n <= 1.
double gain_factor(std::uint64_t q, std::uint64_t n);

// min{ (|C||D|q)^{1/2}, |C||D| }.
double classical_bound(std::uint64_t c_size, std::uint64_t d_size, std::uint64_t q);

// (|C|^3 E(U) q)^{1/4}: the double-sum bound through additive energy.
double energy_bound(std::uint64_t c_size, EnergyValue energy_u, std::uint64_t q);

// kappa * (|C|^3 |D|^3 q / M(|D|))^{1/4}: the bound achieved through a
// low-energy subset of D.  DomainError for d_size <= 1.
double refined_bound(std::uint64_t c_size, std::uint64_t d_size, std::uint64_t q,
                     const BoundParams& params);

// The |C| window on which the refined bound beats the classical one:
//   lo = lambda   * max{ q^{1/2} (log q)^{11/4} / |D|^{1/2},
//                        q^{7/5} (log q)^{31/10} / |D|^{9/5} }
//   hi = lambda^-1 * min{ q^{3/2} / (|D|^{3/2} (log q)^{11/4}),
//                        q^{3/5} / (|D|^{1/5} (log q)^{31/10}) }
struct ImprovementInterval {
    double lo = 0;
    double hi = 0;
    bool nonempty = false;
};

ImprovementInterval improvement_interval(std::uint64_t q, std::uint64_t d_size, double lambda);

}  // namespace charsum
