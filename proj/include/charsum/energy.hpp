#pragma once

#include "charsum/field.hpp"
#include "charsum/u128.hpp"

namespace charsum {

// Number of quadruples (s1, s2, s3, s4) in S^4 with s1 + s2 = s3 + s4.
// Fits 2|S|^2 - |S| <= E(S) <= |S|^3; 128-bit since |S|^3 can pass 2^64.
using EnergyValue = u128;

// E(S) = sum_x r_S(x)^2 over the representation function
// r_S(x) = #{(s1, s2) in S^2 : s1 + s2 = x}.  O(|S|^2); dense q-length
// counting when |S|^2 >= q/4, hashed otherwise.
EnergyValue additive_energy(const FieldCtx& ctx, const Subset& S);

// Literal O(|S|^4) count; the test oracle.  TooLarge for |S| > 20.
EnergyValue additive_energy_bruteforce(const FieldCtx& ctx, const Subset& S);

}  // namespace charsum
