#pragma once

#include "charsum/bounds.hpp"
#include "charsum/field.hpp"
#include "charsum/u128.hpp"

namespace charsum {

// counts[s] = #{(c, u) in C x U : Tr(cu) = s}; sums to |C||U|.
struct TraceProfile {
    std::vector<u128> counts;
    u128 total() const {
        u128 t = 0;
        for (u128 c : counts) t += c;
        return t;
    }
};

TraceProfile trace_profile(const FieldCtx& ctx, const Subset& C, const Subset& U);

// Whether {Tr(cd)} covers all of F_p, and which residues are missing.
struct TraceCover {
    bool covers = false;
    std::vector<std::uint64_t> missing;
};

TraceCover trace_product_covers(const FieldCtx& ctx, const Subset& C, const Subset& D);

// Size-only sufficient condition for full trace coverage through the refined
// bound: |C| > lambda p^4 q / (|D| M(|D|)).  Pure arithmetic: evaluates at
// sizes far beyond anything materializable.
bool trace_cover_condition(std::uint64_t c_size, std::uint64_t d_size, std::uint64_t p,
                           std::uint64_t q, const BoundParams& params);

// The earlier size-only conditions: |C||D| > p^2 q forces full coverage,
// |C||D| >= pq forces coverage of the nonzero residues.  Exact integer
// comparisons.
struct BaselineTraceConditions {
    bool full_cover = false;
    bool nonzero_cover = false;
};

BaselineTraceConditions baseline_trace_conditions(std::uint64_t c_size, std::uint64_t d_size,
                                                  std::uint64_t p, std::uint64_t q);

// Number of solutions of a + b = cd over A x B x C x D.
enum class CountAlgorithm { Brute, Convolution };

struct SumProductCount {
    u128 n = 0;
    CountAlgorithm algorithm = CountAlgorithm::Convolution;
};

// Brute: literal quadruple loop with the product hoisted per (c, d); guarded
// by |A||B||C||D| <= 10^8.  Convolution: representation counts r_{A+B} in
// O(|A||B|) (dense q-length array when |A||B| >= q), then sum over products.
SumProductCount count_sum_product(const FieldCtx& ctx, const Subset& A, const Subset& B,
                                  const Subset& C, const Subset& D, CountAlgorithm algorithm);

// Exact solution count when A and B are unions of full trace fibers, given
// by their trace-value sets: every fiber has q/p elements, so
// N = (q/p) * sum_{(c,d)} r_{T_A + T_B}(Tr(cd)) without materializing A x B.
u128 count_sum_product_fibers(const FieldCtx& ctx, const std::vector<std::uint64_t>& traces_a,
                              const std::vector<std::uint64_t>& traces_b, const Subset& C,
                              const Subset& D);

// Size-only sufficient condition for a solution to exist:
// |A|^2 |B|^2 |C| |D| M(|D|) > lambda q^5.
bool sum_product_condition(std::uint64_t a_size, std::uint64_t b_size, std::uint64_t c_size,
                           std::uint64_t d_size, std::uint64_t q, const BoundParams& params);

}  // namespace charsum
