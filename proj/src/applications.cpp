#include "charsum/applications.hpp"

#include <cmath>
#include <unordered_map>

#include "charsum/parallel.hpp"

namespace charsum {

TraceProfile trace_profile(const FieldCtx& ctx, const Subset& C, const Subset& U) {
    const std::uint64_t p = ctx.p();
    const auto& cs = C.values();
    std::vector<std::vector<std::uint64_t>> partial(worker_count(),
                                                    std::vector<std::uint64_t>(p, 0));
    parallel_chunks(cs.size(), [&](std::uint64_t begin, std::uint64_t end, unsigned worker) {
        auto& local = partial[worker];
        for (std::uint64_t i = begin; i < end; ++i) {
            const Elem c = cs[i];
            for (Elem u : U) ++local[ctx.trace(ctx.mul(c, u))];
        }
    });
    TraceProfile profile;
    profile.counts.assign(p, 0);
    for (const auto& local : partial) {
        for (std::uint64_t s = 0; s < p; ++s) profile.counts[s] += local[s];
    }
    return profile;
}

TraceCover trace_product_covers(const FieldCtx& ctx, const Subset& C, const Subset& D) {
    const TraceProfile profile = trace_profile(ctx, C, D);
    TraceCover out;
    out.covers = true;
    for (std::uint64_t s = 0; s < ctx.p(); ++s) {
        if (profile.counts[s] == 0) {
            out.covers = false;
            out.missing.push_back(s);
        }
    }
    return out;
}

bool trace_cover_condition(std::uint64_t c_size, std::uint64_t d_size, std::uint64_t p,
                           std::uint64_t q, const BoundParams& params) {
    validate(params);
    const double m = gain_factor(q, d_size);
    const double pd = static_cast<double>(p);
    const double threshold =
        params.lambda * pd * pd * pd * pd * static_cast<double>(q) /
        (static_cast<double>(d_size) * m);
    return static_cast<double>(c_size) > threshold;
}

BaselineTraceConditions baseline_trace_conditions(std::uint64_t c_size, std::uint64_t d_size,
                                                  std::uint64_t p, std::uint64_t q) {
    BaselineTraceConditions out;
    const u128 prod = static_cast<u128>(c_size) * d_size;
    out.full_cover = prod > static_cast<u128>(p) * p * q;
    out.nonzero_cover = prod >= static_cast<u128>(p) * q;
    return out;
}

namespace {

u128 count_brute(const FieldCtx& ctx, const Subset& A, const Subset& B, const Subset& C,
                 const Subset& D) {
    const u128 work = static_cast<u128>(A.size()) * B.size() * C.size() * D.size();
    if (work > 100000000) throw TooLargeError("brute-force count beyond the 10^8 guard");
    u128 n = 0;
    for (Elem c : C) {
        for (Elem d : D) {
            const Elem target = ctx.mul(c, d);
            for (Elem a : A) {
                for (Elem b : B) {
                    if (ctx.add(a, b) == target) ++n;
                }
            }
        }
    }
    return n;
}

u128 count_convolution(const FieldCtx& ctx, const Subset& A, const Subset& B, const Subset& C,
                       const Subset& D) {
    const u128 pairs = static_cast<u128>(A.size()) * B.size();
    const bool dense = pairs >= ctx.q();
    std::vector<std::uint64_t> dense_r;
    std::unordered_map<Elem, std::uint64_t> sparse_r;
    if (dense) {
        std::vector<std::vector<std::uint64_t>> partial(worker_count());
        const auto& as = A.values();
        parallel_chunks(as.size(), [&](std::uint64_t begin, std::uint64_t end, unsigned worker) {
            auto& local = partial[worker];
            local.assign(ctx.q(), 0);
            for (std::uint64_t i = begin; i < end; ++i) {
                for (Elem b : B) ++local[ctx.add(as[i], b)];
            }
        });
        dense_r.assign(ctx.q(), 0);
        for (const auto& local : partial) {
            if (local.empty()) continue;
            for (std::uint64_t x = 0; x < ctx.q(); ++x) dense_r[x] += local[x];
        }
    } else {
        sparse_r.reserve(static_cast<std::size_t>(pairs));
        for (Elem a : A) {
            for (Elem b : B) ++sparse_r[ctx.add(a, b)];
        }
    }
    u128 n = 0;
    for (Elem c : C) {
        for (Elem d : D) {
            const Elem x = ctx.mul(c, d);
            if (dense) {
                n += dense_r[x];
            } else if (const auto it = sparse_r.find(x); it != sparse_r.end()) {
                n += it->second;
            }
        }
    }
    return n;
}

}  // namespace

SumProductCount count_sum_product(const FieldCtx& ctx, const Subset& A, const Subset& B,
                                  const Subset& C, const Subset& D, CountAlgorithm algorithm) {
    SumProductCount out;
    out.algorithm = algorithm;
    out.n = algorithm == CountAlgorithm::Brute ? count_brute(ctx, A, B, C, D)
                                               : count_convolution(ctx, A, B, C, D);
    return out;
}

u128 count_sum_product_fibers(const FieldCtx& ctx, const std::vector<std::uint64_t>& traces_a,
                              const std::vector<std::uint64_t>& traces_b, const Subset& C,
                              const Subset& D) {
    const std::uint64_t p = ctx.p();
    for (std::uint64_t s : traces_a) {
        if (s >= p) throw ValidationError("trace value out of range");
    }
    for (std::uint64_t s : traces_b) {
        if (s >= p) throw ValidationError("trace value out of range");
    }
    // r[s] = #{(s1, s2) in T_A x T_B : s1 + s2 = s mod p}
    std::vector<std::uint64_t> r(p, 0);
    for (std::uint64_t s1 : traces_a) {
        for (std::uint64_t s2 : traces_b) {
            std::uint64_t s = s1 + s2;
            if (s >= p) s -= p;
            ++r[s];
        }
    }
    u128 weighted = 0;
    for (Elem c : C) {
        for (Elem d : D) weighted += r[ctx.trace(ctx.mul(c, d))];
    }
    const u128 fiber = ctx.q() / p;
    return weighted * fiber;
}

bool sum_product_condition(std::uint64_t a_size, std::uint64_t b_size, std::uint64_t c_size,
                           std::uint64_t d_size, std::uint64_t q, const BoundParams& params) {
    validate(params);
    const double m = gain_factor(q, d_size);
    const double qd = static_cast<double>(q);
    const double lhs = static_cast<double>(a_size) * a_size * static_cast<double>(b_size) *
                       b_size * static_cast<double>(c_size) * static_cast<double>(d_size) * m;
    const double rhs = params.lambda * qd * qd * qd * qd * qd;
    return lhs > rhs;
}

}  // namespace charsum
