#include "charsum/characters.hpp"

#include "charsum/parallel.hpp"

namespace charsum {

CycloSum char_eval(const FieldCtx& ctx, CharId id, Elem x) {
    return CycloSum::root(ctx.p(), ctx.trace(ctx.mul(id.a, x)));
}

std::vector<std::uint64_t> inner_sum_counts(const FieldCtx& ctx, CharId id, Elem c, const Subset& U) {
    std::vector<std::uint64_t> hist(ctx.p(), 0);
    const Elem ac = ctx.mul(id.a, c);
    for (Elem u : U) ++hist[ctx.trace(ctx.mul(ac, u))];
    return hist;
}

CycloSum double_char_sum(const FieldCtx& ctx, CharId id, const Subset& C, const Subset& D) {
    const std::uint64_t p = ctx.p();
    const auto& cs = C.values();
    std::vector<std::vector<std::uint64_t>> hists(worker_count(), std::vector<std::uint64_t>(p, 0));
    parallel_chunks(cs.size(), [&](std::uint64_t begin, std::uint64_t end, unsigned worker) {
        auto& local = hists[worker];
        for (std::uint64_t i = begin; i < end; ++i) {
            const Elem ac = ctx.mul(id.a, cs[i]);
            for (Elem d : D) ++local[ctx.trace(ctx.mul(ac, d))];
        }
    });
    std::vector<std::uint64_t> total(p, 0);
    for (const auto& h : hists) {
        for (std::uint64_t j = 0; j < p; ++j) total[j] += h[j];
    }
    return CycloSum::from_counts(p, total);
}

}  // namespace charsum
