#include "doctest.h"

#include <cmath>

#include "charsum/applications.hpp"
#include "charsum/rng.hpp"

using namespace charsum;

TEST_CASE("trace profile of degenerate and full sets") {
    const FieldCtx ctx = FieldCtx::make(3, 4);

    // C = {0}: everything lands on trace 0
    const Subset zero = Subset::of(ctx, {0});
    const Subset u = Subset::of(ctx, {1, 5, 17, 80});
    const TraceProfile zp = trace_profile(ctx, zero, u);
    CHECK(zp.counts[0] == u.size());
    for (std::uint64_t s = 1; s < ctx.p(); ++s) CHECK(zp.counts[s] == 0);

    // C = U = F_q: N_s = (q-1) q/p + q [s = 0]
    const Subset all = Subset::full_field(ctx);
    const TraceProfile fp = trace_profile(ctx, all, all);
    const u128 q = ctx.q();
    for (std::uint64_t s = 0; s < ctx.p(); ++s) {
        const u128 expected = (q - 1) * (q / ctx.p()) + (s == 0 ? q : 0);
        CHECK(fp.counts[s] == expected);
    }
}

TEST_CASE("trace profile row sums") {
    const FieldCtx ctx = FieldCtx::make(5, 2);
    Rng rng(19);
    for (int t = 0; t < 30; ++t) {
        const Subset c = Subset::of(ctx, sample_distinct(rng, ctx.q(), 1 + rng.next_below(20)));
        const Subset u = Subset::of(ctx, sample_distinct(rng, ctx.q(), 1 + rng.next_below(20)));
        const TraceProfile profile = trace_profile(ctx, c, u);
        CHECK(profile.total() == static_cast<u128>(c.size()) * u.size());
    }
}

TEST_CASE("trace coverage") {
    const FieldCtx ctx = FieldCtx::make(3, 4);
    const Subset all = Subset::full_field(ctx);
    CHECK(trace_product_covers(ctx, all, all).covers);

    const Subset empty;
    const TraceCover none = trace_product_covers(ctx, empty, all);
    CHECK(!none.covers);
    CHECK(none.missing.size() == ctx.p());
}

TEST_CASE("trace coverage is monotone under enlargement") {
    const FieldCtx ctx = FieldCtx::make(5, 2);
    Rng rng(29);
    for (int t = 0; t < 20; ++t) {
        const Subset c = Subset::of(ctx, sample_distinct(rng, ctx.q(), 1 + rng.next_below(10)));
        const Subset d = Subset::of(ctx, sample_distinct(rng, ctx.q(), 1 + rng.next_below(10)));
        if (!trace_product_covers(ctx, c, d).covers) continue;
        Subset bigger_c = set_union(
            c, Subset::of(ctx, sample_distinct(rng, ctx.q(), 1 + rng.next_below(10))));
        Subset bigger_d = set_union(
            d, Subset::of(ctx, sample_distinct(rng, ctx.q(), 1 + rng.next_below(10))));
        CHECK(trace_product_covers(ctx, bigger_c, d).covers);
        CHECK(trace_product_covers(ctx, c, bigger_d).covers);
    }
}

TEST_CASE("size-only conditions: strictness at the boundary") {
    BoundParams params;

    // full-cover boundary is strict, nonzero-cover is not
    const auto at_full = baseline_trace_conditions(25, 81, 5, 81);  // |C||D| = p^2 q
    CHECK(!at_full.full_cover);
    const auto above_full = baseline_trace_conditions(26, 81, 5, 81);
    CHECK(above_full.full_cover);
    const auto at_nonzero = baseline_trace_conditions(5, 81, 5, 81);  // |C||D| = pq
    CHECK(at_nonzero.nonzero_cover);

    // full cover implies nonzero cover
    for (std::uint64_t c = 1; c < 200; c += 13) {
        const auto both = baseline_trace_conditions(c, 81, 5, 81);
        if (both.full_cover) CHECK(both.nonzero_cover);
    }

    // refined condition: strict inequality and lambda blowup
    CHECK(!trace_cover_condition(10, 9, 3, 81, BoundParams{1e30, 1.0}));
    const double threshold = 1.0 * std::pow(3.0, 4) * 81.0 / (9.0 * gain_factor(81, 9));
    const std::uint64_t at = static_cast<std::uint64_t>(threshold);
    CHECK(!trace_cover_condition(at, 9, 3, 81, params));
    CHECK(trace_cover_condition(at + 2, 9, 3, 81, params));

    // size-only arithmetic at scales far beyond materialization
    const std::uint64_t big_q = 3486784401ULL;  // 3^20
    CHECK(trace_cover_condition(3486784401ULL, 100000000, 3, big_q, params));
}

TEST_CASE("sum-product counts: full field and guards") {
    const FieldCtx ctx = FieldCtx::make(3, 3);
    const Subset all = Subset::full_field(ctx);
    const u128 q = ctx.q();
    const SumProductCount n =
        count_sum_product(ctx, all, all, all, all, CountAlgorithm::Convolution);
    CHECK(n.n == q * q * q);

    CHECK_THROWS_AS(count_sum_product(FieldCtx::make(101, 2), Subset::full_field(FieldCtx::make(101, 2)),
                                      Subset::full_field(FieldCtx::make(101, 2)),
                                      Subset::full_field(FieldCtx::make(101, 2)),
                                      Subset::full_field(FieldCtx::make(101, 2)),
                                      CountAlgorithm::Brute),
                    TooLargeError);
}

TEST_CASE("brute equals convolution on random quadruples") {
    for (auto [p, r] : {std::pair<std::uint64_t, unsigned>{2, 5}, {3, 4}, {11, 2}}) {
        const FieldCtx ctx = FieldCtx::make(p, r);
        Rng rng(41);
        for (int t = 0; t < 15; ++t) {
            const auto draw = [&] {
                return Subset::of(ctx, sample_distinct(rng, ctx.q(), 1 + rng.next_below(15)));
            };
            const Subset a = draw(), b = draw(), c = draw(), d = draw();
            const u128 brute = count_sum_product(ctx, a, b, c, d, CountAlgorithm::Brute).n;
            const u128 conv = count_sum_product(ctx, a, b, c, d, CountAlgorithm::Convolution).n;
            CHECK(brute == conv);
        }
    }
}

TEST_CASE("fiber counting agrees with the materialized count") {
    const FieldCtx ctx = FieldCtx::make(5, 2);
    Rng rng(47);
    for (int t = 0; t < 10; ++t) {
        // A, B = unions of full fibers over random trace sets
        const auto draw_traces = [&] {
            return sample_distinct(rng, ctx.p(), 1 + rng.next_below(ctx.p() - 1));
        };
        const auto ta = draw_traces();
        const auto tb = draw_traces();
        const Subset a = trace_fiber_union(ctx, ta);
        const Subset b = trace_fiber_union(ctx, tb);
        const Subset c = Subset::of(ctx, sample_distinct(rng, ctx.q(), 1 + rng.next_below(8)));
        const Subset d = Subset::of(ctx, sample_distinct(rng, ctx.q(), 1 + rng.next_below(8)));
        const u128 by_fibers = count_sum_product_fibers(ctx, ta, tb, c, d);
        const u128 direct = count_sum_product(ctx, a, b, c, d, CountAlgorithm::Convolution).n;
        CHECK(by_fibers == direct);
    }
}

TEST_CASE("sum-product condition") {
    BoundParams params;
    CHECK(!sum_product_condition(10, 10, 10, 10, 81, BoundParams{1e30, 1.0}));
    // all sets full at q = 81: q^6 M(q) > q^5 iff q M(q) > 1
    CHECK(sum_product_condition(81, 81, 81, 81, 81, params));
    // the inequality is strict: just past the boundary the predicate flips
    const double m = gain_factor(81, 81);
    const double q5 = std::pow(81.0, 5);
    const double lambda_star = 81.0 * 81 * 81 * 81 * 81 * 81 * m / q5;
    CHECK(!sum_product_condition(81, 81, 81, 81, 81, BoundParams{lambda_star * (1 + 1e-9), 1.0}));
    CHECK(sum_product_condition(81, 81, 81, 81, 81, BoundParams{lambda_star * (1 - 1e-9), 1.0}));
}
