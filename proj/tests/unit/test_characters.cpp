#include "doctest.h"

#include <cstdlib>

#include "charsum/characters.hpp"
#include "charsum/constructions.hpp"
#include "charsum/energy.hpp"
#include "charsum/parallel.hpp"
#include "charsum/rng.hpp"
#include "charsum/u128.hpp"

using namespace charsum;

TEST_CASE("trivial character and orthogonality") {
    const FieldCtx ctx = FieldCtx::make(3, 4);
    for (Elem x : {Elem(0), Elem(5), Elem(80)}) {
        CHECK(char_eval(ctx, CharId{0}, x).as_integer().value() == 1);
    }
    // sum over the whole field vanishes for every nontrivial twist sample
    Rng rng(3);
    for (int t = 0; t < 5; ++t) {
        const CharId id{1 + rng.next_below(ctx.q() - 1)};
        CycloSum total(ctx.p());
        for (Elem x = 0; x < ctx.q(); ++x) total += char_eval(ctx, id, x);
        CHECK(total.is_zero());
    }
}

TEST_CASE("characters are homomorphisms") {
    const FieldCtx ctx = FieldCtx::make(2, 5);
    Rng rng(17);
    for (int t = 0; t < 100; ++t) {
        const CharId id{rng.next_below(ctx.q())};
        const Elem x = rng.next_below(ctx.q());
        const Elem y = rng.next_below(ctx.q());
        CHECK(char_eval(ctx, id, x) * char_eval(ctx, id, y) ==
              char_eval(ctx, id, ctx.add(x, y)));
    }
}

TEST_CASE("double sum over the full field is q") {
    for (auto [p, r] : {std::pair<std::uint64_t, unsigned>{3, 4}, {2, 5}, {11, 2}}) {
        const FieldCtx ctx = FieldCtx::make(p, r);
        const Subset all = Subset::full_field(ctx);
        const CycloSum sum = double_char_sum(ctx, CharId{1}, all, all);
        CHECK(sum.as_integer().value() == ctx.q());
    }
}

TEST_CASE("empty sets give the zero sum") {
    const FieldCtx ctx = FieldCtx::make(3, 4);
    const Subset empty;
    const Subset d = Subset::of(ctx, {1, 2, 3});
    CHECK(double_char_sum(ctx, CharId{1}, empty, d).is_zero());
}

TEST_CASE("subfield pair meets the classical bound exactly") {
    const FieldCtx ctx = FieldCtx::make(3, 4);
    const NamedConstruction nc = build_subfield_tight(ctx);
    const CycloSum sum =
        double_char_sum(ctx, CharId{nc.twist.value()}, nc.sets.at("C"), nc.sets.at("D"));
    CHECK(sum.as_integer().value() == 81);  // (9 * 9 * 81)^{1/2}
    CHECK(magnitude(sum) == 81.0);
}

TEST_CASE("fourth moment equals q E(U) exactly") {
    for (auto [p, r] : {std::pair<std::uint64_t, unsigned>{3, 4}, {2, 6}}) {
        const FieldCtx ctx = FieldCtx::make(p, r);
        Rng rng(5);
        for (int t = 0; t < 5; ++t) {
            const std::size_t want = 1 + rng.next_below(10);
            const Subset u = Subset::of(ctx, sample_distinct(rng, ctx.q(), want));
            const CharId id{1 + rng.next_below(ctx.q() - 1)};
            CycloSum total(ctx.p());
            for (Elem c = 0; c < ctx.q(); ++c) {
                const CycloSum inner =
                    CycloSum::from_counts(ctx.p(), inner_sum_counts(ctx, id, c, u));
                const CycloSum ns = norm_square(inner);
                total += ns * ns;
            }
            const EnergyValue e = additive_energy(ctx, u);
            REQUIRE(total.as_integer().has_value());
            CHECK(total.as_integer().value() == BigInt(to_string(static_cast<u128>(ctx.q()) * e)));
        }
    }
}

TEST_CASE("worker cap from the environment, results thread-count independent") {
    const FieldCtx ctx = FieldCtx::make(3, 4);
    Rng rng(71);
    const Subset c = Subset::of(ctx, sample_distinct(rng, ctx.q(), 50));
    const Subset d = Subset::of(ctx, sample_distinct(rng, ctx.q(), 50));

    setenv("CHARSUM_THREADS", "1", 1);
    CHECK(worker_count() == 1);
    const CycloSum serial = double_char_sum(ctx, CharId{2}, c, d);
    unsetenv("CHARSUM_THREADS");
    CHECK(worker_count() >= 1);
    const CycloSum parallel = double_char_sum(ctx, CharId{2}, c, d);
    CHECK(serial == parallel);
}

TEST_CASE("partitioned accumulation matches the single-threaded sum") {
    const FieldCtx ctx = FieldCtx::make(11, 2);
    Rng rng(23);
    const Subset c = Subset::of(ctx, sample_distinct(rng, ctx.q(), 40));
    const Subset d = Subset::of(ctx, sample_distinct(rng, ctx.q(), 35));
    const CycloSum whole = double_char_sum(ctx, CharId{5}, c, d);
    // split C arbitrarily and add the partial sums
    const Subset c1 = Subset::of(ctx, {c.values().begin(), c.values().begin() + 17});
    const Subset c2 = set_difference(c, c1);
    const CycloSum parts =
        double_char_sum(ctx, CharId{5}, c1, d) + double_char_sum(ctx, CharId{5}, c2, d);
    CHECK(whole == parts);
}
