#include "doctest.h"

#include "charsum/energy.hpp"
#include "charsum/rng.hpp"

using namespace charsum;

TEST_CASE("energy of tiny sets against hand counts") {
    const FieldCtx f5 = FieldCtx::make(5, 1);
    // {0,1}: representation counts over sums 0,1,2 are 1,2,1
    CHECK(additive_energy(f5, Subset::of(f5, {0, 1})) == 6);
    CHECK(additive_energy_bruteforce(f5, Subset::of(f5, {0, 1})) == 6);

    const FieldCtx f7 = FieldCtx::make(7, 1);
    // {0,1,2}: counts over sums 0..4 are 1,2,3,2,1
    CHECK(additive_energy(f7, Subset::of(f7, {0, 1, 2})) == 19);
    CHECK(additive_energy_bruteforce(f7, Subset::of(f7, {0, 1, 2})) == 19);

    CHECK(additive_energy(f7, Subset::of(f7, {3})) == 1);
}

TEST_CASE("energy of the whole field is q cubed") {
    for (auto [p, r] : {std::pair<std::uint64_t, unsigned>{3, 3}, {2, 5}, {13, 1}}) {
        const FieldCtx ctx = FieldCtx::make(p, r);
        const u128 q = ctx.q();
        CHECK(additive_energy(ctx, Subset::full_field(ctx)) == q * q * q);
    }
}

TEST_CASE("brute-force guard") {
    const FieldCtx ctx = FieldCtx::make(31, 1);
    std::vector<Elem> big(25);
    for (int i = 0; i < 25; ++i) big[i] = i;
    CHECK_THROWS_AS(additive_energy_bruteforce(ctx, Subset::of(ctx, big)), TooLargeError);
}

TEST_CASE("fast count equals brute force on random sets") {
    for (auto [p, r] : {std::pair<std::uint64_t, unsigned>{2, 5}, {3, 4}, {11, 2}}) {
        const FieldCtx ctx = FieldCtx::make(p, r);
        Rng rng(101);
        for (int t = 0; t < 70; ++t) {
            const std::size_t want = 1 + rng.next_below(12);
            const Subset s = Subset::of(ctx, sample_distinct(rng, ctx.q(), want));
            CHECK(additive_energy(ctx, s) == additive_energy_bruteforce(ctx, s));
        }
    }
}

TEST_CASE("translation and dilation invariance") {
    const FieldCtx ctx = FieldCtx::make(5, 3);
    Rng rng(55);
    for (int t = 0; t < 30; ++t) {
        const Subset s = Subset::of(ctx, sample_distinct(rng, ctx.q(), 1 + rng.next_below(15)));
        const EnergyValue base = additive_energy(ctx, s);

        const Elem shift = rng.next_below(ctx.q());
        std::vector<Elem> translated, dilated;
        for (Elem v : s) translated.push_back(ctx.add(v, shift));
        CHECK(additive_energy(ctx, Subset::of(ctx, translated)) == base);

        const Elem scale = 1 + rng.next_below(ctx.q() - 1);
        for (Elem v : s) dilated.push_back(ctx.mul(v, scale));
        CHECK(additive_energy(ctx, Subset::of(ctx, dilated)) == base);
    }
}

TEST_CASE("energy bounds 2|S|^2 - |S| <= E <= |S|^3") {
    const FieldCtx ctx = FieldCtx::make(7, 2);
    Rng rng(77);
    for (int t = 0; t < 40; ++t) {
        const std::size_t want = 1 + rng.next_below(20);
        const Subset s = Subset::of(ctx, sample_distinct(rng, ctx.q(), want));
        const u128 n = s.size();
        const EnergyValue e = additive_energy(ctx, s);
        CHECK(e >= 2 * n * n - n);
        CHECK(e <= n * n * n);
    }
}
