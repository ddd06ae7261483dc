#include "doctest.h"

#include "charsum/applications.hpp"
#include "charsum/characters.hpp"
#include "charsum/constructions.hpp"
#include "charsum/rng.hpp"

using namespace charsum;

TEST_CASE("builders are deterministic") {
    const FieldCtx ctx = FieldCtx::make(3, 4);
    for (const std::string& name : {"subfield-tight", "qr-dual-basis"}) {
        const NamedConstruction a = build_construction(ctx, name);
        const NamedConstruction b = build_construction(ctx, name);
        CHECK(a.sets == b.sets);
        CHECK(a.twist == b.twist);
    }
    CHECK_THROWS_AS(build_construction(ctx, "nope"), ValidationError);
}

TEST_CASE("initial-segment pair keeps the sum near |C||D|") {
    const FieldCtx ctx = FieldCtx::make(101, 1);
    const NamedConstruction nc = build_ap_tight(ctx);
    CHECK(nc.sets.at("C").size() == 2);  // floor(0.1 sqrt(101)) = 1
    const ConstructionCheck check = verify_construction(ctx, nc);
    CHECK(check.ok);

    CHECK_THROWS_AS(build_ap_tight(FieldCtx::make(97, 1)), TooSmallPrimeError);
    CHECK_THROWS_AS(build_ap_tight(FieldCtx::make(3, 2)), BadParametersError);
}

TEST_CASE("subfield pair is exactly tight") {
    for (auto [p, r] : {std::pair<std::uint64_t, unsigned>{3, 4}, {2, 6}}) {
        const FieldCtx ctx = FieldCtx::make(p, r);
        const NamedConstruction nc = build_subfield_tight(ctx);
        std::uint64_t sq = 1;
        for (unsigned i = 0; i < r / 2; ++i) sq *= p;
        CHECK(nc.sets.at("C").size() == sq);
        // the subfield is closed under multiplication
        for (Elem a : nc.sets.at("C")) {
            for (Elem b : nc.sets.at("C")) CHECK(nc.sets.at("C").contains(ctx.mul(a, b)));
        }
        CHECK(verify_construction(ctx, nc).ok);
    }
    CHECK_THROWS_AS(build_subfield_tight(FieldCtx::make(3, 3)), BadParametersError);
}

TEST_CASE("fiber construction: |D| = |C| q / p and no improving subset") {
    const FieldCtx ctx = FieldCtx::make(101, 2);
    const NamedConstruction nc = build_ap_fibers(ctx);
    const Subset& c = nc.sets.at("C");
    const Subset& d = nc.sets.at("D");
    CHECK(c.size() == 2);
    CHECK(d.size() * ctx.p() == c.size() * ctx.q());
    for (Elem x : d) CHECK(c.contains(ctx.trace(x)));  // fibers by construction

    // every sampled subset U of D keeps the double sum at >= 0.99 |C||U|
    Rng rng(0);
    for (int t = 0; t < 1000; ++t) {
        const std::size_t want = 1 + rng.next_below(d.size());
        std::vector<Elem> u_vals;
        for (std::uint64_t i : sample_distinct(rng, d.size(), want))
            u_vals.push_back(d.values()[i]);
        const Subset u = Subset::from_sorted(std::move(u_vals));
        const double observed = magnitude(double_char_sum(ctx, CharId{1}, c, u));
        CHECK(observed >= 0.99 * static_cast<double>(c.size()) * u.size());
    }
}

TEST_CASE("residue blocks through the dual basis never cover F_p") {
    for (auto [p, r] : {std::pair<std::uint64_t, unsigned>{3, 4}, {5, 4}}) {
        const FieldCtx ctx = FieldCtx::make(p, r);
        const NamedConstruction nc = build_qr_dual_basis(ctx);
        std::uint64_t quarter = 1;
        for (unsigned i = 0; i < r / 4; ++i) quarter *= p;
        std::uint64_t d_pow = 1;
        for (unsigned i = 0; i < (3 * r) / 4 - 1; ++i) d_pow *= p;
        CHECK(nc.sets.at("C").size() == (p - 1) / 2 * quarter);
        CHECK(nc.sets.at("D").size() == (p - 1) / 2 * d_pow);

        const TraceCover cover = trace_product_covers(ctx, nc.sets.at("C"), nc.sets.at("D"));
        CHECK(!cover.covers);
        // realized traces live inside the residues
        const Subset residues = quadratic_residues(p);
        const TraceProfile profile = trace_profile(ctx, nc.sets.at("C"), nc.sets.at("D"));
        for (std::uint64_t s = 0; s < p; ++s) {
            if (profile.counts[s] != 0) CHECK(residues.contains(s));
        }
        CHECK(verify_construction(ctx, nc).ok);
    }
    CHECK_THROWS_AS(build_qr_dual_basis(FieldCtx::make(2, 4)), BadParametersError);
    CHECK_THROWS_AS(build_qr_dual_basis(FieldCtx::make(3, 6)), BadParametersError);
}

TEST_CASE("affine split has no solutions at all") {
    const FieldCtx ctx = FieldCtx::make(5, 4);
    const NamedConstruction nc = build_affine_split(ctx);
    CHECK(nc.sets.at("A").size() == 250);
    CHECK(nc.sets.at("B").size() == 250);
    CHECK(nc.sets.at("C").size() == 5);
    CHECK(nc.sets.at("D").size() == 125);

    // constant terms of A+B stay nonzero, of CD stay zero
    const auto constant_digit = [&](Elem x) { return ctx.coeffs(x)[0]; };
    for (Elem a : nc.sets.at("A")) CHECK(constant_digit(a) != 0);
    for (Elem c : nc.sets.at("C")) CHECK(constant_digit(c) == 0);

    CHECK(verify_construction(ctx, nc).ok);
    CHECK_THROWS_AS(build_affine_split(FieldCtx::make(3, 4)), BadParametersError);
    CHECK_THROWS_AS(build_affine_split(FieldCtx::make(5, 2)), BadParametersError);
}

TEST_CASE("trace windows separate the sums from the products") {
    const FieldCtx ctx = FieldCtx::make(211, 1);
    const NamedConstruction nc = build_trace_intervals(ctx);
    CHECK(verify_construction(ctx, nc).ok);
    CHECK_THROWS_AS(build_trace_intervals(FieldCtx::make(199, 1)), TooSmallPrimeError);
}

TEST_CASE("symmetric half / complement split kills all solutions") {
    const FieldCtx ctx = FieldCtx::make(13, 1);
    const NamedConstruction nc = build_sumproduct_tight(ctx);
    const Subset& a = nc.sets.at("A");
    const Subset& b = nc.sets.at("B");
    CHECK(a.size() == 6);
    CHECK(b.size() == 6);
    CHECK(nc.sets.at("D").values() == std::vector<Elem>{0});
    // A is symmetric and disjoint from B
    for (Elem x : a) CHECK(a.contains(ctx.neg(x)));
    CHECK(set_difference(a, b).size() == a.size());

    const u128 n = count_sum_product(ctx, a, b, nc.sets.at("C"), nc.sets.at("D"),
                                     CountAlgorithm::Brute).n;
    CHECK(n == 0);
    const u128 product = static_cast<u128>(a.size()) * b.size() * 13 * 1;
    CHECK(product * 8 >= static_cast<u128>(13) * 13 * 13);
    CHECK(verify_construction(ctx, nc).ok);

    CHECK_THROWS_AS(build_sumproduct_tight(FieldCtx::make(11, 1)), BadParametersError);
}
