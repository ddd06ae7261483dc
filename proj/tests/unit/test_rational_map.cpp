#include "doctest.h"

#include "charsum/rational_map.hpp"
#include "charsum/rng.hpp"

using namespace charsum;

TEST_CASE("reduction and degree") {
    const FieldCtx ctx = FieldCtx::make(7, 1);
    const RationalMap inv_x = reduce(ctx, {1}, {0, 1});
    CHECK(inv_x.k == 1);

    const RationalMap square = reduce(ctx, {0, 0, 1}, {1});
    CHECK(square.k == 2);

    // (X^2 - 1) / (X - 1) reduces to X + 1
    const RationalMap f = reduce(ctx, {6, 0, 1}, {6, 1});
    CHECK(f.num == Poly{1, 1});
    CHECK(f.den == Poly{1});
    CHECK(f.k == 1);

    CHECK_THROWS_AS(reduce(ctx, {1}, {}), ZeroDenominatorError);

    // reduce is idempotent
    const RationalMap again = reduce(ctx, f.num, f.den);
    CHECK(again == f);
}

TEST_CASE("evaluation and poles") {
    const FieldCtx ctx = FieldCtx::make(7, 1);
    const RationalMap inv_x = reduce(ctx, {1}, {0, 1});
    CHECK(!eval_map(ctx, inv_x, 0).has_value());
    CHECK(eval_map(ctx, inv_x, 3).value() == 5);  // 3 * 5 = 15 = 1 mod 7

    const RationalMap square = reduce(ctx, {0, 0, 1}, {1});
    Rng rng(9);
    for (int t = 0; t < 20; ++t) {
        const Elem a = rng.next_below(ctx.q());
        CHECK(eval_map(ctx, square, a).value() == ctx.mul(a, a));
    }

    // evaluating after reduction fills the removable singularity
    const RationalMap f = reduce(ctx, {6, 0, 1}, {6, 1});
    CHECK(eval_map(ctx, f, 1).value() == 2);
}

TEST_CASE("evaluation agrees before and after reduction off poles") {
    const FieldCtx ctx = FieldCtx::make(11, 1);
    const Poly raw_num = {10, 0, 1};  // X^2 - 1
    const Poly raw_den = {10, 1};     // X - 1
    const RationalMap f = reduce(ctx, raw_num, raw_den);
    for (Elem x = 0; x < ctx.q(); ++x) {
        const Elem den_val = poly::eval(ctx, raw_den, x);
        if (den_val == 0) continue;
        const Elem direct = ctx.mul(poly::eval(ctx, raw_num, x), ctx.inv(den_val));
        CHECK(eval_map(ctx, f, x).value() == direct);
    }
}

TEST_CASE("stability of D under the map") {
    const FieldCtx ctx = FieldCtx::make(13, 1);
    const RationalMap inv_x = reduce(ctx, {1}, {0, 1});
    CHECK(maps_into(ctx, inv_x, Subset::nonzero(ctx)));
    CHECK(!maps_into(ctx, inv_x, Subset::full_field(ctx)));  // pole at 0

    const RationalMap square = reduce(ctx, {0, 0, 1}, {1});
    CHECK(maps_into(ctx, square, quadratic_residues(ctx.p())));
}

TEST_CASE("image size bound and involution") {
    const FieldCtx ctx = FieldCtx::make(3, 4);
    const RationalMap square = reduce(ctx, {0, 0, 1}, {1});
    const RationalMap inv_x = reduce(ctx, {1}, {0, 1});

    // squaring glues a with -a
    const Elem a = 7;
    const Subset pair = Subset::of(ctx, {a, ctx.neg(a)});
    CHECK(image(ctx, square, pair).size() == 1);

    CHECK_THROWS_AS(image(ctx, inv_x, Subset::of(ctx, {0, 1})), PoleInSetError);

    Rng rng(31);
    for (int t = 0; t < 50; ++t) {
        const std::size_t want = 1 + rng.next_below(30);
        std::vector<Elem> vals = sample_distinct(rng, ctx.q() - 1, want);
        for (auto& v : vals) v += 1;  // stay inside F_q^*
        const Subset s = Subset::of(ctx, vals);
        // inversion is injective, squaring at most 2-to-1
        CHECK(image(ctx, inv_x, s).size() == s.size());
        CHECK(image(ctx, square, s).size() * square.k >= s.size());
        // applying inversion twice returns the set
        CHECK(image(ctx, inv_x, image(ctx, inv_x, s)) == s);
    }
}

TEST_CASE("image stays inside a stable set") {
    const FieldCtx ctx = FieldCtx::make(13, 1);
    const RationalMap square = reduce(ctx, {0, 0, 1}, {1});
    const Subset residues = quadratic_residues(ctx.p());
    CHECK(maps_into(ctx, square, residues));
    CHECK(is_subset_of(image(ctx, square, residues), residues));
}

TEST_CASE("nonlinearity status: whitelist") {
    const FieldCtx odd = FieldCtx::make(7, 1);
    CHECK(nonlinearity_status(odd, reduce(odd, {1}, {0, 1})).kind ==
          NonlinearityStatus::Kind::Whitelisted);
    CHECK(nonlinearity_status(odd, reduce(odd, {0, 0, 1}, {1})).kind ==
          NonlinearityStatus::Kind::Whitelisted);

    // squaring is not whitelisted in characteristic 2; the witness search
    // finds X^2 = g^2 - g + X with g = X
    const FieldCtx even = FieldCtx::make(2, 5);
    const auto status = nonlinearity_status(even, reduce(even, {0, 0, 1}, {1}));
    CHECK(status.kind == NonlinearityStatus::Kind::Violates);
    REQUIRE(status.witness.has_value());
    CHECK(status.witness->g == Poly{0, 1});
}

TEST_CASE("nonlinearity status: violations carry verified witnesses") {
    const FieldCtx ctx = FieldCtx::make(5, 2);
    // the identity map
    const auto id_status = nonlinearity_status(ctx, reduce(ctx, {0, 1}, {1}));
    REQUIRE(id_status.kind == NonlinearityStatus::Kind::Violates);
    CHECK(id_status.witness->a == 0);
    CHECK(id_status.witness->b == 1);
    CHECK(id_status.witness->c == 0);
    CHECK(id_status.witness->g.empty());

    // a(g^p - g) + bX + c assembled by hand, then recovered
    const Elem a = 3, b = 7, c = 11;
    const Poly g = {0, 1};  // X
    Poly f = poly::scale(ctx, poly::sub(ctx, poly::frobenius_power(ctx, g), g), a);
    f = poly::add(ctx, f, Poly{c, b});
    const auto status = nonlinearity_status(ctx, reduce(ctx, f, {1}));
    REQUIRE(status.kind == NonlinearityStatus::Kind::Violates);
    // reconstruct and compare
    Poly back = poly::scale(
        ctx, poly::sub(ctx, poly::frobenius_power(ctx, status.witness->g), status.witness->g),
        status.witness->a);
    back = poly::add(ctx, back, Poly{status.witness->c, status.witness->b});
    CHECK(back == f);
}

TEST_CASE("nonlinearity status: quadratic g witnesses") {
    const FieldCtx ctx = FieldCtx::make(3, 2);
    const Elem a = 5, b = 2, c = 8;
    const Poly g = {0, 4, 7};  // g2 != 0, degree 2
    Poly f = poly::scale(ctx, poly::sub(ctx, poly::frobenius_power(ctx, g), g), a);
    f = poly::add(ctx, f, Poly{c, b});
    const auto status = nonlinearity_status(ctx, reduce(ctx, f, {1}));
    REQUIRE(status.kind == NonlinearityStatus::Kind::Violates);
    Poly back = poly::scale(
        ctx, poly::sub(ctx, poly::frobenius_power(ctx, status.witness->g), status.witness->g),
        status.witness->a);
    back = poly::add(ctx, back, Poly{status.witness->c, status.witness->b});
    CHECK(back == f);
}

TEST_CASE("nonlinearity status: unknown when nothing decides") {
    const FieldCtx ctx = FieldCtx::make(2, 5);
    // X^3 + X: degree 3 is neither p nor 2p for p = 2
    const auto status = nonlinearity_status(ctx, reduce(ctx, {0, 1, 0, 1}, {1}));
    CHECK(status.kind == NonlinearityStatus::Kind::Unknown);
}

TEST_CASE("parsing round-trips") {
    const FieldCtx ctx = FieldCtx::make(5, 2);
    const RationalMap f = parse_rational_map(ctx, "1 / 0,1");
    CHECK(f.num == Poly{1});
    CHECK(f.den == Poly{0, 1});

    const RationalMap g = parse_rational_map(ctx, "0,0,1");
    CHECK(g.den == Poly{1});
    CHECK(g.k == 2);

    CHECK_THROWS_AS(parse_rational_map(ctx, "abc"), ValidationError);
    CHECK_THROWS_AS(parse_rational_map(ctx, "25 / 1"), ValidationError);
}
