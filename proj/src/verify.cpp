#include "charsum/verify.hpp"

#include <cmath>

#include "charsum/bounds.hpp"
#include "charsum/characters.hpp"
#include "charsum/energy.hpp"
#include "charsum/rng.hpp"
#include "charsum/u128.hpp"

namespace charsum {
namespace {

Subset random_subset(Rng& rng, const FieldCtx& ctx, std::size_t max_size) {
    const std::size_t cap = static_cast<std::size_t>(
        std::min<std::uint64_t>(ctx.q(), static_cast<std::uint64_t>(max_size)));
    const std::size_t want = 1 + rng.next_below(cap);
    return Subset::of(ctx, sample_distinct(rng, ctx.q(), want));
}

Elem random_elem(Rng& rng, const FieldCtx& ctx) { return rng.next_below(ctx.q()); }

Elem random_nonzero(Rng& rng, const FieldCtx& ctx) { return 1 + rng.next_below(ctx.q() - 1); }

}  // namespace

std::vector<CheckResult> run_identity_checks(const FieldCtx& ctx, std::uint64_t seed,
                                             unsigned trials) {
    std::vector<CheckResult> results;
    Rng rng(seed);
    const std::uint64_t q = ctx.q();
    const std::uint64_t p = ctx.p();
    auto record = [&](const std::string& name, bool pass, const std::string& detail = "") {
        results.push_back({name, pass, detail});
    };

    {  // ring axioms on random triples
        bool ok = true;
        for (unsigned t = 0; t < trials && ok; ++t) {
            const Elem a = random_elem(rng, ctx), b = random_elem(rng, ctx), c = random_elem(rng, ctx);
            ok = ctx.add(ctx.add(a, b), c) == ctx.add(a, ctx.add(b, c)) &&
                 ctx.mul(ctx.mul(a, b), c) == ctx.mul(a, ctx.mul(b, c)) &&
                 ctx.mul(a, ctx.add(b, c)) == ctx.add(ctx.mul(a, b), ctx.mul(a, c)) &&
                 ctx.add(a, b) == ctx.add(b, a) && ctx.mul(a, b) == ctx.mul(b, a);
        }
        record("ring-axioms", ok);
    }

    {  // multiplicative inverses; exhaustive on small fields
        bool ok = true;
        if (q <= 4096) {
            for (Elem a = 1; a < q && ok; ++a) ok = ctx.mul(a, ctx.inv(a)) == ctx.one();
        } else {
            for (unsigned t = 0; t < trials && ok; ++t) {
                const Elem a = random_nonzero(rng, ctx);
                ok = ctx.mul(a, ctx.inv(a)) == ctx.one();
            }
        }
        record("inverses", ok);
    }

    {  // encoding round-trip
        bool ok = true;
        if (q <= 4096) {
            for (Elem x = 0; x < q && ok; ++x) ok = ctx.from_coeffs(ctx.coeffs(x)) == x;
        } else {
            for (unsigned t = 0; t < trials && ok; ++t) {
                const Elem x = random_elem(rng, ctx);
                ok = ctx.from_coeffs(ctx.coeffs(x)) == x;
            }
        }
        record("encode-roundtrip", ok);
    }

    {  // auto-selected modulus is deterministic
        const FieldCtx a = FieldCtx::make(p, ctx.r());
        const FieldCtx b = FieldCtx::make(p, ctx.r());
        record("modulus-deterministic", a == b);
    }

    {  // trace: fibers of equal size q/p, Frobenius invariance, linearity
        bool ok = true;
        if (q <= (1ULL << 21)) {
            const auto fibers = trace_fiber_sizes(ctx);
            for (std::uint64_t s = 0; s < p; ++s) {
                if (fibers[s] != q / p) ok = false;
            }
        }
        for (unsigned t = 0; t < trials && ok; ++t) {
            const Elem x = random_elem(rng, ctx), y = random_elem(rng, ctx);
            ok = ctx.trace(ctx.pow(x, p)) == ctx.trace(x) &&
                 (ctx.trace(x) + ctx.trace(y)) % p == ctx.trace(ctx.add(x, y));
        }
        record("trace-fibers", ok);
    }

    {  // character orthogonality: sum over the field vanishes for a != 0
        bool ok = true;
        for (unsigned t = 0; t < 5 && ok; ++t) {
            const Elem a = random_nonzero(rng, ctx);
            std::vector<std::uint64_t> hist(p, 0);
            for (Elem x = 0; x < q; ++x) ++hist[ctx.trace(ctx.mul(a, x))];
            ok = CycloSum::from_counts(p, hist).is_zero();
        }
        record("orthogonality", ok);
    }

    {  // character homomorphism
        bool ok = true;
        for (unsigned t = 0; t < trials && ok; ++t) {
            const CharId id{random_elem(rng, ctx)};
            const Elem x = random_elem(rng, ctx), y = random_elem(rng, ctx);
            ok = char_eval(ctx, id, x) * char_eval(ctx, id, y) == char_eval(ctx, id, ctx.add(x, y));
        }
        record("homomorphism", ok);
    }

    {  // exact fourth moment: sum_c |sum_u psi(cu)|^4 = q E(U)
        bool ok = true;
        for (unsigned t = 0; t < 5 && ok; ++t) {
            const Subset u = random_subset(rng, ctx, 12);
            const CharId id{random_nonzero(rng, ctx)};
            CycloSum total(p);
            for (Elem c = 0; c < q; ++c) {
                const CycloSum inner = CycloSum::from_counts(p, inner_sum_counts(ctx, id, c, u));
                const CycloSum ns = norm_square(inner);
                total += ns * ns;
            }
            const auto exact = total.as_integer();
            const EnergyValue e = additive_energy(ctx, u);
            ok = exact.has_value() && *exact >= 0 &&
                 BigInt(to_string(static_cast<u128>(q) * e)) == *exact;
        }
        record("fourth-moment", ok);
    }

    {  // double-sum bounds on random pairs
        bool ok = true;
        for (unsigned t = 0; t < trials && ok; ++t) {
            const Subset c = random_subset(rng, ctx, 20);
            const Subset d = random_subset(rng, ctx, 20);
            const CharId id{random_nonzero(rng, ctx)};
            const double observed = magnitude(double_char_sum(ctx, id, c, d));
            const double classical = classical_bound(c.size(), d.size(), q);
            const double via_energy = energy_bound(c.size(), additive_energy(ctx, d), q);
            ok = observed <= classical * (1 + 1e-6) && observed <= via_energy * (1 + 1e-6);
        }
        record("double-sum-bounds", ok);
    }

    {  // canonical form: idempotent, magnitude consistent with norm_square
        bool ok = true;
        for (unsigned t = 0; t < trials && ok; ++t) {
            std::vector<BigInt> coeffs(p);
            for (std::uint64_t j = 0; j < p; ++j) coeffs[j] = BigInt(rng.next_below(1000));
            const CycloSum s = CycloSum::from_coeffs(p, coeffs);
            const CycloSum again = CycloSum::from_coeffs(p, s.coeffs());
            const double mag = magnitude(s);
            const double ns = magnitude(norm_square(s));
            ok = again == s && std::abs(mag * mag - ns) <= 1e-9 * std::max(1.0, ns);
        }
        record("canonical-form", ok);
    }

    return results;
}

}  // namespace charsum
