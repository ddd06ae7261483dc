#include "charsum/constructions.hpp"

#include <algorithm>
#include <cmath>

#include "charsum/applications.hpp"
#include "charsum/rng.hpp"
#include "charsum/u128.hpp"

namespace charsum {
namespace {

constexpr std::uint64_t kMaterializeLimit = 1ULL << 26;

void require(bool cond, const std::string& msg) {
    if (!cond) throw BadParametersError(msg);
}

std::uint64_t ap_length(std::uint64_t p) {
    // floor(0.1 sqrt(p)) = floor(isqrt(p) / 10)
    return isqrt_u64(p) / 10;
}

// {q0 + sum_{j=1}^{max_pow} a_j x^j : q0 in block, a_j in F_p} as encodings.
Subset block_plus_span(const FieldCtx& ctx, const Subset& block, unsigned max_pow) {
    std::uint64_t span = 1;
    for (unsigned j = 0; j < max_pow; ++j) span *= ctx.p();
    std::vector<Elem> out;
    out.reserve(block.size() * span);
    for (std::uint64_t t = 0; t < span; ++t) {
        const Elem high = static_cast<Elem>(t * ctx.p());
        for (Elem z : block) out.push_back(high + z);
    }
    std::sort(out.begin(), out.end());
    return Subset::from_sorted(std::move(out));
}

std::string size_param(const Subset& s) { return std::to_string(s.size()); }

}  // namespace

std::uint64_t isqrt_u64(std::uint64_t n) {
    std::uint64_t root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (root > 0 && root * root > n) --root;
    while ((root + 1) * (root + 1) <= n) ++root;
    return root;
}

const std::vector<std::string>& construction_names() {
    static const std::vector<std::string> names = {
        "ap-tight",       "subfield-tight",  "ap-fibers",        "qr-dual-basis",
        "affine-split",   "trace-intervals", "sumproduct-tight",
    };
    return names;
}

NamedConstruction build_construction(const FieldCtx& ctx, const std::string& name) {
    if (name == "ap-tight") return build_ap_tight(ctx);
    if (name == "subfield-tight") return build_subfield_tight(ctx);
    if (name == "ap-fibers") return build_ap_fibers(ctx);
    if (name == "qr-dual-basis") return build_qr_dual_basis(ctx);
    if (name == "affine-split") return build_affine_split(ctx);
    if (name == "trace-intervals") return build_trace_intervals(ctx);
    if (name == "sumproduct-tight") return build_sumproduct_tight(ctx);
    throw ValidationError("unknown construction '" + name + "'");
}

NamedConstruction build_ap_tight(const FieldCtx& ctx) {
    require(ctx.r() == 1, "ap-tight lives in a prime field (r = 1)");
    const std::uint64_t m = ap_length(ctx.p());
    if (m < 1) throw TooSmallPrimeError("need floor(0.1 sqrt(p)) >= 1, so p >= 101");
    std::vector<Elem> seg(m + 1);
    for (std::uint64_t i = 0; i <= m; ++i) seg[i] = i;
    NamedConstruction nc;
    nc.name = "ap-tight";
    nc.p = ctx.p();
    nc.r = ctx.r();
    nc.sets["C"] = Subset::from_sorted(seg);
    nc.sets["D"] = Subset::from_sorted(std::move(seg));
    nc.twist = ctx.one();
    nc.params["segment_end"] = std::to_string(m);
    return nc;
}

NamedConstruction build_subfield_tight(const FieldCtx& ctx) {
    require(ctx.r() % 2 == 0, "subfield-tight needs even degree r");
    if (ctx.q() > kMaterializeLimit) throw TooLargeError("field too large to enumerate");
    std::uint64_t sq = 1;
    for (unsigned i = 0; i < ctx.r() / 2; ++i) sq *= ctx.p();
    std::vector<Elem> sub;
    sub.reserve(sq);
    for (Elem x = 0; x < ctx.q(); ++x) {
        if (ctx.pow(x, sq) == x) sub.push_back(x);
    }
    // twist orthogonal to the subfield under the trace form: the relative
    // trace to the subfield vanishes, i.e. a^sq = -a, a != 0
    Elem twist = 0;
    for (Elem a = 1; a < ctx.q(); ++a) {
        if (ctx.pow(a, sq) == ctx.neg(a)) { twist = a; break; }
    }
    if (twist == 0) throw NoSuchCharacterError("no character trivial on the subfield");
    NamedConstruction nc;
    nc.name = "subfield-tight";
    nc.p = ctx.p();
    nc.r = ctx.r();
    nc.sets["C"] = Subset::from_sorted(sub);
    nc.sets["D"] = Subset::from_sorted(std::move(sub));
    nc.twist = twist;
    nc.params["subfield_order"] = std::to_string(sq);
    return nc;
}

NamedConstruction build_ap_fibers(const FieldCtx& ctx) {
    const std::uint64_t m = ap_length(ctx.p());
    if (m < 1) throw TooSmallPrimeError("need floor(0.1 sqrt(p)) >= 1, so p >= 101");
    std::vector<Elem> seg(m + 1);
    std::vector<std::uint64_t> traces(m + 1);
    for (std::uint64_t i = 0; i <= m; ++i) { seg[i] = i; traces[i] = i; }
    NamedConstruction nc;
    nc.name = "ap-fibers";
    nc.p = ctx.p();
    nc.r = ctx.r();
    nc.sets["C"] = Subset::from_sorted(std::move(seg));
    nc.sets["D"] = trace_fiber_union(ctx, traces);
    nc.twist = ctx.one();
    nc.params["segment_end"] = std::to_string(m);
    return nc;
}

NamedConstruction build_qr_dual_basis(const FieldCtx& ctx) {
    require(ctx.p() % 2 == 1, "qr-dual-basis needs odd characteristic");
    require(ctx.r() % 4 == 0 && ctx.r() >= 4, "qr-dual-basis needs 4 | r");
    if (ctx.q() > kMaterializeLimit) throw TooLargeError("field too large to enumerate");
    const Subset residues = quadratic_residues(ctx.p());

    std::vector<Elem> basis(ctx.r());
    for (unsigned j = 0; j < ctx.r(); ++j) basis[j] = ctx.pow(ctx.gen_x(), j);
    const std::vector<Elem> dual = dual_basis(ctx, basis);
    const Elem w0 = dual[0];

    const Subset c_raw = block_plus_span(ctx, residues, ctx.r() / 4);
    std::vector<Elem> c_vals;
    c_vals.reserve(c_raw.size());
    for (Elem v : c_raw) c_vals.push_back(ctx.mul(w0, v));
    std::sort(c_vals.begin(), c_vals.end());

    NamedConstruction nc;
    nc.name = "qr-dual-basis";
    nc.p = ctx.p();
    nc.r = ctx.r();
    nc.sets["C"] = Subset::from_sorted(std::move(c_vals));
    nc.sets["D"] = block_plus_span(ctx, residues, (3 * ctx.r()) / 4 - 1);
    nc.params["w0"] = std::to_string(w0);
    return nc;
}

NamedConstruction build_affine_split(const FieldCtx& ctx) {
    require(ctx.p() % 4 == 1, "affine-split needs p = 1 mod 4");
    require(ctx.r() % 4 == 0 && ctx.r() >= 4, "affine-split needs 4 | r");
    if (ctx.q() > kMaterializeLimit) throw TooLargeError("field too large to enumerate");
    const std::uint64_t p = ctx.p();

    std::vector<Elem> z1;
    for (std::uint64_t i = 1; i <= (p - 1) / 4; ++i) {
        z1.push_back(i);
        z1.push_back(p - i);
    }
    std::sort(z1.begin(), z1.end());
    std::vector<Elem> z2;
    for (std::uint64_t z = 1; z < p; ++z) {
        if (!std::binary_search(z1.begin(), z1.end(), z)) z2.push_back(z);
    }

    const Subset a = block_plus_span(ctx, Subset::from_sorted(z1), ctx.r() - 1);
    const Subset b = block_plus_span(ctx, Subset::from_sorted(z2), ctx.r() - 1);
    // C spans powers 1..r/4 with zero constant term; D spans powers 0..3r/4-1
    const Subset c = block_plus_span(ctx, Subset::from_sorted({0}), ctx.r() / 4);
    std::uint64_t d_span = 1;
    for (unsigned j = 0; j < (3 * ctx.r()) / 4; ++j) d_span *= p;
    std::vector<Elem> d_vals(d_span);
    for (std::uint64_t t = 0; t < d_span; ++t) d_vals[t] = t;

    NamedConstruction nc;
    nc.name = "affine-split";
    nc.p = p;
    nc.r = ctx.r();
    nc.sets["A"] = a;
    nc.sets["B"] = b;
    nc.sets["C"] = c;
    nc.sets["D"] = Subset::from_sorted(std::move(d_vals));
    nc.params["half_pairs"] = std::to_string((p - 1) / 4);
    return nc;
}

NamedConstruction build_trace_intervals(const FieldCtx& ctx) {
    if (ctx.p() < 211) throw TooSmallPrimeError("need p >= 211 to separate the trace windows");
    if (ctx.q() > kMaterializeLimit) throw TooLargeError("field too large to enumerate");
    const std::uint64_t p = ctx.p();
    const std::uint64_t m = ap_length(p);

    std::vector<Elem> seg(m + 1);
    std::vector<std::uint64_t> seg_traces(m + 1);
    for (std::uint64_t i = 0; i <= m; ++i) { seg[i] = i; seg_traces[i] = i; }

    const std::uint64_t lo = p / 200 + 1;        // least integer > 0.005 p
    const std::uint64_t hi = (p - 1) / 2;        // greatest integer < p / 2
    std::vector<std::uint64_t> window;
    for (std::uint64_t s = lo; s <= hi; ++s) window.push_back(s);

    NamedConstruction nc;
    nc.name = "trace-intervals";
    nc.p = p;
    nc.r = ctx.r();
    nc.sets["C"] = Subset::from_sorted(std::move(seg));
    nc.sets["D"] = trace_fiber_union(ctx, seg_traces);
    nc.sets["A"] = trace_fiber_union(ctx, window);
    nc.sets["B"] = nc.sets["A"];
    nc.params["segment_end"] = std::to_string(m);
    nc.params["window_lo"] = std::to_string(lo);
    nc.params["window_hi"] = std::to_string(hi);
    return nc;
}

NamedConstruction build_sumproduct_tight(const FieldCtx& ctx) {
    require(ctx.p() >= 3, "sumproduct-tight needs odd characteristic");
    require(ctx.q() % 4 == 1, "sumproduct-tight needs q = 1 mod 4");
    if (ctx.q() > kMaterializeLimit) throw TooLargeError("field too large to enumerate");

    const std::uint64_t pairs_wanted = (ctx.q() - 1) / 4;
    std::vector<Elem> a_vals;
    a_vals.reserve(2 * pairs_wanted);
    std::uint64_t taken = 0;
    for (Elem x = 1; x < ctx.q() && taken < pairs_wanted; ++x) {
        const Elem nx = ctx.neg(x);
        if (x < nx) {  // canonical representative of the pair {x, -x}
            a_vals.push_back(x);
            a_vals.push_back(nx);
            ++taken;
        }
    }
    std::sort(a_vals.begin(), a_vals.end());
    const Subset a = Subset::from_sorted(std::move(a_vals));

    NamedConstruction nc;
    nc.name = "sumproduct-tight";
    nc.p = ctx.p();
    nc.r = ctx.r();
    nc.sets["A"] = a;
    nc.sets["B"] = set_difference(Subset::nonzero(ctx), a);
    nc.sets["C"] = Subset::full_field(ctx);
    nc.sets["D"] = Subset::of(ctx, {0});
    nc.params["pairs"] = std::to_string(pairs_wanted);
    return nc;
}

ConstructionCheck verify_construction(const FieldCtx& ctx, const NamedConstruction& nc,
                                      std::uint64_t seed) {
    ConstructionCheck check;
    auto fact = [&](const std::string& k, const std::string& v) {
        check.facts.emplace_back(k, v);
    };

    if (nc.name == "ap-tight" || nc.name == "subfield-tight") {
        const Subset& c = nc.sets.at("C");
        const Subset& d = nc.sets.at("D");
        const CharId id{nc.twist.value()};
        const CycloSum sum = double_char_sum(ctx, id, c, d);
        const double observed = magnitude(sum);
        const double cd = static_cast<double>(c.size()) * static_cast<double>(d.size());
        fact("observed", std::to_string(observed));
        if (nc.name == "ap-tight") {
            check.ok = observed >= 0.99 * cd;
            fact("threshold", std::to_string(0.99 * cd));
        } else {
            const u128 target2 = static_cast<u128>(c.size()) * d.size() * ctx.q();
            const std::uint64_t target = isqrt_u64(static_cast<std::uint64_t>(target2));
            const auto exact = sum.as_integer();
            check.ok = exact.has_value() && *exact == target &&
                       static_cast<u128>(target) * target == target2;
            fact("expected", std::to_string(target));
        }
    } else if (nc.name == "ap-fibers") {
        const Subset& c = nc.sets.at("C");
        const Subset& d = nc.sets.at("D");
        const bool size_ok =
            static_cast<u128>(d.size()) * ctx.p() == static_cast<u128>(c.size()) * ctx.q();
        bool sums_ok = true;
        Rng rng(seed);
        double worst = 2.0;
        for (int trial = 0; trial < 20; ++trial) {
            const std::size_t want = 1 + rng.next_below(d.size());
            std::vector<Elem> u_vals;
            for (std::uint64_t i : sample_distinct(rng, d.size(), want))
                u_vals.push_back(d.values()[i]);
            const Subset u = Subset::from_sorted(std::move(u_vals));
            const double observed =
                magnitude(double_char_sum(ctx, CharId{nc.twist.value()}, c, u));
            const double rel = observed / (static_cast<double>(c.size()) * u.size());
            worst = std::min(worst, rel);
            if (rel < 0.99) sums_ok = false;
        }
        check.ok = size_ok && sums_ok;
        fact("size_ok", size_ok ? "1" : "0");
        fact("worst_ratio", std::to_string(worst));
    } else if (nc.name == "qr-dual-basis") {
        const TraceCover cover = trace_product_covers(ctx, nc.sets.at("C"), nc.sets.at("D"));
        const Subset residues = quadratic_residues(ctx.p());
        const TraceProfile profile = trace_profile(ctx, nc.sets.at("C"), nc.sets.at("D"));
        bool inside = true;
        for (std::uint64_t s = 0; s < ctx.p(); ++s) {
            if (profile.counts[s] != 0 && !residues.contains(s)) inside = false;
        }
        check.ok = !cover.covers && inside;
        fact("covers", cover.covers ? "1" : "0");
        fact("within_residues", inside ? "1" : "0");
        fact("missing_count", std::to_string(cover.missing.size()));
    } else if (nc.name == "affine-split") {
        const SumProductCount n = count_sum_product(ctx, nc.sets.at("A"), nc.sets.at("B"),
                                                    nc.sets.at("C"), nc.sets.at("D"),
                                                    CountAlgorithm::Convolution);
        std::uint64_t c_expect = 1, d_expect = 1;
        for (unsigned j = 0; j < ctx.r() / 4; ++j) c_expect *= ctx.p();
        for (unsigned j = 0; j < (3 * ctx.r()) / 4; ++j) d_expect *= ctx.p();
        const bool sizes_ok =
            nc.sets.at("C").size() == c_expect && nc.sets.at("D").size() == d_expect;
        check.ok = n.n == 0 && sizes_ok;
        fact("solutions", to_string(n.n));
        fact("sizes_ok", sizes_ok ? "1" : "0");
    } else if (nc.name == "trace-intervals") {
        const std::uint64_t lo = std::stoull(nc.params.at("window_lo"));
        const std::uint64_t hi = std::stoull(nc.params.at("window_hi"));
        std::vector<std::uint64_t> window;
        for (std::uint64_t s = lo; s <= hi; ++s) window.push_back(s);
        // realized trace products vs realized trace sums, by fiber arithmetic
        const TraceProfile prod = trace_profile(ctx, nc.sets.at("C"), nc.sets.at("D"));
        std::vector<bool> sum_hit(ctx.p(), false);
        for (std::uint64_t s1 : window) {
            for (std::uint64_t s2 : window) {
                std::uint64_t s = s1 + s2;
                if (s >= ctx.p()) s -= ctx.p();
                sum_hit[s] = true;
            }
        }
        bool disjoint = true;
        for (std::uint64_t s = 0; s < ctx.p(); ++s) {
            if (prod.counts[s] != 0 && sum_hit[s]) disjoint = false;
        }
        const u128 n =
            count_sum_product_fibers(ctx, window, window, nc.sets.at("C"), nc.sets.at("D"));
        check.ok = disjoint && n == 0;
        fact("disjoint", disjoint ? "1" : "0");
        fact("solutions", to_string(n));
    } else if (nc.name == "sumproduct-tight") {
        const SumProductCount n = count_sum_product(ctx, nc.sets.at("A"), nc.sets.at("B"),
                                                    nc.sets.at("C"), nc.sets.at("D"),
                                                    CountAlgorithm::Convolution);
        const u128 product = static_cast<u128>(nc.sets.at("A").size()) *
                             nc.sets.at("B").size() * nc.sets.at("C").size() *
                             nc.sets.at("D").size();
        const u128 q3 = static_cast<u128>(ctx.q()) * ctx.q() * ctx.q();
        check.ok = n.n == 0 && product * 8 >= q3;
        fact("solutions", to_string(n.n));
        fact("size_product", to_string(product));
    } else {
        throw ValidationError("unknown construction '" + nc.name + "'");
    }
    return check;
}

}  // namespace charsum
