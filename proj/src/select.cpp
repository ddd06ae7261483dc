#include "charsum/select.hpp"

#include <algorithm>

#include "charsum/rng.hpp"

namespace charsum {
namespace {

// Next size-m index combination in lexicographic order; false when exhausted.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
    const std::size_t m = idx.size();
    std::size_t i = m;
    while (i-- > 0) {
        if (idx[i] != i + n - m) {
            ++idx[i];
            for (std::size_t j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

Subset pick(const std::vector<Elem>& pool, const std::vector<std::size_t>& idx) {
    std::vector<Elem> v;
    v.reserve(idx.size());
    for (std::size_t i : idx) v.push_back(pool[i]);
    return Subset::from_sorted(std::move(v));
}

Subset exhaustive_minimum(const FieldCtx& ctx, const Subset& D, std::uint64_t m,
                          EnergyValue& best_energy) {
    const auto& pool = D.values();
    std::vector<std::size_t> idx(m);
    for (std::size_t i = 0; i < m; ++i) idx[i] = i;
    Subset best = pick(pool, idx);
    best_energy = additive_energy(ctx, best);
    while (next_combination(idx, pool.size())) {
        Subset cand = pick(pool, idx);
        const EnergyValue e = additive_energy(ctx, cand);
        if (e < best_energy) {  // strict: the first (lexicographically least) minimizer wins
            best_energy = e;
            best = std::move(cand);
        }
    }
    return best;
}

Subset local_search(const FieldCtx& ctx, const Subset& D, std::uint64_t m,
                    std::uint64_t seed, std::uint64_t budget, EnergyValue& out_energy) {
    const auto& pool = D.values();
    Rng rng(seed);
    std::vector<std::uint64_t> start = sample_distinct(rng, pool.size(), m);
    std::vector<Elem> current;
    current.reserve(m);
    for (std::uint64_t i : start) current.push_back(pool[i]);

    EnergyValue cur_e = additive_energy(ctx, Subset::from_sorted(current));
    std::uint64_t evals = 1;
    bool improved = true;
    while (improved && evals < budget) {
        improved = false;
        std::vector<Elem> best_candidate;
        EnergyValue best_e = cur_e;
        for (std::size_t out = 0; out < current.size() && evals < budget; ++out) {
            for (Elem in : pool) {
                if (evals >= budget) break;
                if (std::binary_search(current.begin(), current.end(), in)) continue;
                std::vector<Elem> cand = current;
                cand[out] = in;
                std::sort(cand.begin(), cand.end());
                const EnergyValue e = additive_energy(ctx, Subset::from_sorted(cand));
                ++evals;
                if (e < best_e || (e == best_e && best_e < cur_e && cand < best_candidate)) {
                    best_e = e;
                    best_candidate = std::move(cand);
                }
            }
        }
        if (best_e < cur_e) {
            cur_e = best_e;
            current = std::move(best_candidate);
            improved = true;
        }
    }
    out_energy = cur_e;
    return Subset::from_sorted(std::move(current));
}

}  // namespace

const char* to_string(Strategy s) {
    switch (s) {
        case Strategy::Exhaustive: return "exhaustive";
        case Strategy::LocalSearch: return "local-search";
        case Strategy::ProofRule: return "proof-rule";
    }
    return "?";
}

Strategy strategy_from_string(const std::string& name) {
    if (name == "exhaustive") return Strategy::Exhaustive;
    if (name == "local-search") return Strategy::LocalSearch;
    if (name == "proof-rule") return Strategy::ProofRule;
    throw ValidationError("unknown strategy '" + name + "'");
}

SelectionResult select_low_energy_subset(const FieldCtx& ctx, const Subset& D,
                                         const RationalMap& f, const SelectionOptions& opts) {
    validate(opts.params);
    if (D.size() < 2) throw DomainError("selection needs |D| >= 2");

    // stability check, distinguishing poles from escapes
    for (Elem d : D) {
        const auto y = eval_map(ctx, f, d);
        if (!y) throw PoleInSetError("map has a pole at " + std::to_string(d));
        if (!D.contains(*y)) throw UnstableSetError("map does not send D into D");
    }

    SelectionResult res;
    res.strategy = opts.strategy;
    res.lambda = opts.params.lambda;
    res.kappa = opts.params.kappa;

    const auto status = nonlinearity_status(ctx, f);
    switch (status.kind) {
        case NonlinearityStatus::Kind::Whitelisted:
            break;
        case NonlinearityStatus::Kind::Violates:
            if (!opts.override_nonlinearity)
                throw ConditionViolatedError("map is of the linear-family shape; pass the override to proceed");
            res.assumed_nonlinearity = true;
            break;
        case NonlinearityStatus::Kind::Unknown:
            if (!opts.assume_nonlinearity && !opts.override_nonlinearity)
                throw ConditionViolatedError("nonlinearity undecided; pass the assumption flag to proceed");
            res.assumed_nonlinearity = true;
            break;
    }

    const std::uint64_t n = D.size();
    const std::uint64_t floor_size = (n + f.k) / (f.k + 1);  // ceil(n / (k+1))
    res.size_floor = floor_size;

    switch (opts.strategy) {
        case Strategy::Exhaustive: {
            if (n > 20) throw TooLargeError("exhaustive selection is limited to 20 elements");
            res.u = exhaustive_minimum(ctx, D, floor_size, res.energy);
            break;
        }
        case Strategy::LocalSearch: {
            res.u = local_search(ctx, D, floor_size, opts.seed, opts.budget, res.energy);
            break;
        }
        case Strategy::ProofRule: {
            if (!opts.split) throw BadParametersError("proof-rule strategy needs a split (S, T)");
            const Subset& s = opts.split->first;
            const Subset& t = opts.split->second;
            if (set_union(s, t).values() != D.values() || s.size() + t.size() != n) {
                throw BadParametersError("split must partition D into disjoint S and T");
            }
            if (static_cast<u128>(s.size()) * (f.k + 1) >= n) {
                res.u = s;
            } else {
                res.u = image(ctx, f, t);
            }
            res.energy = additive_energy(ctx, res.u);
            break;
        }
    }
    return res;
}

}  // namespace charsum
