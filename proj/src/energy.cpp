#include "charsum/energy.hpp"

#include <unordered_map>

namespace charsum {

EnergyValue additive_energy(const FieldCtx& ctx, const Subset& S) {
    const auto& v = S.values();
    const std::size_t n = v.size();
    EnergyValue total = 0;
    const bool dense = static_cast<u128>(n) * n * 4 >= ctx.q();
    if (dense) {
        std::vector<std::uint64_t> r(ctx.q(), 0);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) ++r[ctx.add(v[i], v[j])];
        }
        for (std::uint64_t c : r) total += static_cast<u128>(c) * c;
    } else {
        std::unordered_map<Elem, std::uint64_t> r;
        r.reserve(n * n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) ++r[ctx.add(v[i], v[j])];
        }
        for (const auto& [_, c] : r) total += static_cast<u128>(c) * c;
    }
    return total;
}

EnergyValue additive_energy_bruteforce(const FieldCtx& ctx, const Subset& S) {
    const auto& v = S.values();
    const std::size_t n = v.size();
    if (n > 20) throw TooLargeError("brute-force energy is limited to 20 elements");
    EnergyValue count = 0;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            const Elem lhs = ctx.add(v[a], v[b]);
            for (std::size_t c = 0; c < n; ++c) {
                for (std::size_t d = 0; d < n; ++d) {
                    if (lhs == ctx.add(v[c], v[d])) ++count;
                }
            }
        }
    }
    return count;
}

}  // namespace charsum
