#include "charsum/rng.hpp"

#include <set>
#include <stdexcept>

namespace charsum {

std::vector<std::uint64_t> sample_distinct(Rng& rng, std::uint64_t universe, std::size_t m) {
    if (m > universe) throw std::invalid_argument("sample size exceeds universe");
    std::set<std::uint64_t> picked;
    while (picked.size() < m) picked.insert(rng.next_below(universe));
    return std::vector<std::uint64_t>(picked.begin(), picked.end());
}

}  // namespace charsum
