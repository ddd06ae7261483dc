#pragma once

#include <cstdint>
#include <string>

namespace charsum {

// 128-bit accumulators for the counting kernels: q^3-sized counts overflow
// 64 bits once q approaches 2^22.
using u128 = unsigned __int128;

inline std::string to_string(u128 v) {
    if (v == 0) return "0";
    char buf[40];
    int i = 40;
    while (v > 0) {
        buf[--i] = static_cast<char>('0' + static_cast<unsigned>(v % 10));
        v /= 10;
    }
    return std::string(buf + i, buf + 40);
}

inline u128 u128_from(std::uint64_t hi, std::uint64_t lo) {
    return (static_cast<u128>(hi) << 64) | lo;
}

}  // namespace charsum
