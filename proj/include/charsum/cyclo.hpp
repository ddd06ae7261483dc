#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace charsum {

using BigInt = boost::multiprecision::cpp_int;

// Exact element of Z[zeta_p], zeta_p a primitive p-th root of unity, stored
// as an integer coefficient vector of length p modulo the all-ones relation
// 1 + zeta + ... + zeta^{p-1} = 0.  Canonical form: the minimum coefficient
// is 0, which picks a unique nonnegative representative of each class.
//
// Character sums live here so that orthogonality and moment identities are
// exact integer statements; floating point enters only through magnitude().
class CycloSum {
public:
    explicit CycloSum(std::uint64_t order);  // zero
    static CycloSum root(std::uint64_t order, std::uint64_t exponent);  // zeta^e
    static CycloSum integer(std::uint64_t order, BigInt n);
    // sum of counts[j] copies of zeta^j
    static CycloSum from_counts(std::uint64_t order, const std::vector<std::uint64_t>& counts);
    static CycloSum from_coeffs(std::uint64_t order, std::vector<BigInt> coeffs);

    std::uint64_t order() const { return p_; }
    const std::vector<BigInt>& coeffs() const { return c_; }

    CycloSum& operator+=(const CycloSum& o);
    CycloSum& operator-=(const CycloSum& o);
    CycloSum& operator*=(const CycloSum& o);
    friend CycloSum operator+(CycloSum a, const CycloSum& b) { return a += b; }
    friend CycloSum operator-(CycloSum a, const CycloSum& b) { return a -= b; }
    friend CycloSum operator*(CycloSum a, const CycloSum& b) { return a *= b; }
    bool operator==(const CycloSum&) const = default;

    // Complex conjugate: index negation mod p.
    CycloSum conjugate() const;
    bool is_zero() const;
    // Engaged iff the value is a rational integer (all tail coefficients equal).
    std::optional<BigInt> as_integer() const;

private:
    void canonicalize();
    std::uint64_t p_;
    std::vector<BigInt> c_;
};

// s times its conjugate, exact; the result is real (fixed by conjugation).
CycloSum norm_square(const CycloSum& s);

// |s| evaluated in floating point; exact integer fast path when the value is
// a rational integer.
double magnitude(const CycloSum& s);

}  // namespace charsum
