#include "doctest.h"

#include "charsum/cyclo.hpp"
#include "charsum/rng.hpp"

#include <cmath>

using namespace charsum;

TEST_CASE("canonical form keeps the minimum at zero") {
    // 2 + zeta + zeta^2 collapses to 1 for p = 3
    const CycloSum s = CycloSum::from_coeffs(3, {BigInt(2), BigInt(1), BigInt(1)});
    CHECK(s.coeffs() == std::vector<BigInt>{BigInt(1), BigInt(0), BigInt(0)});
    CHECK(s.as_integer().value() == 1);

    Rng rng(7);
    for (int t = 0; t < 50; ++t) {
        std::vector<BigInt> c(5);
        for (auto& v : c) v = BigInt(rng.next_below(100)) - 50;
        const CycloSum a = CycloSum::from_coeffs(5, c);
        CHECK(CycloSum::from_coeffs(5, a.coeffs()) == a);  // idempotent
        BigInt least = a.coeffs()[0];
        for (const auto& v : a.coeffs()) least = std::min(least, v);
        CHECK(least == 0);
    }
}

TEST_CASE("integers and roots of unity") {
    CHECK(CycloSum::integer(5, 81).as_integer().value() == 81);
    CHECK(CycloSum::integer(5, -3).as_integer().value() == -3);
    CHECK(CycloSum(7).is_zero());
    CHECK(!CycloSum::root(7, 3).as_integer().has_value());
    // the all-ones vector is zero
    const CycloSum ones = CycloSum::from_coeffs(5, std::vector<BigInt>(5, BigInt(1)));
    CHECK(ones.is_zero());
}

TEST_CASE("norm square examples") {
    CHECK(norm_square(CycloSum::root(5, 2)).as_integer().value() == 1);
    CHECK(norm_square(CycloSum(5)).is_zero());
    // (1 + zeta)(1 + zeta^2) = 2 + zeta + zeta^2 = 1 for p = 3
    const CycloSum one_plus_zeta =
        CycloSum::from_coeffs(3, {BigInt(1), BigInt(1), BigInt(0)});
    CHECK(norm_square(one_plus_zeta).as_integer().value() == 1);
}

TEST_CASE("magnitude") {
    CHECK(magnitude(CycloSum::integer(3, 81)) == 81.0);
    CHECK(magnitude(CycloSum::root(5, 1)) == 1.0);
    CHECK(magnitude(CycloSum(3)) == 0.0);

    Rng rng(11);
    for (int t = 0; t < 50; ++t) {
        std::vector<BigInt> c(7);
        for (auto& v : c) v = BigInt(rng.next_below(500));
        const CycloSum s = CycloSum::from_coeffs(7, c);
        const double m = magnitude(s);
        const double ns = magnitude(norm_square(s));
        CHECK(std::abs(m * m - ns) <= 1e-9 * std::max(1.0, ns));
    }
}

TEST_CASE("p = 2 collapses to the integers") {
    const CycloSum a = CycloSum::from_coeffs(2, {BigInt(5), BigInt(2)});
    CHECK(a.as_integer().value() == 3);
    CHECK(magnitude(a) == 3.0);
    CHECK((a * a).as_integer().value() == 9);
    CHECK(a.conjugate() == a);
}

TEST_CASE("arithmetic respects the quotient relation") {
    // zeta^a * zeta^b = zeta^{a+b mod p}
    for (std::uint64_t a = 0; a < 5; ++a) {
        for (std::uint64_t b = 0; b < 5; ++b) {
            CHECK(CycloSum::root(5, a) * CycloSum::root(5, b) == CycloSum::root(5, a + b));
        }
    }
    // sum of all p-th roots vanishes
    CycloSum total(5);
    for (std::uint64_t j = 0; j < 5; ++j) total += CycloSum::root(5, j);
    CHECK(total.is_zero());
}
