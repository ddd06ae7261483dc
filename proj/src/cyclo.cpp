#include "charsum/cyclo.hpp"

#include <cmath>

#include "charsum/errors.hpp"

namespace charsum {

CycloSum::CycloSum(std::uint64_t order) : p_(order), c_(order) {
    if (order < 2) throw DomainError("root-of-unity order must be at least 2");
}

CycloSum CycloSum::root(std::uint64_t order, std::uint64_t exponent) {
    CycloSum s(order);
    s.c_[exponent % order] = 1;
    return s;
}

CycloSum CycloSum::integer(std::uint64_t order, BigInt n) {
    CycloSum s(order);
    s.c_[0] = std::move(n);
    s.canonicalize();
    return s;
}

CycloSum CycloSum::from_counts(std::uint64_t order, const std::vector<std::uint64_t>& counts) {
    if (counts.size() != order) throw DomainError("count vector length must equal the order");
    CycloSum s(order);
    for (std::uint64_t j = 0; j < order; ++j) s.c_[j] = counts[j];
    s.canonicalize();
    return s;
}

CycloSum CycloSum::from_coeffs(std::uint64_t order, std::vector<BigInt> coeffs) {
    if (coeffs.size() != order) throw DomainError("coefficient vector length must equal the order");
    CycloSum s(order);
    s.c_ = std::move(coeffs);
    s.canonicalize();
    return s;
}

void CycloSum::canonicalize() {
    const BigInt* min = &c_[0];
    for (const BigInt& v : c_) {
        if (v < *min) min = &v;
    }
    if (*min == 0) return;
    const BigInt shift = *min;  // copy; subtracting the all-ones vector times shift
    for (BigInt& v : c_) v -= shift;
}

CycloSum& CycloSum::operator+=(const CycloSum& o) {
    if (p_ != o.p_) throw DomainError("mixed root-of-unity orders");
    for (std::uint64_t j = 0; j < p_; ++j) c_[j] += o.c_[j];
    canonicalize();
    return *this;
}

CycloSum& CycloSum::operator-=(const CycloSum& o) {
    if (p_ != o.p_) throw DomainError("mixed root-of-unity orders");
    for (std::uint64_t j = 0; j < p_; ++j) c_[j] -= o.c_[j];
    canonicalize();
    return *this;
}

CycloSum& CycloSum::operator*=(const CycloSum& o) {
    if (p_ != o.p_) throw DomainError("mixed root-of-unity orders");
    std::vector<BigInt> out(p_);
    for (std::uint64_t i = 0; i < p_; ++i) {
        if (c_[i] == 0) continue;
        for (std::uint64_t j = 0; j < p_; ++j) {
            if (o.c_[j] == 0) continue;
            std::uint64_t k = i + j;
            if (k >= p_) k -= p_;
            out[k] += c_[i] * o.c_[j];
        }
    }
    c_ = std::move(out);
    canonicalize();
    return *this;
}

CycloSum CycloSum::conjugate() const {
    CycloSum s(p_);
    for (std::uint64_t j = 0; j < p_; ++j) s.c_[(p_ - j) % p_] = c_[j];
    s.canonicalize();
    return s;
}

bool CycloSum::is_zero() const {
    for (const BigInt& v : c_) {
        if (v != 0) return false;
    }
    return true;
}

std::optional<BigInt> CycloSum::as_integer() const {
    for (std::uint64_t j = 2; j < p_; ++j) {
        if (c_[j] != c_[1]) return std::nullopt;
    }
    return c_[0] - c_[1];
}

CycloSum norm_square(const CycloSum& s) { return s * s.conjugate(); }

double magnitude(const CycloSum& s) {
    if (auto n = s.as_integer()) {
        const double v = n->convert_to<double>();
        return v < 0 ? -v : v;
    }
    const long double tau = 6.283185307179586476925286766559L;
    long double re = 0, im = 0;
    const auto& c = s.coeffs();
    const std::uint64_t p = s.order();
    for (std::uint64_t j = 0; j < p; ++j) {
        if (c[j] == 0) continue;
        const long double w = c[j].convert_to<long double>();
        const long double ang = tau * static_cast<long double>(j) / static_cast<long double>(p);
        re += w * std::cos(ang);
        im += w * std::sin(ang);
    }
    return static_cast<double>(std::sqrt(re * re + im * im));
}

}  // namespace charsum
