#pragma once

#include <string>
#include <utility>

#include "charsum/field.hpp"

namespace charsum {

// Polynomials over F_q: coefficient vectors, constant term first, no
// trailing zeros; the empty vector is the zero polynomial.
using Poly = std::vector<Elem>;

namespace poly {

inline bool is_zero(const Poly& f) { return f.empty(); }
inline int deg(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Poly normalized(Poly f);
Poly constant(Elem c);
Poly identity();  // X

Poly add(const FieldCtx& ctx, const Poly& a, const Poly& b);
Poly sub(const FieldCtx& ctx, const Poly& a, const Poly& b);
Poly mul(const FieldCtx& ctx, const Poly& a, const Poly& b);
Poly scale(const FieldCtx& ctx, const Poly& a, Elem c);
std::pair<Poly, Poly> divmod(const FieldCtx& ctx, Poly a, const Poly& b);
Poly gcd(const FieldCtx& ctx, Poly a, Poly b);  // monic unless zero
Poly monic(const FieldCtx& ctx, Poly f);
Elem eval(const FieldCtx& ctx, const Poly& f, Elem x);
bool equal(const Poly& a, const Poly& b);

// f(X)^p via the Frobenius: coefficients to the p-th power, exponents times p.
Poly frobenius_power(const FieldCtx& ctx, const Poly& f);

// "c0,c1,..." with element encodings; "0" for the zero polynomial.
std::string to_string(const Poly& f);
Poly parse(const FieldCtx& ctx, const std::string& text);

}  // namespace poly
}  // namespace charsum
