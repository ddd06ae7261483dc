#pragma once

#include <optional>
#include <string>

#include "charsum/polynomial.hpp"

namespace charsum {

// A reduced rational function over F_q: coprime numerator/denominator with
// monic denominator, plus its degree k = max(deg num, deg den).
struct RationalMap {
    Poly num;
    Poly den;
    unsigned k = 0;

    bool operator==(const RationalMap&) const = default;
};

// Normalizes: cancels the gcd, makes the denominator monic, sets k.
// ZeroDenominator when den = 0.
RationalMap reduce(const FieldCtx& ctx, Poly num, Poly den);

// num(x)/den(x); nullopt marks a pole (den(x) = 0, and then num(x) != 0
// because the map is reduced).
std::optional<Elem> eval_map(const FieldCtx& ctx, const RationalMap& f, Elem x);

// True iff f has no pole in D and f(D) is contained in D.
bool maps_into(const FieldCtx& ctx, const RationalMap& f, const Subset& D);

// f(T), deduplicated.  PoleInSet when T contains a pole.
// |image| >= ceil(|T| / k) for nonconstant maps: a value has at most k preimages.
Subset image(const FieldCtx& ctx, const RationalMap& f, const Subset& T);

// Status of the nonlinearity requirement on f: maps of the shape
// a(g(X)^p - g(X)) + bX + c (for rational g) break the selection machinery,
// and the identity map is the canonical offender.
//
// Whitelisted: registered families known to qualify (1/X for any q; X^2 for
// odd q).  Violates: a witness (a, b, c, g) was found by a bounded syntactic
// search over polynomial g of degree <= 2.  Unknown: neither registry nor
// search decided; callers may proceed only under an explicit assumption flag.
struct LinearityWitness {
    Elem a = 0;
    Elem b = 0;
    Elem c = 0;
    Poly g;
};

struct NonlinearityStatus {
    enum class Kind { Whitelisted, Violates, Unknown };
    Kind kind = Kind::Unknown;
    std::optional<LinearityWitness> witness;
};

NonlinearityStatus nonlinearity_status(const FieldCtx& ctx, const RationalMap& f);

// "num / den" with comma-separated element encodings, constant term first;
// the denominator part may be omitted for polynomials.
RationalMap parse_rational_map(const FieldCtx& ctx, const std::string& text);
std::string to_string(const RationalMap& f);

}  // namespace charsum
