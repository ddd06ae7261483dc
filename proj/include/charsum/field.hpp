#pragma once

#include <cstdint>
#include <vector>

#include "charsum/errors.hpp"

namespace charsum {

// A field element of F_{p^r} in canonical integer encoding: the coefficient
// vector (c_0, ..., c_{r-1}) over F_p packed as sum c_i p^i, value in [0, q).
// The packing gives elements a total order used for canonical set
// representations and tie-breaking.
using Elem = std::uint64_t;

// Immutable description of F_{p^r} = F_p[X]/(modulus).  All operations are
// pure functions of (ctx, inputs); a constructed context is safe to share
// across threads.
class FieldCtx {
public:
    // Auto-selected modulus: the lexicographically least monic irreducible of
    // degree r over F_p, coefficients compared low-degree-first as base-p
    // digits.  Deterministic, so element encodings are portable across runs.
    static FieldCtx make(std::uint64_t p, unsigned r);
    // Explicit modulus: coefficients c_0..c_r, constant term first, c_r = 1.
    static FieldCtx make(std::uint64_t p, unsigned r, std::vector<std::uint64_t> modulus);

    std::uint64_t p() const { return p_; }
    unsigned r() const { return r_; }
    std::uint64_t q() const { return q_; }
    const std::vector<std::uint64_t>& modulus() const { return modulus_; }

    bool valid(Elem x) const { return x < q_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    // Residue class of X, the generator of the power basis {1, x, ..., x^{r-1}}.
    Elem gen_x() const;
    // Prime-subfield embedding of an integer.
    Elem from_int(std::uint64_t n) const { return n % p_; }

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;  // DomainError on 0
    Elem pow(Elem a, std::uint64_t e) const;

    // Absolute trace onto F_p, value in [0, p).
    std::uint64_t trace(Elem x) const;
    // Per-element trace table, precomputed at construction for q below an
    // internal limit; empty otherwise.  Counting loops prefer it.
    const std::vector<std::uint32_t>& trace_table() const { return trace_table_; }

    // Digit view of the canonical encoding.
    std::vector<std::uint64_t> coeffs(Elem x) const;
    Elem from_coeffs(const std::vector<std::uint64_t>& c) const;

    bool operator==(const FieldCtx& o) const {
        return p_ == o.p_ && r_ == o.r_ && modulus_ == o.modulus_;
    }

private:
    FieldCtx() = default;
    void build_tables();

    std::uint64_t p_ = 0;
    std::uint64_t q_ = 0;
    unsigned r_ = 0;
    std::vector<std::uint64_t> modulus_;                    // c_0..c_r, monic
    std::vector<std::uint64_t> trace_of_basis_;             // Tr(x^j), j < r
    std::vector<std::vector<std::uint64_t>> reduction_;     // x^{r+i} mod modulus, i < r-1
    std::vector<std::uint32_t> trace_table_;
};

// A subset of F_q as a strictly increasing list of element encodings.
class Subset {
public:
    Subset() = default;

    // Sorts, deduplicates, and validates values against ctx.
    static Subset of(const FieldCtx& ctx, std::vector<Elem> values);
    static Subset full_field(const FieldCtx& ctx);
    static Subset nonzero(const FieldCtx& ctx);
    // Internal/deserialization entry: values must already be strictly increasing.
    static Subset from_sorted(std::vector<Elem> values);

    std::size_t size() const { return values_.size(); }
    bool empty() const { return values_.empty(); }
    bool contains(Elem x) const;
    const std::vector<Elem>& values() const { return values_; }
    auto begin() const { return values_.begin(); }
    auto end() const { return values_.end(); }
    bool operator==(const Subset&) const = default;

private:
    std::vector<Elem> values_;
};

Subset set_difference(const Subset& a, const Subset& b);
Subset set_union(const Subset& a, const Subset& b);
bool is_subset_of(const Subset& a, const Subset& b);

// Dual basis {w_i} of a given basis {b_j}: Tr(w_i b_j) = 1 iff i = j else 0.
// NotABasis when the Gram matrix Tr(b_i b_j) is singular.
std::vector<Elem> dual_basis(const FieldCtx& ctx, const std::vector<Elem>& basis);

// Nonzero squares of F_p, as elements of the prime subfield (valid in any
// extension of characteristic p).  EvenCharacteristic for p = 2.
Subset quadratic_residues(std::uint64_t p);

// Fiber sizes #{x : Tr(x) = s} for s in [0, p).  Exhaustive; intended for
// moderate q.
std::vector<std::uint64_t> trace_fiber_sizes(const FieldCtx& ctx);

// {x in F_q : Tr(x) in traces}.  traces holds values in [0, p).
Subset trace_fiber_union(const FieldCtx& ctx, const std::vector<std::uint64_t>& traces);

// Deterministic 64-bit primality test (Miller-Rabin with fixed bases).
bool is_prime_u64(std::uint64_t n);

}  // namespace charsum
