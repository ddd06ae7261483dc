#pragma once

#include "charsum/cyclo.hpp"
#include "charsum/field.hpp"

namespace charsum {

// Index into the additive dual group: psi_a(x) = zeta_p^{Tr(a x)}.
// Every additive character of F_q arises this way; nontrivial iff a != 0,
// and a = 1 is the canonical character.
struct CharId {
    Elem a = 1;
    bool trivial() const { return a == 0; }
};

// zeta_p^{Tr(a x)}, a single root of unity in canonical form.
CycloSum char_eval(const FieldCtx& ctx, CharId id, Elem x);

// Exact value of sum_{c in C, d in D} psi_a(c d).  O(|C||D|) trace lookups
// accumulated into a histogram over trace values, one zeta power per class.
CycloSum double_char_sum(const FieldCtx& ctx, CharId id, const Subset& C, const Subset& D);

// sum_{c in C, u in U} psi_a(c u) with C fixed over the whole field is the
// c-indexed family used by moment identities: returns per-c inner sums'
// histogram of trace values for a single c.
std::vector<std::uint64_t> inner_sum_counts(const FieldCtx& ctx, CharId id, Elem c, const Subset& U);

}  // namespace charsum
