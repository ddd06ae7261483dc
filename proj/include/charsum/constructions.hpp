#pragma once

#include <map>
#include <optional>
#include <string>

#include "charsum/characters.hpp"
#include "charsum/field.hpp"

namespace charsum {

// A named example family: concrete sets with the parameters that produced
// them.  Builders are deterministic, so repeated builds give identical
// encodings; each family's headline property is re-checked by the generic
// counting operations in verify_construction, never hard-coded.
struct NamedConstruction {
    std::string name;
    std::uint64_t p = 0;
    unsigned r = 0;
    std::map<std::string, Subset> sets;              // roles among A, B, C, D
    std::optional<Elem> twist;                       // character index, when relevant
    std::map<std::string, std::string> params;       // extra reproducibility data
};

// The closed registry:
//   ap-tight          C = D = {0..floor(0.1 sqrt(p))} in F_p; the double sum
//                     stays within 1% of |C||D| under the canonical character.
//   subfield-tight    C = D = the index-2 subfield, twist orthogonal to it;
//                     the double sum meets (|C||D|q)^{1/2} exactly.
//   ap-fibers         C as in ap-tight, D = all elements whose trace lies in
//                     C; no large subset of D improves the double sum.
//   qr-dual-basis     quadratic-residue blocks through a dual-basis element;
//                     Tr(CD) lands inside the residues, never covering F_p.
//   affine-split      constant-term classes split so that A+B misses CD
//                     entirely: zero solutions of a + b = cd.
//   trace-intervals   A, B trace windows disjoint from the trace products of
//                     the ap-fibers pair: zero solutions again.
//   sumproduct-tight  A symmetric half of F_q^*, B its complement, D = {0}:
//                     zero solutions with |A||B||C||D| of order q^3.
const std::vector<std::string>& construction_names();

NamedConstruction build_construction(const FieldCtx& ctx, const std::string& name);

NamedConstruction build_ap_tight(const FieldCtx& ctx);
NamedConstruction build_subfield_tight(const FieldCtx& ctx);
NamedConstruction build_ap_fibers(const FieldCtx& ctx);
NamedConstruction build_qr_dual_basis(const FieldCtx& ctx);
NamedConstruction build_affine_split(const FieldCtx& ctx);
NamedConstruction build_trace_intervals(const FieldCtx& ctx);
NamedConstruction build_sumproduct_tight(const FieldCtx& ctx);

// Re-verifies the family's headline property with the generic operations.
struct ConstructionCheck {
    bool ok = false;
    std::vector<std::pair<std::string, std::string>> facts;  // ordered report columns
};

ConstructionCheck verify_construction(const FieldCtx& ctx, const NamedConstruction& nc,
                                      std::uint64_t seed = 0);

std::uint64_t isqrt_u64(std::uint64_t n);

}  // namespace charsum
