#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"

#include "charsum/cyclo.hpp"
#include "charsum/field.hpp"

namespace charsum {

// Portable subset formats.  Both carry p, r and the modulus coefficients so
// the element encodings survive the trip.
//
// Text: '#' header lines, then one decimal encoding per line:
//   # charsum subset v1
//   # p=3 r=4 modulus=1,2,0,0,1
//   0
//   5
// JSON: {"p": 3, "r": 4, "modulus": [1,2,0,0,1], "elems": [0, 5]}.

void write_subset_text(std::ostream& os, const FieldCtx& ctx, const Subset& s);
Subset read_subset_text(std::istream& is, const FieldCtx& ctx);

nlohmann::json subset_to_json(const FieldCtx& ctx, const Subset& s);
Subset subset_from_json(const FieldCtx& ctx, const nlohmann::json& j);

// Dispatch by extension: .json uses the JSON form, anything else text.
Subset load_subset(const FieldCtx& ctx, const std::string& path);
void save_subset(const FieldCtx& ctx, const Subset& s, const std::string& path);

// {"p": ..., "coeffs": [...]} with canonical coefficients.
nlohmann::json cyclo_to_json(const CycloSum& s);

}  // namespace charsum
