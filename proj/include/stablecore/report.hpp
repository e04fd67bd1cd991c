#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"

#include "stablecore/core.hpp"
#include "stablecore/diagonal.hpp"
#include "stablecore/graded.hpp"
#include "stablecore/stable_ideal.hpp"

namespace stablecore {

using Json = nlohmann::json;

/// Accepts {"d": 6, "rows": [6,6,6,4]} or {"d": 6, "generators": ["x1*x6", ...]}.
/// Throws ParseError for malformed input and NotStronglyStable for unstable sets.
StableIdeal2 parse_ideal_json(const std::string& text);
StableIdeal2 ideal_from_json(const Json& j);

Json to_json(const StableIdeal2& ideal);

/// [[generator index, "multiplier", "p/q"], ...]
Json certificate_to_json(const Certificate& c);

Json to_json(const GdDiagnostic& diag);
Json to_json(const DiagonalReduction& j);
Json to_json(const ReductionReport& r);
Json to_json(const SocleReport& s);
Json to_json(const NorthcottReport& n);
Json to_json(const LowerBoundReport& l);

/// One JSON object per element: {"index", "monomial", "h", "j"}.
void write_ordered_s_lines(std::ostream& os, const OrderedS& s);

/// ASCII tableau; '#' marks a cell, '@' the cell X_{g-1} X_d when present and
/// '!' when it is missing.
std::string render_tableau(const StableIdeal2& ideal);

}  // namespace stablecore
