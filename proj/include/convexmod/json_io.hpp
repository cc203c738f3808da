#pragma once

#include <string>
#include <vector>

#include "convexmod/composite.hpp"
#include "json.hpp"

namespace convexmod {

using nlohmann::json;

/// Scalars print as "p/q" strings over qplus, integers over nat and
/// booleans over bool; all three forms are accepted on input.
json scalar_to_json(Semiring sr, const Scalar& s);
Scalar scalar_from_json(Semiring sr, const json& j);

/// {symbol: scalar, ...}
json finsupp_to_json(const FinSupp& phi);
FinSupp finsupp_from_json(Semiring sr, const json& j);

/// {"semiring": "...", "generators": [FinSupp, ...]}
json convex_to_json(const ConvexSet& a);
/// Reads the semiring from the document; the result is canonical.
ConvexSet convex_from_json(const json& j);

/// {"weights": [{"set": ["x", "y"], "value": "5"}, ...]}
json set_weighting_to_json(const SetWeighting& phi);
SetWeighting set_weighting_from_json(Semiring sr, const json& j);

/// {"semiring": "...", "vars_in": [...], "vars_out": [...], "table": {sym: ConvexSet}}
json arrow_to_json(const KleisliArrow& f);
KleisliArrow arrow_from_json(const json& j);

/// One generator per row; the header lists `vars` in sorted order.
std::string convex_to_csv(const ConvexSet& a, std::vector<Symbol> vars);

}  // namespace convexmod
