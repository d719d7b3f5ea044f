#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "krk0/abelian_group.hpp"
#include "krk0/fixed_points.hpp"
#include "krk0/kr_model.hpp"
#include "krk0/ktheory.hpp"
#include "krk0/polynomial.hpp"
#include "krk0/quotient.hpp"

namespace krk0 {

using json = nlohmann::ordered_json;

/// Parses "t^2 - t + 1", "2t+1", "1 - t^5", "3*t^4". Spaces are ignored;
/// errors are ParseError carrying the 0-based character position.
IntPoly parse_poly(std::string_view text);

/// Descending-degree ASCII form: "t^2 - t + 1", "2t^3 - 1", "0".
std::string format_poly(const IntPoly& p);

/// Integers that fit in 64 bits become JSON numbers, larger ones decimal strings.
json integer_to_json(const Integer& x);
Integer integer_from_json(const json& j);

/// Ascending array of decimal-string coefficients.
json poly_to_json(const IntPoly& p);
IntPoly poly_from_json(const json& j);

/// Array of rows, each an array of decimal strings.
json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const json& j);

/// {"free_rank": k, "torsion": [d1, ...]}
json group_to_json(const FinAbGroup& g);
FinAbGroup group_from_json(const json& j);

/// {"kind": "normal"|"first"|"second", "alpha": [a1, a2, a3], "rho": .., "r": .., "m"/"l"/"b"/"a": ..}
json descriptor_to_json(const KRDescriptor& d);
KRDescriptor descriptor_from_json(const json& j);

json presentation_to_json(const QuotientPresentation& p);
json quotient_report_to_json(const QuotientReport& r);
json k0_to_json(const EquivariantK0& k);
json f_group_to_json(const FGroupResult& r);
json fixed_point_report_to_json(const FixedPointReport& r);

/// One "path,value" line per JSON leaf, depth-first in document order.
std::string json_to_csv(const json& j);

}  // namespace krk0
