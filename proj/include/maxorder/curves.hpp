#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "maxorder/curve.hpp"

namespace maxorder {

/// The seven curves whose record tables are reproduced.
struct NamedCurve {
    std::string alias;
    std::string table;  // "t1" ... "t7"
    CurveQ curve;
};

const std::vector<NamedCurve>& named_curves();

/// "A,B" (signed decimals), an alias such as "x3-x" or "cm7", or a table name "t1".."t7".
/// Throws UsageError for unparseable text and SingularCurve for 4A^3 + 27B^2 = 0.
CurveQ parse_curve_spec(std::string_view spec);

}  // namespace maxorder
