#include "maxorder/curves.hpp"

#include <charconv>

#include "maxorder/errors.hpp"

namespace maxorder {

const std::vector<NamedCurve>& named_curves() {
    static const std::vector<NamedCurve> curves = {
        {"x3+x", "t1", CurveQ(1, 0)},
        {"x3-x", "t2", CurveQ(-1, 0)},
        {"x3+1", "t3", CurveQ(0, 1)},
        {"cm7", "t4", CurveQ(-385875, -113447250)},
        {"x3+x+1", "t5", CurveQ(1, 1)},
        {"t6", "t6", CurveQ(-13392, -1080432)},
        {"x0_11", "t7", CurveQ(-7, 6)},
    };
    return curves;
}

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
        throw UsageError("cannot parse curve spec '" + std::string(whole) + "'");
    return v;
}

}  // namespace

CurveQ parse_curve_spec(std::string_view spec) {
    for (const auto& c : named_curves()) {
        if (spec == c.alias || spec == c.table) return c.curve;
    }
    const auto comma = spec.find(',');
    if (comma == std::string_view::npos)
        throw UsageError("unknown curve '" + std::string(spec) + "'; use A,B or one of x3+x, x3-x, x3+1, cm7, x3+x+1, t6, x0_11");
    return CurveQ(parse_int(spec.substr(0, comma), spec), parse_int(spec.substr(comma + 1), spec));
}

}  // namespace maxorder
