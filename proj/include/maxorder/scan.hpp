#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "maxorder/curve.hpp"

namespace maxorder {

/// Smallest x in [0, p) such that a point with x-coordinate x has order M (the exponent of
/// E(F_p)), together with the group data it was measured against.
struct MaxOrderResult {
    std::uint64_t r = 0;
    GroupInfo info;
};

MaxOrderResult least_max_order_x(const ReducedCurve& C, std::uint64_t seed = 0);

/// r(E, p). Throws BadReduction / UnsupportedPrime like reduce_curve.
std::uint64_t r_of_p(const CurveQ& E, std::uint64_t p, std::uint64_t seed = 0);

/// One record: r(E, p) exceeds r(E, q) for every good prime 5 <= q < p.
struct RecordRow {
    std::uint64_t p = 0;
    std::uint64_t r = 0;
    double ratio1 = 0;  // r / (log p log log p)
    double ratio2 = 0;  // r / (log p (log log p)^2)
    bool supersingular = false;
    std::uint64_t L = 0;
    std::uint64_t M = 0;
    std::int64_t a_p = 0;
};

struct ScanConfig {
    CurveQ curve;
    std::uint64_t pmax = 0;           // primes p < pmax are scanned
    std::uint64_t pmin_display = 100;  // smaller records feed the running max but are not reported
    std::uint64_t rng_seed = 0;
    unsigned threads = 1;
};

/// Records with p >= pmin_display, ascending.
std::vector<RecordRow> records(const ScanConfig& cfg);

/// Local records of the good primes in [lo, hi), i.e. relative to a running max that starts
/// empty at lo. Unfiltered.
std::vector<RecordRow> scan_records_range(const CurveQ& E, std::uint64_t lo, std::uint64_t hi, std::uint64_t seed);

/// Concatenates two adjacent shards: rows of `right` survive only above the max of `left`.
std::vector<RecordRow> merge_records(std::vector<RecordRow> left, const std::vector<RecordRow>& right);

/// (r / (log p log log p), r / (log p (log log p)^2)) with natural logarithms.
std::pair<double, double> ratios(std::uint64_t p, std::uint64_t r);

/// Ordinary least-squares slope through (x, y) pairs. Throws InsufficientData below two points.
double least_squares_slope(std::span<const std::pair<double, double>> points);
/// Slope through (1, v1), (2, v2), ...
double least_squares_slope(std::span<const double> values);

double round_to(double v, int decimals);

/// Table slope row. The `display` pair regresses on the 2-decimal rounded ratios, the way
/// the published tables were built; `full` uses full-precision ratios.
struct Slopes {
    std::optional<double> ratio1_display, ratio2_display;
    std::optional<double> ratio1_full, ratio2_full;
};
Slopes table_slopes(std::span<const RecordRow> rows);

/// Smallest generator of (Z/pZ)^x.
std::uint64_t least_primitive_root(std::uint64_t p);

struct Rational {
    std::uint64_t num;
    std::uint64_t den;
    friend bool operator==(const Rational&, const Rational&) = default;
};
/// phi(n)/n in lowest terms.
Rational totient_ratio(std::uint64_t n);

enum class TableFormat { Csv, Json, Markdown, Latex };
TableFormat parse_table_format(std::string_view name);

std::string render_table(std::span<const RecordRow> rows, TableFormat format, const CurveQ& E);
std::string reproduce_table(const ScanConfig& cfg, TableFormat format);

}  // namespace maxorder
