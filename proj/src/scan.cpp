#include "maxorder/scan.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <mutex>
#include <thread>

#include <fmt/format.h>

#include "json.hpp"
#include "maxorder/errors.hpp"

namespace maxorder {

namespace {

Factorization exponent_factors(const GroupInfo& info) {
    Factorization out;
    std::uint64_t rest = info.M;
    for (const auto& [q, e] : info.n_factored) {
        int k = 0;
        while (rest % q == 0) {
            rest /= q;
            ++k;
        }
        if (k) out.emplace_back(q, k);
    }
    return out;
}

bool has_order(const Point& P, std::uint64_t M, const Factorization& mf, const ReducedCurve& C) {
    for (const auto& [q, e] : mf) {
        if (detail::mul_is_identity(M / q, P, C.a(), C.field())) return false;
    }
    return true;
}

RecordRow make_row(std::uint64_t p, const MaxOrderResult& res) {
    RecordRow row;
    row.p = p;
    row.r = res.r;
    if (p >= 3) std::tie(row.ratio1, row.ratio2) = ratios(p, res.r);
    row.supersingular = res.info.supersingular;
    row.L = res.info.L;
    row.M = res.info.M;
    row.a_p = res.info.a_p;
    return row;
}

std::vector<RecordRow> local_records(const CurveQ& E, std::span<const std::uint64_t> primes, std::uint64_t seed) {
    std::vector<RecordRow> out;
    const BigInt disc = E.discriminant();
    std::optional<std::uint64_t> best;
    for (std::uint64_t p : primes) {
        if (p < 5 || disc % p == 0) continue;
        const ReducedCurve C(E, PrimeModulus(p));
        const MaxOrderResult res = least_max_order_x(C, seed);
        if (!best || res.r > *best) {
            best = res.r;
            out.push_back(make_row(p, res));
        }
    }
    return out;
}

std::string fmt_slope(const std::optional<double>& v, int decimals) {
    if (!v) return "n/a";
    return fmt::format("{:.{}f}", *v, decimals);
}

}  // namespace

MaxOrderResult least_max_order_x(const ReducedCurve& C, std::uint64_t seed) {
    MaxOrderResult res;
    res.info = group_structure(C, seed);
    const std::uint64_t M = res.info.M;
    const Factorization mf = exponent_factors(res.info);
    const PrimeModulus& m = C.field();
    for (std::uint64_t x = 0; x < C.p(); ++x) {
        const std::uint64_t v = C.rhs(x);
        if (v == 0) {
            if (M == 2) {
                res.r = x;
                return res;
            }
            continue;
        }
        if (legendre_symbol(static_cast<std::int64_t>(v), m) != 1) continue;
        // Both lifts +-y have the same order.
        if (has_order(Point::affine(x, sqrt_mod(v, m)), M, mf, C)) {
            res.r = x;
            return res;
        }
    }
    throw std::logic_error("no point of maximal order found at p = " + std::to_string(C.p()));
}

std::uint64_t r_of_p(const CurveQ& E, std::uint64_t p, std::uint64_t seed) {
    return least_max_order_x(reduce_curve(E, p), seed).r;
}

std::vector<RecordRow> scan_records_range(const CurveQ& E, std::uint64_t lo, std::uint64_t hi, std::uint64_t seed) {
    if (hi <= lo || hi < 6) return {};
    std::vector<std::uint64_t> primes = primes_up_to(hi - 1);
    primes.erase(primes.begin(), std::lower_bound(primes.begin(), primes.end(), lo));
    return local_records(E, primes, seed);
}

std::vector<RecordRow> merge_records(std::vector<RecordRow> left, const std::vector<RecordRow>& right) {
    std::optional<std::uint64_t> best;
    if (!left.empty()) best = left.back().r;
    for (const auto& row : right) {
        if (!best || row.r > *best) {
            best = row.r;
            left.push_back(row);
        }
    }
    return left;
}

std::vector<RecordRow> records(const ScanConfig& cfg) {
    if (cfg.pmax <= 5) return {};
    std::vector<std::uint64_t> primes = primes_up_to(cfg.pmax - 1);
    primes.erase(primes.begin(), std::lower_bound(primes.begin(), primes.end(), std::uint64_t{5}));

    const unsigned threads = std::max(1u, cfg.threads);
    const std::size_t chunk = std::max<std::size_t>(256, primes.size() / (16 * threads) + 1);
    const std::size_t shards = (primes.size() + chunk - 1) / chunk;
    std::vector<std::vector<RecordRow>> partial(shards);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t s; (s = next.fetch_add(1)) < shards;) {
            try {
                const std::size_t begin = s * chunk, end = std::min(primes.size(), begin + chunk);
                partial[s] = local_records(cfg.curve, std::span(primes).subspan(begin, end - begin), cfg.rng_seed);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    if (threads == 1 || shards <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < std::min<std::size_t>(threads, shards); ++t) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);

    std::vector<RecordRow> all;
    for (const auto& part : partial) all = merge_records(std::move(all), part);
    std::erase_if(all, [&](const RecordRow& row) { return row.p < cfg.pmin_display; });
    return all;
}

std::pair<double, double> ratios(std::uint64_t p, std::uint64_t r) {
    if (p < 3) throw UsageError("ratios need log log p > 0, i.e. p >= 3");
    const double lp = std::log(static_cast<double>(p));
    const double llp = std::log(lp);
    const double rr = static_cast<double>(r);
    return {rr / (lp * llp), rr / (lp * llp * llp)};
}

double least_squares_slope(std::span<const std::pair<double, double>> points) {
    if (points.size() < 2) throw InsufficientData("least-squares slope needs at least two points");
    const double k = static_cast<double>(points.size());
    double sx = 0, sy = 0;
    for (const auto& [x, y] : points) {
        sx += x;
        sy += y;
    }
    const double mx = sx / k, my = sy / k;
    double sxy = 0, sxx = 0;
    for (const auto& [x, y] : points) {
        sxy += (x - mx) * (y - my);
        sxx += (x - mx) * (x - mx);
    }
    if (sxx == 0) throw InsufficientData("least-squares slope needs two distinct abscissae");
    return sxy / sxx;
}

double least_squares_slope(std::span<const double> values) {
    std::vector<std::pair<double, double>> pts;
    pts.reserve(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) pts.emplace_back(static_cast<double>(i + 1), values[i]);
    return least_squares_slope(pts);
}

double round_to(double v, int decimals) {
    const double scale = std::pow(10.0, decimals);
    return std::round(v * scale) / scale;
}

Slopes table_slopes(std::span<const RecordRow> rows) {
    Slopes s;
    if (rows.size() < 2) return s;
    std::vector<double> d1, d2, f1, f2;
    for (const auto& row : rows) {
        f1.push_back(row.ratio1);
        f2.push_back(row.ratio2);
        d1.push_back(round_to(row.ratio1, 2));
        d2.push_back(round_to(row.ratio2, 2));
    }
    s.ratio1_display = least_squares_slope(d1);
    s.ratio2_display = least_squares_slope(d2);
    s.ratio1_full = least_squares_slope(f1);
    s.ratio2_full = least_squares_slope(f2);
    return s;
}

std::uint64_t least_primitive_root(std::uint64_t p) {
    const PrimeModulus m(p);
    const Factorization f = factor(p - 1);
    for (std::uint64_t g = 2;; ++g) {
        bool generator = true;
        for (const auto& [q, e] : f) {
            if (m.pow(g, (p - 1) / q) == 1) {
                generator = false;
                break;
            }
        }
        if (generator) return g;
    }
}

Rational totient_ratio(std::uint64_t n) {
    if (n == 0) throw UsageError("totient_ratio needs n >= 1");
    std::uint64_t num = 1, den = 1;
    for (const auto& [q, e] : factor(n)) {
        num *= q - 1;
        den *= q;
    }
    const std::uint64_t g = std::gcd(num, den);
    return {num / g, den / g};
}

TableFormat parse_table_format(std::string_view name) {
    if (name == "csv") return TableFormat::Csv;
    if (name == "json") return TableFormat::Json;
    if (name == "markdown" || name == "md") return TableFormat::Markdown;
    if (name == "latex" || name == "tex") return TableFormat::Latex;
    throw UsageError("unknown table format '" + std::string(name) + "' (csv, json, markdown, latex)");
}

std::string render_table(std::span<const RecordRow> rows, TableFormat format, const CurveQ& E) {
    const Slopes slopes = table_slopes(rows);
    std::string out;
    switch (format) {
        case TableFormat::Csv: {
            out += "p,r,ratio1,ratio2,L,M,a_p,supersingular\n";
            for (const auto& row : rows)
                out += fmt::format("{},{},{},{},{},{},{},{}\n", row.p, row.r, row.ratio1, row.ratio2, row.L, row.M,
                                   row.a_p, row.supersingular);
            if (slopes.ratio1_display)
                out += fmt::format("slope,,{},{},,,,\n", *slopes.ratio1_display, *slopes.ratio2_display);
            else
                out += "slope,,insufficient_data,insufficient_data,,,,\n";
            break;
        }
        case TableFormat::Json: {
            nlohmann::json doc = nlohmann::json::array();
            for (const auto& row : rows) {
                doc.push_back({{"p", row.p},
                               {"r", row.r},
                               {"ratio1", row.ratio1},
                               {"ratio2", row.ratio2},
                               {"L", row.L},
                               {"M", row.M},
                               {"a_p", row.a_p},
                               {"supersingular", row.supersingular}});
            }
            auto opt = [](const std::optional<double>& v) { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); };
            doc.push_back({{"slopes",
                            {{"ratio1", opt(slopes.ratio1_display)},
                             {"ratio2", opt(slopes.ratio2_display)},
                             {"ratio1_full", opt(slopes.ratio1_full)},
                             {"ratio2_full", opt(slopes.ratio2_full)},
                             {"insufficient_data", !slopes.ratio1_display.has_value()}}}});
            out = doc.dump(2) + "\n";
            break;
        }
        case TableFormat::Markdown: {
            out += fmt::format("{}\n\n", to_string(E));
            out += "| p | r(E,p) | r/(log p log log p) | r/(log p (log log p)^2) |\n";
            out += "|---:|---:|---:|---:|\n";
            for (const auto& row : rows)
                out += fmt::format("| {} | {} | {:.2f} | {:.2f} |\n", row.p, row.r, row.ratio1, row.ratio2);
            out += fmt::format("| slope | | {} | {} |\n", fmt_slope(slopes.ratio1_display, 3),
                               fmt_slope(slopes.ratio2_display, 3));
            break;
        }
        case TableFormat::Latex: {
            out += "\\begin{table}[h!]\n\\begin{center}\n";
            out += fmt::format("\\caption{{${}$}}\n", to_string(E));
            out += "\\begin{tabular}{|c|c|c|c|}\\hline\n";
            out += "$p$ & $r(E,p)$ & $r(E,p)/\\log p\\log\\log p$ & $r(E,p)/\\log p(\\log\\log p)^2$\\\\\n\\hline\n";
            for (const auto& row : rows)
                out += fmt::format("{} & {} & {:.2f} & {:.2f}\\\\\n\\hline\n", row.p, row.r, row.ratio1, row.ratio2);
            out += fmt::format("slope & & ${}$ & ${}$\\\\\n\\hline\n", fmt_slope(slopes.ratio1_display, 3),
                               fmt_slope(slopes.ratio2_display, 3));
            out += "\\end{tabular}\n\\end{center}\n\\end{table}\n";
            break;
        }
    }
    return out;
}

std::string reproduce_table(const ScanConfig& cfg, TableFormat format) {
    const auto rows = records(cfg);
    return render_table(rows, format, cfg.curve);
}

}  // namespace maxorder
