#include "maxorder/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <ostream>
#include <thread>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "maxorder/construction.hpp"
#include "maxorder/curves.hpp"
#include "maxorder/errors.hpp"
#include "maxorder/scan.hpp"

namespace maxorder {

unsigned default_thread_count() {
    if (const char* env = std::getenv("MAXORDER_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1) return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

int cmd_rofp(const std::string& spec, std::uint64_t p, std::uint64_t seed, bool json, std::ostream& out) {
    const CurveQ E = parse_curve_spec(spec);
    const ReducedCurve C = reduce_curve(E, p);
    const MaxOrderResult res = least_max_order_x(C, seed);
    const GroupInfo& g = res.info;
    if (json) {
        const nlohmann::json doc = {{"A", E.A()}, {"B", E.B()}, {"p", p},      {"r", res.r},
                                    {"n", g.n},   {"L", g.L},   {"M", g.M},    {"a_p", g.a_p},
                                    {"supersingular", g.supersingular}};
        out << doc.dump() << "\n";
    } else {
        out << fmt::format("p={} r={} n={} L={} M={} a_p={} supersingular={}\n", p, res.r, g.n, g.L, g.M, g.a_p,
                           g.supersingular);
    }
    return kExitOk;
}

int cmd_records(const std::string& spec, std::uint64_t pmax, std::uint64_t pmin_display, const std::string& format,
                std::uint64_t seed, unsigned threads, std::ostream& out) {
    const TableFormat fmt_kind = parse_table_format(format);
    ScanConfig cfg{parse_curve_spec(spec), pmax, pmin_display, seed, threads};
    if (cfg.pmin_display < 5) throw UsageError("--pmin-display must be at least 5");
    out << reproduce_table(cfg, fmt_kind);
    return kExitOk;
}

int cmd_verify(const std::string& spec, int jmax, int N, std::uint64_t pmax, int degree_primes, std::uint64_t seed,
               std::ostream& out) {
    const CurveQ E = parse_curve_spec(spec);
    if (jmax < 0 || N < 0) throw UsageError("--jmax and --N must be non-negative");
    bool ok = true;
    auto verdict = [](bool v) { return v ? "PASS" : "FAIL"; };
    out << "curve: " << to_string(E) << "\n";

    const IdentityReport ids = verify_identities(E, jmax);
    ok &= ids.passed;
    out << fmt::format("resultant/discriminant identities (j <= {}): {} ({} checks)\n", jmax, verdict(ids.passed),
                       ids.checks);
    for (const auto& f : ids.failures) out << "  " << f << "\n";

    const DegreeReport deg = verify_xi_degree_bound(E, degree_primes, jmax);
    ok &= deg.passed;
    out << fmt::format("xi_j splitting degree divides 4 ({} primes with rational 2-torsion, j <= {}): {} ({} checks)\n",
                       deg.primes_used, jmax, verdict(deg.passed), deg.checks);
    for (const auto& f : deg.failures) out << "  " << f << "\n";

    const auto p = find_split_prime(E, N, pmax);
    if (!p) {
        ok = false;
        out << fmt::format("split prime (N = {}): none up to {}\n", N, pmax);
    } else {
        out << fmt::format("split prime (N = {}): p = {}\n", N, *p);
        const HalvingReport h = verify_halving_argument(E, *p, N, seed);
        ok &= h.passed;
        out << fmt::format("halving argument at p = {}: {} (n = {}, M = {}, points checked = {}, r(E,p) = {} > {})\n",
                           *p, verdict(h.passed), h.group_order, h.exponent, h.points_checked, h.r, N);
        for (const auto& f : h.failures) out << "  " << f << "\n";
    }
    out << "result: " << verdict(ok) << "\n";
    return ok ? kExitOk : kExitVerificationFailed;
}

int cmd_bounds(std::int64_t N, const std::string& mode_name, const BoundConstants& k, std::ostream& out) {
    BoundMode mode;
    if (mode_name == "unconditional")
        mode = BoundMode::Unconditional;
    else if (mode_name == "grh")
        mode = BoundMode::Grh;
    else
        throw UsageError("--mode must be unconditional or grh");
    const double bound = theorem_bound(N, k, mode);
    const double limit = (mode == BoundMode::Grh ? 2.0 : 1.0) * std::log(static_cast<double>(k.degree_bound_base));
    out << fmt::format("mode={} N={} quantity={} bound={:.6f} bound/N={:.9f} limit={:.9f}\n", mode_name, N,
                       mode == BoundMode::Grh ? "log p" : "log log p", bound, bound / static_cast<double>(N), limit);
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"r(E,p): least x-coordinate of a point of maximal order on elliptic curves mod p", "maxorder"};
    app.require_subcommand(1);

    std::string curve;
    std::uint64_t p = 0, seed = 0, pmax = 0, pmin_display = 100, split_pmax = 100000;
    bool json = false;
    std::string format = "csv", mode = "unconditional";
    unsigned threads = default_thread_count();
    int jmax = 10, N = 2, degree_primes = 50;
    std::int64_t bound_N = 0;
    BoundConstants k;

    auto* rofp = app.add_subcommand("rofp", "r(E,p) and the group structure at one prime");
    rofp->add_option("--curve", curve, "A,B or a named curve")->required();
    rofp->add_option("--p", p, "prime of good reduction")->required();
    rofp->add_option("--seed", seed, "sampling seed");
    rofp->add_flag("--json", json, "single-line JSON output");

    auto* rec = app.add_subcommand("records", "record primes of r(E,p) below pmax");
    rec->add_option("--curve", curve, "A,B or a named curve")->required();
    rec->add_option("--pmax", pmax, "scan primes p < pmax")->required();
    rec->add_option("--pmin-display", pmin_display, "hide records below this prime");
    rec->add_option("--format", format, "csv, json, markdown or latex");
    rec->add_option("--seed", seed, "sampling seed");
    rec->add_option("--threads", threads, "worker threads (default: MAXORDER_THREADS or all cores)");

    auto* ver = app.add_subcommand("verify-construction", "check the polynomial construction for a curve");
    ver->add_option("--curve", curve, "A,B or a named curve")->required();
    ver->add_option("--jmax", jmax, "largest j for identity and degree checks");
    ver->add_option("--N", N, "force r(E,p) > N");
    ver->add_option("--pmax", split_pmax, "search bound for the split prime");
    ver->add_option("--degree-primes", degree_primes, "primes used for the factor-degree check");
    ver->add_option("--seed", seed, "sampling seed");

    auto* bnd = app.add_subcommand("bounds", "evaluate the explicit bound chain");
    bnd->add_option("--N", bound_N, "N >= 1")->required();
    bnd->add_option("--mode", mode, "unconditional or grh");
    bnd->add_option("--linear-exponent", k.linear_exponent, "exponent in p < |disc F|^c");
    bnd->add_option("--grh-constant", k.grh_constant, "C0 in p < C0 (log |disc F|)^2");
    bnd->add_option("--curve-constant", k.curve_constant, "stand-in for the curve constant");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (rofp->parsed()) return cmd_rofp(curve, p, seed, json, out);
        if (rec->parsed()) {
            if (threads < 1) throw UsageError("--threads must be at least 1");
            return cmd_records(curve, pmax, pmin_display, format, seed, threads, out);
        }
        if (ver->parsed()) return cmd_verify(curve, jmax, N, split_pmax, degree_primes, seed, out);
        if (bnd->parsed()) return cmd_bounds(bound_N, mode, k, out);
    } catch (const BadReduction& e) {
        err << "error: bad reduction: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitVerificationFailed;
    }
    return kExitUsage;
}

}  // namespace maxorder
