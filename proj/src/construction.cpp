#include "maxorder/construction.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include <boost/multiprecision/miller_rabin.hpp>

#include "maxorder/errors.hpp"
#include "maxorder/scan.hpp"

namespace maxorder {

namespace {

BigInt pollard_rho(const BigInt& n, std::uint64_t seed) {
    if (n % 2 == 0) return 2;
    std::mt19937_64 rng(seed);
    for (;;) {
        const BigInt c = BigInt(rng() % 1000003) + 1;
        BigInt x = 2, y = 2, d = 1;
        auto step = [&](const BigInt& v) { return (v * v + c) % n; };
        while (d == 1) {
            x = step(x);
            y = step(step(y));
            d = boost::multiprecision::gcd(abs(x - y), n);
        }
        if (d != n) return d;
    }
}

void collect_primes(BigInt n, std::vector<BigInt>& out) {
    if (n < 2) return;
    if (boost::multiprecision::miller_rabin_test(n, 30)) {
        out.push_back(n);
        return;
    }
    const BigInt d = pollard_rho(n, static_cast<std::uint64_t>(n % 1000000007));
    collect_primes(d, out);
    collect_primes(n / d, out);
}

struct SplitFactor {
    IntPoly poly;
    BigInt disc;  // discriminant of the squarefree part
};

bool divides(std::uint64_t p, const BigInt& v) { return v % p == 0; }

}  // namespace

IntPoly cubic_poly(const CurveQ& E) { return IntPoly{E.B(), E.A(), 0, 1}; }

IntPoly doubling_numerator(const CurveQ& E) {
    const BigInt A = E.A(), B = E.B();
    return IntPoly(std::vector<BigInt>{A * A, -8 * B, -2 * A, 0, 1});
}

IntPoly doubling_denominator(const CurveQ& E) {
    const BigInt A = E.A(), B = E.B();
    return IntPoly(std::vector<BigInt>{4 * B, 4 * A, 0, 4});
}

std::vector<BigInt> distinct_prime_divisors(const BigInt& v) {
    BigInt n = abs(v);
    std::vector<BigInt> out;
    for (std::uint64_t q = 2; q < 100000 && BigInt(q) * q <= n; q += (q == 2 ? 1 : 2)) {
        if (n % q == 0) {
            out.emplace_back(q);
            while (n % q == 0) n /= q;
        }
    }
    collect_primes(n, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

IntPoly build_g(const CurveQ& E) {
    std::vector<BigInt> primes = distinct_prime_divisors(E.discriminant());
    for (int q : {2, 3, 5, 7}) primes.emplace_back(q);
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    BigInt prod = 1;
    for (const auto& q : primes) prod *= q;
    return IntPoly(std::vector<BigInt>{-prod, 0, 1});
}

IntPoly xi_poly(const CurveQ& E, std::int64_t j) {
    if (j < 0) throw UsageError("xi_j needs j >= 0");
    return doubling_numerator(E) - doubling_denominator(E) * BigInt(j);
}

IntPoly build_T(const CurveQ& E, int N) {
    if (N < 0) throw UsageError("build_T needs N >= 0");
    IntPoly T = cubic_poly(E) * build_g(E);
    for (int j = 0; j <= N; ++j) T = T * xi_poly(E, j);
    return T;
}

IdentityReport verify_identities(const CurveQ& E, int j_max) {
    IdentityReport rep;
    const BigInt w = E.weierstrass_invariant();
    // s = 4f, so Res(r, s) = 4^deg(r) Res(r, f) = 2^8 (4A^3 + 27B^2)^2.
    const BigInt res = resultant(doubling_numerator(E), doubling_denominator(E));
    ++rep.checks;
    if (res != 256 * w * w) {
        rep.passed = false;
        rep.failures.push_back("Res(r, s) = " + res.str() + " but 2^8 (4A^3 + 27B^2)^2 = " + BigInt(256 * w * w).str());
    }
    const IntPoly f = cubic_poly(E);
    for (int j = 0; j <= j_max; ++j) {
        const BigInt fj = f.eval(j);
        const BigInt expected = BigInt(4096) * (-w) * fj * fj;
        const BigInt got = poly_discriminant(xi_poly(E, j));
        ++rep.checks;
        if (got != expected) {
            rep.passed = false;
            rep.failures.push_back("disc(xi_" + std::to_string(j) + ") = " + got.str() + " but expected " +
                                   expected.str());
        }
    }
    return rep;
}

std::vector<int> factor_degrees_mod_p(const IntPoly& a, std::uint64_t p) {
    const PrimeModulus m(p);
    if (a.is_zero() || divides(p, a.lc()))
        throw LeadingCoefficientVanishes("p = " + std::to_string(p) + " divides the leading coefficient");
    return distinct_factor_degrees(a.reduce(m));
}

bool splits_completely(const IntPoly& a, std::uint64_t p) {
    const auto degrees = factor_degrees_mod_p(a, p);
    return std::all_of(degrees.begin(), degrees.end(), [](int d) { return d == 1; });
}

std::optional<std::uint64_t> find_split_prime(const CurveQ& E, int N, std::uint64_t pmax) {
    if (N < 0) throw UsageError("find_split_prime needs N >= 0");
    std::vector<SplitFactor> factors;
    auto add = [&](const IntPoly& poly) {
        const IntPoly sf = squarefree_part(poly);
        factors.push_back({poly, sf.degree() >= 1 ? poly_discriminant(sf) : BigInt(1)});
    };
    add(cubic_poly(E));
    add(build_g(E));
    for (int j = 0; j <= N; ++j) add(xi_poly(E, j));
    const BigInt disc = E.discriminant();

    for (std::uint64_t p : primes_up_to(pmax)) {
        if (p <= 7 || divides(p, disc)) continue;
        bool ok = true;
        for (const auto& fac : factors) {
            if (divides(p, fac.disc) || divides(p, fac.poly.lc())) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        for (const auto& fac : factors) {
            if (!splits_completely(fac.poly, p)) {
                ok = false;
                break;
            }
        }
        if (ok) return p;
    }
    return std::nullopt;
}

HalvingReport verify_halving_argument(const CurveQ& E, std::uint64_t p, int N, std::uint64_t seed) {
    HalvingReport rep;
    rep.p = p;
    rep.N = N;
    const ReducedCurve C = reduce_curve(E, p);
    const MaxOrderResult scan = least_max_order_x(C, seed);
    const GroupInfo& info = scan.info;
    rep.group_order = info.n;
    rep.exponent = info.M;
    rep.r = scan.r;
    auto fail = [&](std::string msg) {
        rep.passed = false;
        rep.failures.push_back(std::move(msg));
    };
    if (info.n % 2 != 0) fail("group order " + std::to_string(info.n) + " is odd");
    if (info.n <= 4) fail("group order " + std::to_string(info.n) + " is at most 4");
    for (std::int64_t j = 0; j <= N && static_cast<std::uint64_t>(j) < p; ++j) {
        for (const Point& P : lift_points_at_x(static_cast<std::uint64_t>(j), C)) {
            ++rep.points_checked;
            const bool halvable = !preimages_of_doubling(P, C).empty();
            const std::uint64_t ord = point_order(P, info, C);
            if (!halvable && ord > 2)
                fail("point (" + std::to_string(P.x) + ", " + std::to_string(P.y) + ") is neither a double nor 2-torsion");
            if (ord == info.M)
                fail("point (" + std::to_string(P.x) + ", " + std::to_string(P.y) + ") has maximal order");
        }
    }
    if (static_cast<std::int64_t>(rep.r) <= N)
        fail("r(E, " + std::to_string(p) + ") = " + std::to_string(rep.r) + " is not above N = " + std::to_string(N));
    return rep;
}

DegreeReport verify_xi_degree_bound(const CurveQ& E, int prime_count, int j_max) {
    DegreeReport rep;
    const IntPoly f = cubic_poly(E);
    const BigInt disc = E.discriminant();
    std::vector<IntPoly> xis;
    for (int j = 0; j <= j_max; ++j) xis.push_back(xi_poly(E, j));
    for (std::uint64_t p = 5; rep.primes_used < prime_count; p += 2) {
        if (!is_prime(p) || divides(p, disc)) continue;
        if (count_roots(f.reduce(PrimeModulus(p))) != 3) continue;
        ++rep.primes_used;
        for (int j = 0; j <= j_max; ++j) {
            const auto degs = factor_degrees_mod_p(xis[j], p);
            int l = 1;
            for (int d : degs) l = std::lcm(l, d);
            ++rep.checks;
            if (4 % l != 0) {
                rep.passed = false;
                rep.failures.push_back("p = " + std::to_string(p) + ", j = " + std::to_string(j) +
                                       ": lcm of factor degrees is " + std::to_string(l));
            }
        }
    }
    return rep;
}

BoundConstants BoundConstants::for_curve(const CurveQ& E) {
    BoundConstants k;
    const auto mag = [](std::int64_t v) { return std::abs(static_cast<double>(v)); };
    k.curve_constant = std::max({mag(E.A()), mag(E.B()), 2.0});
    return k;
}

double theorem_bound(std::int64_t N, const BoundConstants& k, BoundMode mode) {
    if (N < 1) throw UsageError("theorem_bound needs N >= 1");
    if (k.linear_exponent < 1) throw UsageError("linear exponent must be >= 1");
    const double n = static_cast<double>(N);
    if (k.curve_constant * n <= 1) throw UsageError("curve constant times N must exceed 1");
    // log log |disc F| <= log(prefactor (N+1) base^(N+1)) + log log(C N)
    const double log_degree = std::log(static_cast<double>(k.degree_prefactor)) + std::log(n + 1) +
                              (n + 1) * std::log(static_cast<double>(k.degree_bound_base));
    const double loglog_disc = log_degree + std::log(std::log(k.curve_constant * n));
    switch (mode) {
        case BoundMode::Unconditional:
            return std::log(static_cast<double>(k.linear_exponent)) + loglog_disc;
        case BoundMode::Grh:
            return std::log(k.grh_constant) + 2 * loglog_disc;
    }
    return 0;
}

}  // namespace maxorder
