// Point counting and group structure of E(F_p).

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

#include "maxorder/curve.hpp"
#include "maxorder/errors.hpp"

namespace maxorder {

namespace {

// Below this bound the O(p) residue-table count beats baby-step/giant-step setup.
constexpr std::uint64_t kLegendreSumLimit = std::uint64_t{1} << 16;
constexpr int kBsgsMaxRounds = 48;

using u128 = unsigned __int128;

std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t p, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(p >> 32),
                      static_cast<std::uint32_t>(stream)};
    return std::mt19937_64(seq);
}

Point random_point(std::uint64_t a, std::uint64_t b, const PrimeModulus& m, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> dist(0, m.value() - 1);
    for (;;) {
        const std::uint64_t x = dist(rng);
        const std::uint64_t v = m.add(m.mul(m.add(m.mul(x, x), a), x), b);
        if (v == 0) return Point::affine(x, 0);
        if (legendre_symbol(static_cast<std::int64_t>(v), m) != 1) continue;
        const std::uint64_t y = sqrt_mod(v, m);
        return Point::affine(x, (rng() & 1) ? y : m.neg(y));
    }
}

// Exact order of P given some multiple k with kP = O.
std::uint64_t reduce_to_order(std::uint64_t k, const Point& P, std::uint64_t a, const PrimeModulus& m) {
    std::uint64_t ord = k;
    for (const auto& [q, e] : factor(k)) {
        for (int i = 0; i < e && detail::mul_is_identity(ord / q, P, a, m); ++i) ord /= q;
    }
    return ord;
}

// Inverse of a modulo n (gcd(a, n) = 1), n arbitrary.
std::uint64_t inverse_mod_n(std::uint64_t a, std::uint64_t n) {
    if (n == 1) return 0;
    __int128 r0 = n, r1 = a % n, t0 = 0, t1 = 1;
    while (r1 != 0) {
        const __int128 q = r0 / r1;
        __int128 tmp = r0 - q * r1;
        r0 = r1;
        r1 = tmp;
        tmp = t0 - q * t1;
        t0 = t1;
        t1 = tmp;
    }
    if (t0 < 0) t0 += n;
    return static_cast<std::uint64_t>(t0);
}

struct Progression {
    std::uint64_t first = 0;
    std::uint64_t step = 1;
    std::uint64_t count = 0;
};

// Values n in [lo, hi] with D1 | n and D2 | (total - n).
Progression candidates(std::uint64_t lo, std::uint64_t hi, std::uint64_t total, std::uint64_t D1,
                       std::uint64_t D2) {
    const std::uint64_t g = std::gcd(D1, D2);
    const std::uint64_t T = total % D2;
    if (T % g != 0) return {};
    const std::uint64_t d2g = D2 / g;
    const std::uint64_t t = static_cast<std::uint64_t>(
        static_cast<u128>((T / g) % d2g) * inverse_mod_n((D1 / g) % d2g, d2g) % d2g);
    const u128 step = static_cast<u128>(D1) * d2g;
    const u128 residue = static_cast<u128>(D1) * t;
    if (step > hi) {
        // At most one value: the residue itself if it falls in the window.
        if (residue >= lo && residue <= hi) return {static_cast<std::uint64_t>(residue), 1, 1};
        return {};
    }
    const auto S = static_cast<std::uint64_t>(step);
    const auto c = static_cast<std::uint64_t>(residue % S);
    std::uint64_t first = lo - lo % S + c;
    if (first < lo) first += S;
    if (first > hi) return {first, S, 0};
    return {first, S, (hi - first) / S + 1};
}

// Some k in [0, count) with (start + k*step) P = O, or -1.
std::int64_t find_annihilator(const Point& P, std::uint64_t start, std::uint64_t step, std::uint64_t count,
                              std::uint64_t a, const PrimeModulus& m) {
    const Point Q = detail::mul_unchecked(start, P, a, m);
    const Point R = detail::mul_unchecked(step, P, a, m);
    if (Q.is_infinity()) return 0;
    if (R.is_infinity()) return -1;

    const std::uint64_t baby = std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(count)))));
    struct Entry {
        std::uint64_t x, y, j;
    };
    std::vector<Entry> table;
    table.reserve(baby);
    Point jR = R;
    for (std::uint64_t j = 1; j <= baby; ++j) {
        if (jR.is_infinity()) break;
        table.push_back({jR.x, jR.y, j});
        jR = detail::add_unchecked(jR, R, a, m);
    }
    std::sort(table.begin(), table.end(), [](const Entry& l, const Entry& r) { return l.x < r.x; });

    const Point giant = detail::mul_unchecked(baby, R, a, m);
    Point T = Q;
    for (std::uint64_t i = 0; i * baby < count + baby; ++i) {
        const std::uint64_t base = i * baby;
        if (T.is_infinity()) {
            if (base < count) return static_cast<std::int64_t>(base);
        } else {
            auto [lo, hi] = std::equal_range(table.begin(), table.end(), Entry{T.x, 0, 0},
                                             [](const Entry& l, const Entry& r) { return l.x < r.x; });
            for (auto it = lo; it != hi; ++it) {
                // T + jR = O  or  T - jR = O
                if (it->y == m.neg(T.y) && base + it->j < count) return static_cast<std::int64_t>(base + it->j);
                if (it->y == T.y && base >= it->j && base - it->j < count)
                    return static_cast<std::int64_t>(base - it->j);
            }
        }
        T = detail::add_unchecked(T, giant, a, m);
    }
    return -1;
}

}  // namespace

TwistCoefficients quadratic_twist(const ReducedCurve& C) {
    const PrimeModulus& m = C.field();
    std::uint64_t d = 2;
    while (legendre_symbol(static_cast<std::int64_t>(d), m) != -1) ++d;
    const std::uint64_t d2 = m.mul(d, d);
    return {m.mul(C.a(), d2), m.mul(C.b(), m.mul(d2, d))};
}

std::uint64_t order_by_legendre_sum(const ReducedCurve& C) {
    const std::uint64_t p = C.p();
    const PrimeModulus table = C.field().has_residue_table() ? C.field() : PrimeModulus::with_residue_table(p);
    const PrimeModulus& m = table;
    // f(x+1) - f(x) = 3x^2 + 3x + 1 + a, whose own difference is 6x + 6.
    std::uint64_t fx = C.b();
    std::uint64_t d1 = m.add(1, C.a());
    std::uint64_t d2 = 6 % p;
    const std::uint64_t d3 = 6 % p;
    std::uint64_t n = 1;
    for (std::uint64_t x = 0; x < p; ++x) {
        if (fx == 0)
            n += 1;
        else if (m.table_says_square(fx))
            n += 2;
        fx = m.add(fx, d1);
        d1 = m.add(d1, d2);
        d2 = m.add(d2, d3);
    }
    return n;
}

std::uint64_t order_by_bsgs(const ReducedCurve& C, std::uint64_t seed) {
    const PrimeModulus& m = C.field();
    const std::uint64_t p = C.p();
    const std::uint64_t w = isqrt(4 * p);  // |a_p| <= 2 sqrt(p)  <=>  a_p^2 <= 4p
    const std::uint64_t lo = p + 1 - w, hi = p + 1 + w, total = 2 * p + 2;
    const TwistCoefficients tw = quadratic_twist(C);
    auto rng = make_rng(seed, p, 1);

    std::uint64_t D1 = 1, D2 = 1;  // known divisors of #E and #E'
    for (int round = 0; round < kBsgsMaxRounds; ++round) {
        const Progression c = candidates(lo, hi, total, D1, D2);
        if (c.count == 1) return c.first;
        if (c.count == 0) return 0;
        const bool on_twist = round % 2 == 1;
        const std::uint64_t a = on_twist ? tw.a : C.a();
        const std::uint64_t b = on_twist ? tw.b : C.b();
        const Point P = random_point(a, b, m, rng);
        const std::uint64_t last = c.first + (c.count - 1) * c.step;
        const std::uint64_t start = on_twist ? total - last : c.first;
        const std::int64_t k = find_annihilator(P, start, c.step, c.count, a, m);
        if (k < 0) return 0;
        const std::uint64_t ord = reduce_to_order(start + static_cast<std::uint64_t>(k) * c.step, P, a, m);
        if (on_twist)
            D2 = std::lcm(D2, ord);
        else
            D1 = std::lcm(D1, ord);
    }
    return 0;
}

std::uint64_t curve_order(const ReducedCurve& C, OrderStrategy strategy, std::uint64_t seed) {
    switch (strategy) {
        case OrderStrategy::LegendreSum:
            return order_by_legendre_sum(C);
        case OrderStrategy::BabyStepGiantStep:
        case OrderStrategy::Auto:
            if (strategy == OrderStrategy::Auto && C.p() < kLegendreSumLimit) return order_by_legendre_sum(C);
            if (const std::uint64_t n = order_by_bsgs(C, seed); n != 0) return n;
            return order_by_legendre_sum(C);
    }
    return order_by_legendre_sum(C);
}

std::uint64_t point_order(const Point& P, const GroupInfo& info, const ReducedCurve& C) {
    if (!C.contains(P))
        throw InvalidPoint("point (" + std::to_string(P.x) + ", " + std::to_string(P.y) + ") is not on the curve");
    std::uint64_t ord = info.n;
    for (const auto& [q, e] : info.n_factored) {
        for (int i = 0; i < e && detail::mul_is_identity(ord / q, P, C.a(), C.field()); ++i) ord /= q;
    }
    return ord;
}

GroupInfo group_structure(const ReducedCurve& C, std::uint64_t seed, int samples) {
    const PrimeModulus& m = C.field();
    const std::uint64_t p = C.p();
    GroupInfo info;
    info.n = curve_order(C, OrderStrategy::Auto, seed);
    info.n_factored = factor(info.n);
    info.a_p = static_cast<std::int64_t>(p + 1) - static_cast<std::int64_t>(info.n);
    info.supersingular = info.a_p == 0;

    // Prime-by-prime exponent of the l-Sylow subgroup. Only primes with l | p-1 and
    // l^2 | n can have a non-cyclic Sylow subgroup, since L | gcd(M, p-1).
    struct Open {
        std::uint64_t ell;
        int e;
        int best;            // largest exponent b with an element of order ell^b seen
        bool rank_two;       // E[ell] known to be rational
        std::uint64_t cofactor;
    };
    std::vector<Open> open;
    std::uint64_t M = 1;
    for (const auto& [ell, e] : info.n_factored) {
        std::uint64_t pe = 1;
        for (int i = 0; i < e; ++i) pe *= ell;
        if (e < 2 || (p - 1) % ell != 0) {
            M *= pe;
            continue;
        }
        bool rank_two = false;
        if (ell <= 7) {
            rank_two = full_torsion_rational(ell, C);
            if (!rank_two) {
                M *= pe;
                continue;
            }
        }
        open.push_back({ell, e, (e + 1) / 2, rank_two, info.n / pe});
    }

    auto settled = [](const Open& o) { return o.rank_two && o.best == o.e - 1; };
    if (!open.empty()) {
        auto rng = make_rng(seed, p, 2);
        const int cap = 8 * samples;
        int since_change = 0;
        for (int s = 0; s < cap; ++s) {
            const bool all_settled = std::all_of(open.begin(), open.end(), settled);
            if (all_settled || (s >= samples && since_change >= samples)) {
                std::uint64_t trial = M;
                for (const auto& o : open)
                    for (int i = 0; i < o.best; ++i) trial *= o.ell;
                const std::uint64_t L = info.n / trial;
                if (trial % L == 0 && (p - 1) % L == 0) break;
            }
            const Point R = random_point(C.a(), C.b(), m, rng);
            ++since_change;
            for (auto& o : open) {
                Point S = detail::mul_unchecked(o.cofactor, R, C.a(), m);
                int t = 0;
                while (!S.is_infinity()) {
                    S = detail::mul_unchecked(o.ell, S, C.a(), m);
                    ++t;
                }
                if (t > o.best) {
                    o.best = t;
                    since_change = 0;
                }
            }
        }
        for (const auto& o : open)
            for (int i = 0; i < o.best; ++i) M *= o.ell;
    }
    info.M = M;
    info.L = info.n / M;
    if (info.L * info.M != info.n || info.M % info.L != 0 || (p - 1) % info.L != 0)
        throw std::logic_error("inconsistent group structure at p = " + std::to_string(p));
    return info;
}

}  // namespace maxorder
