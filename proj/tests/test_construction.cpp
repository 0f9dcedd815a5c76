#include <cmath>
#include <numeric>
#include <random>

#include "doctest.h"
#include "maxorder/construction.hpp"
#include "maxorder/curves.hpp"
#include "maxorder/errors.hpp"
#include "maxorder/scan.hpp"
#include "oracles.hpp"

using namespace maxorder;

namespace {

std::vector<BigInt> coeffs(const IntPoly& a) {
    std::vector<BigInt> out;
    for (int i = 0; i <= a.degree(); ++i) out.push_back(a.coeff(i));
    return out;
}

CurveQ random_curve(std::mt19937_64& rng, std::int64_t bound) {
    for (;;) {
        const auto A = static_cast<std::int64_t>(rng() % (2 * bound + 1)) - bound;
        const auto B = static_cast<std::int64_t>(rng() % (2 * bound + 1)) - bound;
        if (4 * A * A * A + 27 * B * B != 0) return CurveQ(A, B);
    }
}

}  // namespace

TEST_CASE("IntPoly basics") {
    const IntPoly a{1, 0, -2, 0, 1};  // ascending
    CHECK(a.degree() == 4);
    CHECK((a).to_string() == "x^4 - 2*x^2 + 1");
    CHECK(a.eval(3) == 64);
    CHECK((a.derivative()).to_string() == "4*x^3 - 4*x");
    CHECK((a * IntPoly{-1, 1}).degree() == 5);
    CHECK(IntPoly{6, 4, 2}.content() == 2);
    CHECK((IntPoly{6, 4, 2}.primitive_part()).to_string() == "x^2 + 2*x + 3");
    CHECK(IntPoly{}.degree() < 0);
    CHECK(exact_quotient(a, IntPoly{-1, 0, 1}) == IntPoly{-1, 0, 1});
    CHECK_THROWS(exact_quotient(a, IntPoly{1, 0, 1}));
}

TEST_CASE("IntPoly JSON round trip") {
    std::mt19937_64 rng(8);
    for (int t = 0; t < 50; ++t) {
        std::vector<BigInt> c;
        for (int i = 0; i <= static_cast<int>(rng() % 8); ++i) c.push_back(BigInt(static_cast<long long>(rng())) * rng() - BigInt(rng()));
        c.back() += c.back() == 0;
        const IntPoly a(c);
        CHECK(int_poly_from_json(to_json(a)) == a);
    }
    CHECK_THROWS(int_poly_from_json("{\"x\": 1}"));
}

TEST_CASE("build_g examples") {
    CHECK(build_g(CurveQ(1, 0)) == IntPoly{-210, 0, 1});
    CHECK(build_g(CurveQ(-1, 0)) == IntPoly{-210, 0, 1});
    CHECK(build_g(CurveQ(1, 1)) == IntPoly{-6510, 0, 1});
}

TEST_CASE("xi_poly examples") {
    CHECK(xi_poly(CurveQ(1, 0), 0) == IntPoly{1, 0, -2, 0, 1});
    CHECK(xi_poly(CurveQ(1, 0), 1) == IntPoly{1, -4, -2, -4, 1});
    CHECK(xi_poly(CurveQ(0, 1), 0) == IntPoly{0, -8, 0, 0, 1});
    CHECK_THROWS_AS(xi_poly(CurveQ(0, 1), -1), UsageError);
}

TEST_CASE("build_T examples") {
    const CurveQ E(1, 0);
    CHECK(build_T(E, 0) == cubic_poly(E) * IntPoly{-210, 0, 1} * IntPoly{1, 0, -2, 0, 1});
    CHECK(build_T(E, 0).degree() == 9);
    for (const NamedCurve& nc : named_curves()) CHECK(build_T(nc.curve, 3).degree() == 21);
    const IntPoly T = build_T(CurveQ(1, 1), 1);
    CHECK(T.degree() == 13);
    CHECK(T.coeff(0) == BigInt(1) * -6510 * 1 * -3);
}

TEST_CASE("resultant examples") {
    CHECK(resultant(IntPoly{-2, 1}, IntPoly{-3, 1}) == -1);
    const CurveQ E(1, 0);
    // s = 4f carries a factor 4^deg(r) into the resultant.
    CHECK(resultant(doubling_numerator(E), doubling_denominator(E)) == 4096);
    CHECK(resultant(doubling_numerator(E), cubic_poly(E)) == 16);
    CHECK(resultant(IntPoly{1, 0, 1}, IntPoly{1, 0, 1}) == 0);
    CHECK_THROWS_AS(resultant(IntPoly{}, IntPoly{1, 1}), UndefinedResultant);
    CHECK(resultant(IntPoly{5}, IntPoly{1, 1, 1}) == 25);
}

TEST_CASE("resultant matches the Sylvester determinant") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 300; ++t) {
        auto rand_poly = [&](int deg) {
            std::vector<BigInt> c;
            for (int i = 0; i <= deg; ++i) c.push_back(static_cast<long long>(rng() % 41) - 20);
            if (c.back() == 0) c.back() = 1 + static_cast<long long>(rng() % 5);
            return IntPoly(c);
        };
        const IntPoly a = rand_poly(1 + static_cast<int>(rng() % 6)), b = rand_poly(1 + static_cast<int>(rng() % 6));
        REQUIRE(resultant(a, b) == oracle::sylvester_resultant(coeffs(a), coeffs(b)));
        // Res(a, b) = (-1)^{deg a deg b} Res(b, a)
        const int sign = (a.degree() * b.degree()) % 2 ? -1 : 1;
        REQUIRE(resultant(b, a) == sign * resultant(a, b));
    }
}

TEST_CASE("discriminant examples") {
    CHECK(poly_discriminant(IntPoly{-210, 0, 1}) == 840);
    CHECK(poly_discriminant(xi_poly(CurveQ(1, 0), 0)) == 0);
    CHECK(poly_discriminant(xi_poly(CurveQ(1, 0), 1)) == -65536);
    CHECK(poly_discriminant(IntPoly{1, 2, 3}) == 4 - 12);
}

TEST_CASE("gcd and squarefree part") {
    const IntPoly x1{-1, 1}, x2{-2, 1}, q{1, 0, 1};
    CHECK(gcd(x1 * x1 * x2, x1 * q) == x1);
    CHECK(squarefree_part(x1 * x1 * x2 * x2 * x2 * q) == x1 * x2 * q);
    CHECK(squarefree_part(xi_poly(CurveQ(1, 0), 0)) == IntPoly{-1, 0, 1});
}

TEST_CASE("identities on named and random curves") {
    CHECK(verify_identities(CurveQ(1, 0), 10).passed);
    CHECK(verify_identities(CurveQ(-7, 6), 10).passed);
    std::mt19937_64 rng(2024);
    for (int t = 0; t < 40; ++t) {
        const CurveQ E = random_curve(rng, 500);
        const IdentityReport rep = verify_identities(E, 5);
        CHECK(rep.passed);
        CHECK(rep.checks == 7);
        // Independent check of the first identity.
        const BigInt w = E.weierstrass_invariant();
        CHECK(oracle::sylvester_resultant(coeffs(doubling_numerator(E)), coeffs(doubling_denominator(E))) == 256 * w * w);
        CHECK(oracle::sylvester_resultant(coeffs(doubling_numerator(E)), coeffs(cubic_poly(E))) == w * w);
        for (std::int64_t j : {0, 3, 5}) {
            const IntPoly xi = xi_poly(E, j);
            const BigInt d = oracle::sylvester_resultant(coeffs(xi), coeffs(xi.derivative()));
            const BigInt fj = cubic_poly(E).eval(j);
            CHECK(d == BigInt(4096) * -w * fj * fj);  // monic quartic: disc = Res(xi, xi')
        }
    }
}

TEST_CASE("splits_completely and factor_degrees_mod_p") {
    const IntPoly x2p1{1, 0, 1};
    CHECK(splits_completely(x2p1, 5));
    CHECK_FALSE(splits_completely(x2p1, 7));
    CHECK(factor_degrees_mod_p(x2p1, 5) == std::vector<int>{1, 1});
    CHECK(factor_degrees_mod_p(x2p1, 7) == std::vector<int>{2});
    CHECK(factor_degrees_mod_p(IntPoly{1, 0, 0, 0, 1}, 3) == std::vector<int>{2, 2});
    for (std::uint64_t p : {5, 7, 11, 13, 101, 1009}) CHECK(splits_completely(xi_poly(CurveQ(1, 0), 0), p));
    CHECK_THROWS_AS(splits_completely(IntPoly{1, 0, 5}, 5), LeadingCoefficientVanishes);
    CHECK_THROWS_AS(factor_degrees_mod_p(IntPoly{1, 0, 7}, 7), LeadingCoefficientVanishes);
}

TEST_CASE("splitting agrees with root counting") {
    std::mt19937_64 rng(4);
    for (int t = 0; t < 300; ++t) {
        const std::uint64_t p = primes_up_to(200)[3 + rng() % 40];
        std::vector<BigInt> c;
        const int deg = 1 + static_cast<int>(rng() % 6);
        for (int i = 0; i < deg; ++i) c.push_back(static_cast<long long>(rng() % 100) - 50);
        c.push_back(1);
        const IntPoly a(c);
        const auto degs = factor_degrees_mod_p(a, p);
        const bool all_linear = std::all_of(degs.begin(), degs.end(), [](int d) { return d == 1; });
        REQUIRE(splits_completely(a, p) == all_linear);
        std::vector<std::uint64_t> mod;
        for (const BigInt& v : c) mod.push_back(static_cast<std::uint64_t>(((v % p) + p) % p));
        const auto rts = oracle::roots_by_search(mod, p);
        REQUIRE(static_cast<std::size_t>(std::count(degs.begin(), degs.end(), 1)) == rts.size());
    }
}

TEST_CASE("find_split_prime examples") {
    CHECK(find_split_prime(CurveQ(1, 0), 0, 100) == std::optional<std::uint64_t>{29});
    CHECK_FALSE(find_split_prime(CurveQ(1, 0), 0, 10).has_value());
}

TEST_CASE("find_split_prime result is a genuine split prime") {
    for (const NamedCurve& nc : named_curves()) {
        for (int N : {0, 1}) {
            const auto p = find_split_prime(nc.curve, N, 10000000);
            REQUIRE(p.has_value());
            CHECK(*p > 7);
            CHECK(splits_completely(build_T(nc.curve, N), *p));
            CHECK(r_of_p(nc.curve, *p) > static_cast<std::uint64_t>(N));
        }
    }
}

TEST_CASE("verify_halving_argument examples") {
    const HalvingReport a = verify_halving_argument(CurveQ(1, 0), 29, 0);
    CHECK(a.passed);
    CHECK(a.r >= 1);
    const auto p1 = find_split_prime(CurveQ(-1, 0), 1, 10000000);
    REQUIRE(p1.has_value());
    CHECK(verify_halving_argument(CurveQ(-1, 0), *p1, 1).passed);
    const auto p2 = find_split_prime(CurveQ(1, 1), 2, 10000000);
    REQUIRE(p2.has_value());
    const HalvingReport c = verify_halving_argument(CurveQ(1, 1), *p2, 2);
    CHECK(c.passed);
    CHECK(c.r > 2);
    CHECK(c.r == r_of_p(CurveQ(1, 1), *p2));
}

TEST_CASE("xi degree bound on named curves") {
    for (const NamedCurve& nc : named_curves()) {
        const DegreeReport rep = verify_xi_degree_bound(nc.curve, 10, 10);
        CHECK(rep.passed);
        CHECK(rep.primes_used == 10);
    }
}

TEST_CASE("theorem_bound") {
    const BoundConstants k;
    for (auto [mode, limit] : {std::pair{BoundMode::Unconditional, std::log(4.0)}, {BoundMode::Grh, 2 * std::log(4.0)}}) {
        CHECK(std::abs(theorem_bound(1000, k, mode) / 1000 / limit - 1) < 0.05);
        CHECK(std::abs(theorem_bound(1000000, k, mode) / 1e6 / limit - 1) < 0.001);
        CHECK(theorem_bound(2, k, mode) > theorem_bound(1, k, mode));
        CHECK_THROWS_AS(theorem_bound(0, k, mode), UsageError);
    }
    CHECK(BoundConstants::for_curve(CurveQ(-7, 6)).curve_constant == 7.0);
    CHECK(BoundConstants::for_curve(CurveQ(1, 0)).curve_constant == 2.0);
}

TEST_CASE("distinct_prime_divisors") {
    CHECK(distinct_prime_divisors(BigInt(-64)) == std::vector<BigInt>{2});
    CHECK(distinct_prime_divisors(BigInt(2) * 3 * 3 * 1000003) == std::vector<BigInt>{2, 3, 1000003});
    const BigInt big = BigInt(1000000007) * BigInt(998244353);
    CHECK(distinct_prime_divisors(big) == std::vector<BigInt>{998244353, 1000000007});
}
