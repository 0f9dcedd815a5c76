#include <random>

#include "doctest.h"
#include "maxorder/errors.hpp"
#include "maxorder/modmath.hpp"
#include "oracles.hpp"

using namespace maxorder;

TEST_CASE("mod_inv examples") {
    CHECK(mod_inv(3, PrimeModulus(7)) == 5);
    CHECK(mod_inv(1, PrimeModulus(101)) == 1);
    CHECK_THROWS_AS(mod_inv(0, PrimeModulus(7)), DivisionByZero);
}

TEST_CASE("legendre_symbol examples") {
    CHECK(legendre_symbol(2, PrimeModulus(7)) == 1);
    CHECK(legendre_symbol(3, PrimeModulus(7)) == -1);
    CHECK(legendre_symbol(0, PrimeModulus(5)) == 0);
    CHECK(legendre_symbol(-1, PrimeModulus(7)) == -1);
    CHECK(legendre_symbol(-1, PrimeModulus(13)) == 1);
}

TEST_CASE("sqrt_mod examples") {
    CHECK(sqrt_mod(2, PrimeModulus(7)) == 3);
    CHECK(sqrt_mod(0, PrimeModulus(13)) == 0);
    CHECK_THROWS_AS(sqrt_mod(3, PrimeModulus(7)), NotASquare);
}

TEST_CASE("primes_up_to examples") {
    CHECK(primes_up_to(10) == std::vector<std::uint64_t>{2, 3, 5, 7});
    CHECK(primes_up_to(1).empty());
    CHECK(primes_up_to(0).empty());
    CHECK(primes_up_to(100).size() == 25);
}

TEST_CASE("modulus must be an odd prime") {
    CHECK_THROWS_AS(PrimeModulus(2), InvalidModulus);
    CHECK_THROWS_AS(PrimeModulus(9), InvalidModulus);
    CHECK_THROWS_AS(PrimeModulus(1), InvalidModulus);
    CHECK_THROWS_AS(PrimeModulus(4294967311ull), InvalidModulus);  // prime, but >= 2^32
    CHECK(PrimeModulus(4294967291ull).value() == 4294967291ull);
}

TEST_CASE("no overflow near 2^32") {
    const PrimeModulus m(4294967291ull);
    const std::uint64_t a = m.value() - 1;  // -1
    CHECK(m.mul(a, a) == 1);
    CHECK(mod_inv(a, m) == a);
    CHECK(legendre_symbol(-1, m) == -1);  // p = 3 mod 4
    const std::uint64_t r = sqrt_mod(m.mul(123456789, 123456789), m);
    CHECK(m.mul(r, r) == m.mul(123456789, 123456789));
}

TEST_CASE("inverse property, exhaustive for small primes") {
    for (std::uint64_t p : {3, 5, 7, 11, 101, 65537}) {
        const PrimeModulus m(p);
        for (std::uint64_t a = 1; a < p; ++a) REQUIRE(m.mul(a, mod_inv(a, m)) == 1);
    }
}

TEST_CASE("legendre is completely multiplicative") {
    std::mt19937_64 rng(7);
    for (std::uint64_t p : {7, 13, 1009, 65521, 2147483647}) {
        const PrimeModulus m(p);
        for (int i = 0; i < 500; ++i) {
            const auto a = static_cast<std::int64_t>(rng() % (4 * p)) - static_cast<std::int64_t>(2 * p);
            const auto b = static_cast<std::int64_t>(rng() % (4 * p)) - static_cast<std::int64_t>(2 * p);
            const std::int64_t ab = static_cast<std::int64_t>(m.mul(m.reduce(a), m.reduce(b)));
            REQUIRE(legendre_symbol(ab, m) == legendre_symbol(a, m) * legendre_symbol(b, m));
        }
    }
}

TEST_CASE("half of the nonzero residues are squares, roots come in pairs") {
    for (std::uint64_t p : {3, 5, 7, 13, 17, 97, 257, 1009, 7681}) {
        const PrimeModulus m(p);
        std::uint64_t squares = 0;
        for (std::uint64_t a = 1; a < p; ++a) {
            if (legendre_symbol(static_cast<std::int64_t>(a), m) != 1) continue;
            ++squares;
            const std::uint64_t r = sqrt_mod(a, m);
            REQUIRE(m.mul(r, r) == a);
            REQUIRE(r <= p - r);
            REQUIRE(r != p - r);
            int count = 0;
            for (std::uint64_t y = 0; y < p; ++y) count += m.mul(y, y) == a;
            REQUIRE(count == 2);
        }
        CHECK(squares == (p - 1) / 2);
    }
}

TEST_CASE("residue table agrees with the Jacobi path") {
    for (std::uint64_t p : {5, 11, 4093, 65521}) {
        const PrimeModulus plain(p);
        const PrimeModulus table = PrimeModulus::with_residue_table(p);
        REQUIRE(table.has_residue_table());
        for (std::int64_t a = -3; a < static_cast<std::int64_t>(p) + 3; ++a)
            REQUIRE(legendre_symbol(a, plain) == legendre_symbol(a, table));
    }
}

TEST_CASE("primes_up_to matches trial division up to 10^4") {
    const auto sieve = primes_up_to(10000);
    std::vector<std::uint64_t> slow;
    for (std::uint64_t n = 0; n <= 10000; ++n)
        if (oracle::is_prime_trial(n)) slow.push_back(n);
    CHECK(sieve == slow);
}

TEST_CASE("is_prime and factor") {
    for (std::uint64_t n = 0; n < 20000; ++n) REQUIRE(is_prime(n) == oracle::is_prime_trial(n));
    CHECK(is_prime(2147483647));
    CHECK_FALSE(is_prime(3215031751ull));  // strong pseudoprime to bases 2, 3, 5, 7
    CHECK(factor(537600) == Factorization{{2, 10}, {3, 1}, {5, 2}, {7, 1}});
    CHECK(factor(1).empty());
    CHECK(factor(8589934583ull) == Factorization{{8589934583ull, 1}});  // prime > 2^33
    std::mt19937_64 rng(3);
    for (int i = 0; i < 300; ++i) {
        const std::uint64_t n = 2 + rng() % (std::uint64_t{1} << 34);
        std::uint64_t back = 1;
        for (const auto& [q, e] : factor(n)) {
            REQUIRE(is_prime(q));
            for (int k = 0; k < e; ++k) back *= q;
        }
        REQUIRE(back == n);
    }
}

TEST_CASE("isqrt") {
    for (std::uint64_t n = 0; n < 5000; ++n) {
        const std::uint64_t r = isqrt(n);
        REQUIRE(r * r <= n);
        REQUIRE((r + 1) * (r + 1) > n);
    }
    CHECK(isqrt(std::uint64_t{1} << 62) == std::uint64_t{1} << 31);
}
