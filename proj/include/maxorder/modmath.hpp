#pragma once

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

namespace maxorder {

/// An odd prime modulus p < 2^32, so that every product of two residues fits in 64 bits.
///
/// Construction runs a deterministic Miller-Rabin test. A modulus may optionally carry a
/// table of quadratic residues (one byte per residue); legendre_symbol consults it when
/// present and otherwise falls back to the Jacobi algorithm. Results are identical.
class PrimeModulus {
public:
    explicit PrimeModulus(std::uint64_t p);

    static PrimeModulus with_residue_table(std::uint64_t p);

    std::uint64_t value() const noexcept { return p_; }
    bool has_residue_table() const noexcept { return static_cast<bool>(squares_); }

    std::uint64_t reduce(std::int64_t a) const noexcept {
        const auto m = static_cast<std::int64_t>(p_);
        const std::int64_t r = a % m;
        return static_cast<std::uint64_t>(r < 0 ? r + m : r);
    }
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept {
        const std::uint64_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept {
        return a >= b ? a - b : a + p_ - b;
    }
    std::uint64_t neg(std::uint64_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept { return (a * b) % p_; }
    std::uint64_t pow(std::uint64_t base, std::uint64_t e) const noexcept;

    // Table lookup; only valid when has_residue_table().
    bool table_says_square(std::uint64_t a) const noexcept { return (*squares_)[a] != 0; }

    friend bool operator==(const PrimeModulus& l, const PrimeModulus& r) noexcept {
        return l.p_ == r.p_;
    }

private:
    std::uint64_t p_;
    std::shared_ptr<const std::vector<std::uint8_t>> squares_;
};

/// Inverse of a mod p. Throws DivisionByZero when a ≡ 0.
std::uint64_t mod_inv(std::uint64_t a, const PrimeModulus& m);

/// Legendre symbol (a/p) for any integer a: 0, +1 or -1.
int legendre_symbol(std::int64_t a, const PrimeModulus& m);

/// Square root of a mod p; the smaller of the two roots. Throws NotASquare for non-residues.
std::uint64_t sqrt_mod(std::uint64_t a, const PrimeModulus& m);

/// Ascending list of primes ≤ x (sieve of Eratosthenes).
std::vector<std::uint64_t> primes_up_to(std::uint64_t x);

/// Deterministic primality test for 64-bit integers.
bool is_prime(std::uint64_t n) noexcept;

/// Prime factorisation by trial division, ascending primes with exponents.
using Factorization = std::vector<std::pair<std::uint64_t, int>>;
Factorization factor(std::uint64_t n);

std::uint64_t isqrt(std::uint64_t n) noexcept;

}  // namespace maxorder
