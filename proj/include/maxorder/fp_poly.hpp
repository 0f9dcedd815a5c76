#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

#include "maxorder/modmath.hpp"

namespace maxorder {

/// Dense univariate polynomial over F_p, coefficients in ascending degree.
/// The zero polynomial has no coefficients and degree -1.
class FpPoly {
public:
    explicit FpPoly(PrimeModulus m) : mod_(std::move(m)) {}
    FpPoly(PrimeModulus m, std::vector<std::uint64_t> coeffs);
    FpPoly(PrimeModulus m, std::initializer_list<std::int64_t> coeffs);

    static FpPoly x(const PrimeModulus& m) { return FpPoly(m, {0, 1}); }
    static FpPoly constant(const PrimeModulus& m, std::uint64_t c) { return FpPoly(m, std::vector<std::uint64_t>{c}); }

    const PrimeModulus& modulus() const noexcept { return mod_; }
    const std::vector<std::uint64_t>& coeffs() const noexcept { return c_; }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    std::uint64_t lc() const noexcept { return c_.empty() ? 0 : c_.back(); }
    std::uint64_t operator[](std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }

    std::uint64_t eval(std::uint64_t x) const noexcept;
    FpPoly derivative() const;
    FpPoly monic() const;

    FpPoly operator+(const FpPoly& o) const;
    FpPoly operator-(const FpPoly& o) const;
    FpPoly operator*(const FpPoly& o) const;
    FpPoly scaled(std::uint64_t s) const;

    friend bool operator==(const FpPoly& a, const FpPoly& b) noexcept { return a.c_ == b.c_; }

private:
    void trim() noexcept {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    PrimeModulus mod_;
    std::vector<std::uint64_t> c_;
};

struct FpDivMod {
    FpPoly quotient;
    FpPoly remainder;
};

FpDivMod divmod(const FpPoly& a, const FpPoly& b);
FpPoly operator%(const FpPoly& a, const FpPoly& b);

/// Monic gcd (zero if both inputs are zero).
FpPoly gcd(FpPoly a, FpPoly b);

/// base^e mod modulus.
FpPoly powmod(FpPoly base, std::uint64_t e, const FpPoly& modulus);

/// Degrees of the distinct monic irreducible factors of a (multiplicities ignored),
/// ascending. a must be nonzero.
std::vector<int> distinct_factor_degrees(const FpPoly& a);

/// Distinct roots of a in F_p, ascending. Splitting is randomised but the result is not.
std::vector<std::uint64_t> roots(const FpPoly& a, std::mt19937_64& rng);
std::vector<std::uint64_t> roots(const FpPoly& a);

/// Number of distinct roots in F_p, i.e. deg gcd(a, x^p - x).
int count_roots(const FpPoly& a);

}  // namespace maxorder
