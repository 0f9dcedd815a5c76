#pragma once

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "maxorder/fp_poly.hpp"

namespace maxorder {

using BigInt = boost::multiprecision::cpp_int;

/// Univariate polynomial with exact integer coefficients, ascending degree.
/// The zero polynomial has no coefficients and degree -1.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs);
    IntPoly(std::initializer_list<long long> coeffs);

    static IntPoly monomial(BigInt c, int degree);

    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    const std::vector<BigInt>& coeffs() const noexcept { return c_; }
    BigInt coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : BigInt(0); }
    const BigInt& lc() const;

    BigInt eval(const BigInt& x) const;
    IntPoly derivative() const;
    /// gcd of the coefficients, non-negative.
    BigInt content() const;
    /// Divided by its content, sign chosen so the leading coefficient is positive.
    IntPoly primitive_part() const;
    FpPoly reduce(const PrimeModulus& m) const;

    IntPoly operator-() const;
    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator*(const BigInt& s) const;

    friend bool operator==(const IntPoly&, const IntPoly&) = default;

    /// Human-readable form, highest degree first, e.g. "x^4 - 2*x^2 + 1".
    std::string to_string() const;

private:
    void trim();
    std::vector<BigInt> c_;
};

/// lc(b)^(deg a - deg b + 1) a = q b + r with deg r < deg b.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);

/// a / b when the division is exact over Z; throws std::domain_error otherwise.
IntPoly exact_quotient(const IntPoly& a, const IntPoly& b);

/// Res(a, b) = lc(a)^deg(b) * prod b(alpha) over the roots alpha of a, computed with the
/// subresultant PRS. Throws UndefinedResultant when either argument is zero.
BigInt resultant(const IntPoly& a, const IntPoly& b);

/// disc(a) = (-1)^(n(n-1)/2) Res(a, a') / lc(a), n = deg a >= 1.
BigInt poly_discriminant(const IntPoly& a);

/// Primitive gcd over Z[x] with positive leading coefficient.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

/// Product of the distinct irreducible factors of a over Q, as a primitive integer polynomial.
IntPoly squarefree_part(const IntPoly& a);

/// JSON array of decimal-string coefficients, ascending degree.
std::string to_json(const IntPoly& a);
IntPoly int_poly_from_json(std::string_view text);

}  // namespace maxorder
