#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "maxorder/fp_poly.hpp"
#include "maxorder/modmath.hpp"

namespace maxorder {

using BigInt = boost::multiprecision::cpp_int;

/// y^2 = x^3 + A x + B over Q with 4A^3 + 27B^2 != 0.
class CurveQ {
public:
    CurveQ(std::int64_t A, std::int64_t B);

    std::int64_t A() const noexcept { return A_; }
    std::int64_t B() const noexcept { return B_; }

    /// 4A^3 + 27B^2.
    BigInt weierstrass_invariant() const;
    /// -16 (4A^3 + 27B^2).
    BigInt discriminant() const;

    friend bool operator==(const CurveQ&, const CurveQ&) = default;

private:
    std::int64_t A_;
    std::int64_t B_;
};

/// "y^2 = x^3 + x", "y^2 = x^3 - 7x + 6", ...
std::string to_string(const CurveQ& E);

/// Affine point (x, y) or the point at infinity.
struct Point {
    std::uint64_t x = 0;
    std::uint64_t y = 0;
    bool infinity = true;

    static constexpr Point at_infinity() noexcept { return {}; }
    static constexpr Point affine(std::uint64_t x, std::uint64_t y) noexcept { return {x, y, false}; }
    constexpr bool is_infinity() const noexcept { return infinity; }

    friend constexpr bool operator==(const Point& l, const Point& r) noexcept {
        if (l.infinity || r.infinity) return l.infinity == r.infinity;
        return l.x == r.x && l.y == r.y;
    }
    // Infinity sorts first.
    friend constexpr std::strong_ordering operator<=>(const Point& l, const Point& r) noexcept {
        if (l.infinity || r.infinity) return r.infinity <=> l.infinity;
        if (auto c = l.x <=> r.x; c != 0) return c;
        return l.y <=> r.y;
    }
};

/// A curve reduced modulo a prime p >= 5 of good reduction.
class ReducedCurve {
public:
    ReducedCurve(const CurveQ& curve, PrimeModulus mod);

    const CurveQ& curve() const noexcept { return curve_; }
    const PrimeModulus& field() const noexcept { return mod_; }
    std::uint64_t p() const noexcept { return mod_.value(); }
    std::uint64_t a() const noexcept { return a_; }
    std::uint64_t b() const noexcept { return b_; }

    /// x^3 + a x + b mod p.
    std::uint64_t rhs(std::uint64_t x) const noexcept {
        return mod_.add(mod_.mul(mod_.add(mod_.mul(x, x), a_), x), b_);
    }
    FpPoly rhs_poly() const { return FpPoly(mod_, {static_cast<std::int64_t>(b_), static_cast<std::int64_t>(a_), 0, 1}); }

    bool contains(const Point& P) const noexcept {
        return P.is_infinity() || (P.x < p() && P.y < p() && mod_.mul(P.y, P.y) == rhs(P.x));
    }

private:
    CurveQ curve_;
    PrimeModulus mod_;
    std::uint64_t a_;
    std::uint64_t b_;
};

/// Order n, structure Z/L x Z/M (L | M), trace a_p = p + 1 - n.
struct GroupInfo {
    std::uint64_t n = 0;
    std::uint64_t L = 0;
    std::uint64_t M = 0;
    std::int64_t a_p = 0;
    bool supersingular = false;
    Factorization n_factored;
};

enum class OrderStrategy { Auto, LegendreSum, BabyStepGiantStep };

/// Reduces E mod p. Throws BadReduction when p divides the discriminant (always for p = 2)
/// and UnsupportedPrime for p = 3.
ReducedCurve reduce_curve(const CurveQ& E, std::uint64_t p);
ReducedCurve reduce_curve(const CurveQ& E, const PrimeModulus& p);

Point point_neg(const Point& P, const ReducedCurve& C);
Point point_add(const Point& P, const Point& Q, const ReducedCurve& C);
Point scalar_mul(std::uint64_t k, const Point& P, const ReducedCurve& C);

/// x-coordinate of 2(x, y) computed from x alone as r(x)/s(x), with
/// r(x) = x^4 - 2a x^2 - 8b x + a^2 and s(x) = 4(x^3 + a x + b).
std::uint64_t double_x_rational(std::uint64_t x, const ReducedCurve& C);

/// Points of E(F_p) with the given x-coordinate, ascending by y.
std::vector<Point> lift_points_at_x(std::uint64_t x, const ReducedCurve& C);

/// Every Q in E(F_p) with 2Q = P, ascending.
std::vector<Point> preimages_of_doubling(const Point& P, const ReducedCurve& C);

std::uint64_t curve_order(const ReducedCurve& C, OrderStrategy strategy = OrderStrategy::Auto,
                          std::uint64_t seed = 0);

/// Legendre-sum point count; O(p).
std::uint64_t order_by_legendre_sum(const ReducedCurve& C);
/// Baby-step/giant-step count over the Hasse window, using the quadratic twist to
/// disambiguate. Returns 0 if it fails to pin down a unique order within its budget
/// (only possible for small p).
std::uint64_t order_by_bsgs(const ReducedCurve& C, std::uint64_t seed);

/// Exact order of P, given a correct group order in info.
std::uint64_t point_order(const Point& P, const GroupInfo& info, const ReducedCurve& C);

/// Group order, structure and trace. Deterministic for a fixed seed.
GroupInfo group_structure(const ReducedCurve& C, std::uint64_t seed = 0, int samples = 32);

/// The quadratic twist y^2 = x^3 + a d^2 x + b d^3 by the least non-residue d.
struct TwistCoefficients {
    std::uint64_t a;
    std::uint64_t b;
};
TwistCoefficients quadratic_twist(const ReducedCurve& C);

/// Division polynomial psi_n as an element of F_p[x]; for even n the factor y is dropped.
FpPoly division_polynomial(int n, const ReducedCurve& C);

/// True when all of E[ell] is defined over F_p (ell an odd prime or 2).
bool full_torsion_rational(std::uint64_t ell, const ReducedCurve& C);

namespace detail {

// Hot-path helpers that skip the on-curve validation of the public API.
Point add_unchecked(const Point& P, const Point& Q, std::uint64_t a, const PrimeModulus& m);
Point mul_unchecked(std::uint64_t k, const Point& P, std::uint64_t a, const PrimeModulus& m);
bool mul_is_identity(std::uint64_t k, const Point& P, std::uint64_t a, const PrimeModulus& m);

}  // namespace detail

}  // namespace maxorder
