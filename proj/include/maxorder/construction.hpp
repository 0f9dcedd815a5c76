#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "maxorder/curve.hpp"
#include "maxorder/int_poly.hpp"

namespace maxorder {

/// f(x) = x^3 + A x + B.
IntPoly cubic_poly(const CurveQ& E);
/// Numerator and denominator of the x-coordinate of doubling:
/// r(x) = x^4 - 2A x^2 - 8B x + A^2,  s(x) = 4x^3 + 4A x + 4B.
IntPoly doubling_numerator(const CurveQ& E);
IntPoly doubling_denominator(const CurveQ& E);

/// Distinct primes dividing |v| (trial division, then Pollard rho on the cofactor).
std::vector<BigInt> distinct_prime_divisors(const BigInt& v);

/// z^2 - P, where P is the product of the primes dividing disc(E) together with 2, 3, 5, 7.
IntPoly build_g(const CurveQ& E);

/// xi_j(x) = r(x) - j s(x), whose roots are the x-coordinates of the halves of points
/// with x-coordinate j.
IntPoly xi_poly(const CurveQ& E, std::int64_t j);

/// T = f * g * xi_0 * ... * xi_N, degree 4N + 9.
IntPoly build_T(const CurveQ& E, int N);

struct IdentityReport {
    bool passed = true;
    int checks = 0;
    std::vector<std::string> failures;
};

/// Res(r, s) = 2^8 (4A^3 + 27B^2)^2 and disc(xi_j) = 2^12 (-4A^3 - 27B^2) f(j)^2 for j in [0, j_max].
IdentityReport verify_identities(const CurveQ& E, int j_max);

/// Every irreducible factor of a mod p is linear (repeated roots allowed).
/// Throws LeadingCoefficientVanishes when p | lc(a).
bool splits_completely(const IntPoly& a, std::uint64_t p);

/// Degrees of the distinct irreducible factors of a mod p, ascending.
std::vector<int> factor_degrees_mod_p(const IntPoly& a, std::uint64_t p);

/// Smallest prime 7 < p <= pmax of good reduction at which f, g and every xi_j (j <= N)
/// split completely and p divides no discriminant of their squarefree parts.
std::optional<std::uint64_t> find_split_prime(const CurveQ& E, int N, std::uint64_t pmax);

/// Checks the halving argument at a split prime: every point with x in [0, N] is a double
/// of a rational point or has order <= 2, the group has even order, and hence r(E, p) > N.
struct HalvingReport {
    bool passed = true;
    std::uint64_t p = 0;
    int N = 0;
    std::uint64_t group_order = 0;
    std::uint64_t exponent = 0;
    std::uint64_t r = 0;
    int points_checked = 0;
    std::vector<std::string> failures;
};
HalvingReport verify_halving_argument(const CurveQ& E, std::uint64_t p, int N, std::uint64_t seed = 0);

/// Factor-degree check over split primes: whenever f splits mod p, the splitting field of
/// each xi_j mod p has degree dividing 4, i.e. lcm of its factor degrees divides 4.
struct DegreeReport {
    bool passed = true;
    int primes_used = 0;
    int checks = 0;
    std::vector<std::string> failures;
};
DegreeReport verify_xi_degree_bound(const CurveQ& E, int prime_count, int j_max);

/// Constants of the explicit prime-splitting bound chain. curve_constant stands in for the
/// unspecified curve-dependent constant and is illustrative only.
struct BoundConstants {
    std::int64_t linear_exponent = 12577;
    std::int64_t degree_bound_base = 4;
    std::int64_t degree_prefactor = 432;
    double grh_constant = 1.0;
    double curve_constant = 2.0;

    static BoundConstants for_curve(const CurveQ& E);
};

enum class BoundMode { Unconditional, Grh };

/// Upper bound on log log p (unconditional) or log p (GRH) for the least prime splitting
/// completely in the splitting field of T, evaluated in log space. N >= 1.
double theorem_bound(std::int64_t N, const BoundConstants& k, BoundMode mode);

}  // namespace maxorder
