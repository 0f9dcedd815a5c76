#include "maxorder/curve.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "maxorder/errors.hpp"

namespace maxorder {

namespace {

std::string curve_name(const CurveQ& E) { return to_string(E); }

std::uint64_t residue_of(const BigInt& v, std::uint64_t p) {
    BigInt r = v % p;
    if (r < 0) r += p;
    return static_cast<std::uint64_t>(r);
}

// Jacobian coordinates: x = X/Z^2, y = Y/Z^3; Z = 0 is infinity.
struct Jacobian {
    std::uint64_t X, Y, Z;
};

Jacobian jac_double(const Jacobian& P, std::uint64_t a, const PrimeModulus& m) {
    if (P.Z == 0 || P.Y == 0) return {1, 1, 0};
    const std::uint64_t YY = m.mul(P.Y, P.Y);
    const std::uint64_t S = m.mul(4, m.mul(P.X, YY));
    const std::uint64_t ZZ = m.mul(P.Z, P.Z);
    const std::uint64_t XX = m.mul(P.X, P.X);
    const std::uint64_t Mv = m.add(m.mul(3, XX), m.mul(a, m.mul(ZZ, ZZ)));
    const std::uint64_t X3 = m.sub(m.mul(Mv, Mv), m.add(S, S));
    const std::uint64_t Y3 = m.sub(m.mul(Mv, m.sub(S, X3)), m.mul(8, m.mul(YY, YY)));
    const std::uint64_t Z3 = m.mul(m.add(P.Y, P.Y), P.Z);
    return {X3, Y3, Z3};
}

// P + (x2, y2) with the second operand affine.
Jacobian jac_add_affine(const Jacobian& P, std::uint64_t x2, std::uint64_t y2, std::uint64_t a,
                        const PrimeModulus& m) {
    if (P.Z == 0) return {x2, y2, 1};
    const std::uint64_t ZZ = m.mul(P.Z, P.Z);
    const std::uint64_t U2 = m.mul(x2, ZZ);
    const std::uint64_t S2 = m.mul(y2, m.mul(ZZ, P.Z));
    const std::uint64_t H = m.sub(U2, P.X);
    const std::uint64_t R = m.sub(S2, P.Y);
    if (H == 0) {
        if (R == 0) return jac_double(P, a, m);
        return {1, 1, 0};
    }
    const std::uint64_t HH = m.mul(H, H);
    const std::uint64_t HHH = m.mul(HH, H);
    const std::uint64_t V = m.mul(P.X, HH);
    const std::uint64_t X3 = m.sub(m.sub(m.mul(R, R), HHH), m.add(V, V));
    const std::uint64_t Y3 = m.sub(m.mul(R, m.sub(V, X3)), m.mul(P.Y, HHH));
    const std::uint64_t Z3 = m.mul(P.Z, H);
    return {X3, Y3, Z3};
}

Jacobian jac_mul(std::uint64_t k, const Point& P, std::uint64_t a, const PrimeModulus& m) {
    Jacobian acc{1, 1, 0};
    if (k == 0 || P.is_infinity()) return acc;
    for (int bit = 63 - __builtin_clzll(k); bit >= 0; --bit) {
        acc = jac_double(acc, a, m);
        if ((k >> bit) & 1) acc = jac_add_affine(acc, P.x, P.y, a, m);
    }
    return acc;
}

Point to_affine(const Jacobian& J, const PrimeModulus& m) {
    if (J.Z == 0) return Point::at_infinity();
    const std::uint64_t zi = mod_inv(J.Z, m);
    const std::uint64_t zi2 = m.mul(zi, zi);
    return Point::affine(m.mul(J.X, zi2), m.mul(J.Y, m.mul(zi2, zi)));
}

void require_on_curve(const Point& P, const ReducedCurve& C) {
    if (!C.contains(P))
        throw InvalidPoint("point (" + std::to_string(P.x) + ", " + std::to_string(P.y) + ") is not on " +
                           curve_name(C.curve()) + " mod " + std::to_string(C.p()));
}

}  // namespace

std::string to_string(const CurveQ& E) {
    std::string out = "y^2 = x^3";
    auto term = [&](std::int64_t c, const char* suffix) {
        if (c == 0) return;
        out += c < 0 ? " - " : " + ";
        const std::uint64_t mag = c < 0 ? 0 - static_cast<std::uint64_t>(c) : static_cast<std::uint64_t>(c);
        if (mag != 1 || *suffix == '\0') out += std::to_string(mag);
        out += suffix;
    };
    term(E.A(), "x");
    term(E.B(), "");
    return out;
}

CurveQ::CurveQ(std::int64_t A, std::int64_t B) : A_(A), B_(B) {
    if (weierstrass_invariant() == 0)
        throw SingularCurve("singular curve: 4A^3 + 27B^2 = 0 for A = " + std::to_string(A) +
                            ", B = " + std::to_string(B));
}

BigInt CurveQ::weierstrass_invariant() const {
    const BigInt A = A_, B = B_;
    return 4 * A * A * A + 27 * B * B;
}

BigInt CurveQ::discriminant() const { return -16 * weierstrass_invariant(); }

ReducedCurve::ReducedCurve(const CurveQ& curve, PrimeModulus mod)
    : curve_(curve), mod_(std::move(mod)), a_(mod_.reduce(curve.A())), b_(mod_.reduce(curve.B())) {
    if (mod_.value() < 5)
        throw UnsupportedPrime("p = " + std::to_string(mod_.value()) + " is below 5");
    const std::uint64_t d = mod_.add(mod_.mul(4, mod_.mul(a_, mod_.mul(a_, a_))), mod_.mul(27, mod_.mul(b_, b_)));
    if (d == 0)
        throw BadReduction("bad reduction of " + curve_name(curve) + " at p = " + std::to_string(mod_.value()));
}

ReducedCurve reduce_curve(const CurveQ& E, std::uint64_t p) {
    if (!is_prime(p)) throw InvalidModulus(std::to_string(p) + " is not prime");
    if (residue_of(E.discriminant(), p) == 0)
        throw BadReduction("bad reduction of " + curve_name(E) + " at p = " + std::to_string(p));
    if (p < 5) throw UnsupportedPrime("p = " + std::to_string(p) + " is below 5");
    return ReducedCurve(E, PrimeModulus(p));
}

ReducedCurve reduce_curve(const CurveQ& E, const PrimeModulus& p) { return ReducedCurve(E, p); }

namespace detail {

Point add_unchecked(const Point& P, const Point& Q, std::uint64_t a, const PrimeModulus& m) {
    if (P.is_infinity()) return Q;
    if (Q.is_infinity()) return P;
    std::uint64_t lambda;
    if (P.x == Q.x) {
        if (m.add(P.y, Q.y) == 0) return Point::at_infinity();
        // P == Q, y != 0
        const std::uint64_t num = m.add(m.mul(3, m.mul(P.x, P.x)), a);
        lambda = m.mul(num, mod_inv(m.add(P.y, P.y), m));
    } else {
        lambda = m.mul(m.sub(Q.y, P.y), mod_inv(m.sub(Q.x, P.x), m));
    }
    const std::uint64_t x3 = m.sub(m.sub(m.mul(lambda, lambda), P.x), Q.x);
    const std::uint64_t y3 = m.sub(m.mul(lambda, m.sub(P.x, x3)), P.y);
    return Point::affine(x3, y3);
}

Point mul_unchecked(std::uint64_t k, const Point& P, std::uint64_t a, const PrimeModulus& m) {
    return to_affine(jac_mul(k, P, a, m), m);
}

bool mul_is_identity(std::uint64_t k, const Point& P, std::uint64_t a, const PrimeModulus& m) {
    return jac_mul(k, P, a, m).Z == 0;
}

}  // namespace detail

Point point_neg(const Point& P, const ReducedCurve& C) {
    require_on_curve(P, C);
    if (P.is_infinity()) return P;
    return Point::affine(P.x, C.field().neg(P.y));
}

Point point_add(const Point& P, const Point& Q, const ReducedCurve& C) {
    require_on_curve(P, C);
    require_on_curve(Q, C);
    return detail::add_unchecked(P, Q, C.a(), C.field());
}

Point scalar_mul(std::uint64_t k, const Point& P, const ReducedCurve& C) {
    require_on_curve(P, C);
    return detail::mul_unchecked(k, P, C.a(), C.field());
}

std::uint64_t double_x_rational(std::uint64_t x, const ReducedCurve& C) {
    const PrimeModulus& m = C.field();
    x %= C.p();
    const std::uint64_t s = m.mul(4, C.rhs(x));
    if (s == 0)
        throw TwoTorsionX("s(" + std::to_string(x) + ") = 0 mod " + std::to_string(C.p()));
    const std::uint64_t a = C.a(), b = C.b();
    const std::uint64_t x2 = m.mul(x, x);
    std::uint64_t r = m.mul(x2, x2);
    r = m.sub(r, m.mul(2, m.mul(a, x2)));
    r = m.sub(r, m.mul(8, m.mul(b, x)));
    r = m.add(r, m.mul(a, a));
    return m.mul(r, mod_inv(s, m));
}

std::vector<Point> lift_points_at_x(std::uint64_t x, const ReducedCurve& C) {
    x %= C.p();
    const std::uint64_t v = C.rhs(x);
    if (v == 0) return {Point::affine(x, 0)};
    if (legendre_symbol(static_cast<std::int64_t>(v), C.field()) != 1) return {};
    const std::uint64_t y = sqrt_mod(v, C.field());
    return {Point::affine(x, y), Point::affine(x, C.p() - y)};
}

std::vector<Point> preimages_of_doubling(const Point& P, const ReducedCurve& C) {
    require_on_curve(P, C);
    const PrimeModulus& m = C.field();
    std::vector<Point> out;
    if (P.is_infinity()) {
        out.push_back(Point::at_infinity());
        for (std::uint64_t x : roots(C.rhs_poly())) out.push_back(Point::affine(x, 0));
        return out;
    }
    // Halves of (j, y) have x-coordinates among the roots of r(x) - j s(x).
    const std::uint64_t j = P.x, a = C.a(), b = C.b();
    const std::int64_t c4 = 1;
    const std::uint64_t c3 = m.neg(m.mul(4, j));
    const std::uint64_t c2 = m.neg(m.mul(2, a));
    const std::uint64_t c1 = m.neg(m.add(m.mul(8, b), m.mul(4, m.mul(a, j))));
    const std::uint64_t c0 = m.sub(m.mul(a, a), m.mul(4, m.mul(b, j)));
    const FpPoly xi(m, std::vector<std::uint64_t>{c0, c1, c2, c3, static_cast<std::uint64_t>(c4)});
    for (std::uint64_t x1 : roots(xi)) {
        for (const Point& Q : lift_points_at_x(x1, C)) {
            if (detail::mul_unchecked(2, Q, a, m) == P) out.push_back(Q);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

FpPoly division_polynomial(int n, const ReducedCurve& C) {
    const PrimeModulus& m = C.field();
    const std::uint64_t a = C.a(), b = C.b();
    const FpPoly f = C.rhs_poly();
    const FpPoly f2 = f * f;
    const std::uint64_t a2 = m.mul(a, a), a3 = m.mul(a2, a), b2 = m.mul(b, b), ab = m.mul(a, b);
    std::map<int, FpPoly> memo;
    memo.emplace(0, FpPoly(m));
    memo.emplace(1, FpPoly::constant(m, 1));
    memo.emplace(2, FpPoly::constant(m, 2));
    // psi_3 = 3x^4 + 6a x^2 + 12b x - a^2
    memo.emplace(3, FpPoly(m, std::vector<std::uint64_t>{m.neg(a2), m.mul(12, b), m.mul(6, a), 0, 3}));
    // psi_4 / y = 4(x^6 + 5a x^4 + 20b x^3 - 5a^2 x^2 - 4ab x - 8b^2 - a^3)
    memo.emplace(4, FpPoly(m, std::vector<std::uint64_t>{m.mul(4, m.neg(m.add(m.mul(8, b2), a3))),
                                                          m.mul(4, m.neg(m.mul(4, ab))),
                                                          m.mul(4, m.neg(m.mul(5, a2))), m.mul(80, b),
                                                          m.mul(20, a), 0, 4}));
    auto g = [&](auto&& self, int k) -> FpPoly {
        if (auto it = memo.find(k); it != memo.end()) return it->second;
        FpPoly out(m);
        const int h = k / 2;
        if (k & 1) {
            const FpPoly lhs = self(self, h + 2) * self(self, h) * self(self, h) * self(self, h);
            const FpPoly rhs = self(self, h - 1) * self(self, h + 1) * self(self, h + 1) * self(self, h + 1);
            out = (h % 2 == 0) ? f2 * lhs - rhs : lhs - f2 * rhs;
        } else {
            const FpPoly inner = self(self, h + 2) * self(self, h - 1) * self(self, h - 1) -
                                 self(self, h - 2) * self(self, h + 1) * self(self, h + 1);
            out = (self(self, h) * inner).scaled(mod_inv(2, m));
        }
        memo.emplace(k, out);
        return out;
    };
    if (n < 0) throw UsageError("division polynomial index must be non-negative");
    return g(g, n);
}

bool full_torsion_rational(std::uint64_t ell, const ReducedCurve& C) {
    if (ell == 2) return count_roots(C.rhs_poly()) == 3;
    if ((C.p() - 1) % ell != 0) return false;  // E[ell] in E(F_p) forces mu_ell in F_p
    const FpPoly psi = division_polynomial(static_cast<int>(ell), C);
    const auto xs = roots(psi);
    if (xs.size() != (ell * ell - 1) / 2) return false;
    for (std::uint64_t x : xs) {
        if (legendre_symbol(static_cast<std::int64_t>(C.rhs(x)), C.field()) != 1) return false;
    }
    return true;
}

}  // namespace maxorder
