#include "maxorder/fp_poly.hpp"

#include <algorithm>

#include "maxorder/errors.hpp"

namespace maxorder {

FpPoly::FpPoly(PrimeModulus m, std::vector<std::uint64_t> coeffs) : mod_(std::move(m)), c_(std::move(coeffs)) {
    for (auto& v : c_) v %= mod_.value();
    trim();
}

FpPoly::FpPoly(PrimeModulus m, std::initializer_list<std::int64_t> coeffs) : mod_(std::move(m)) {
    c_.reserve(coeffs.size());
    for (auto v : coeffs) c_.push_back(mod_.reduce(v));
    trim();
}

std::uint64_t FpPoly::eval(std::uint64_t x) const noexcept {
    std::uint64_t acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = mod_.add(mod_.mul(acc, x), *it);
    return acc;
}

FpPoly FpPoly::derivative() const {
    FpPoly d(mod_);
    if (c_.size() < 2) return d;
    d.c_.resize(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d.c_[i - 1] = mod_.mul(c_[i], i % mod_.value());
    d.trim();
    return d;
}

FpPoly FpPoly::monic() const {
    if (c_.empty()) return *this;
    return scaled(mod_inv(lc(), mod_));
}

FpPoly FpPoly::operator+(const FpPoly& o) const {
    FpPoly r(mod_);
    r.c_.resize(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = mod_.add((*this)[i], o[i]);
    r.trim();
    return r;
}

FpPoly FpPoly::operator-(const FpPoly& o) const {
    FpPoly r(mod_);
    r.c_.resize(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = mod_.sub((*this)[i], o[i]);
    r.trim();
    return r;
}

FpPoly FpPoly::operator*(const FpPoly& o) const {
    FpPoly r(mod_);
    if (c_.empty() || o.c_.empty()) return r;
    r.c_.assign(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            r.c_[i + j] = mod_.add(r.c_[i + j], mod_.mul(c_[i], o.c_[j]));
    }
    r.trim();
    return r;
}

FpPoly FpPoly::scaled(std::uint64_t s) const {
    FpPoly r(mod_);
    r.c_ = c_;
    for (auto& v : r.c_) v = mod_.mul(v, s % mod_.value());
    r.trim();
    return r;
}

FpDivMod divmod(const FpPoly& a, const FpPoly& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    const PrimeModulus& m = a.modulus();
    std::vector<std::uint64_t> rem = a.coeffs();
    const int db = b.degree();
    if (a.degree() < db) return {FpPoly(m), a};
    std::vector<std::uint64_t> quot(a.degree() - db + 1, 0);
    const std::uint64_t inv = mod_inv(b.lc(), m);
    for (int i = a.degree(); i >= db; --i) {
        const std::uint64_t q = m.mul(rem[i], inv);
        quot[i - db] = q;
        if (q == 0) continue;
        for (int j = 0; j <= db; ++j) rem[i - db + j] = m.sub(rem[i - db + j], m.mul(q, b[j]));
    }
    rem.resize(db);
    return {FpPoly(m, std::move(quot)), FpPoly(m, std::move(rem))};
}

FpPoly operator%(const FpPoly& a, const FpPoly& b) { return divmod(a, b).remainder; }

FpPoly gcd(FpPoly a, FpPoly b) {
    while (!b.is_zero()) {
        FpPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

FpPoly powmod(FpPoly base, std::uint64_t e, const FpPoly& modulus) {
    FpPoly result = FpPoly::constant(base.modulus(), 1) % modulus;
    base = base % modulus;
    while (e) {
        if (e & 1) result = (result * base) % modulus;
        e >>= 1;
        if (e) base = (base * base) % modulus;
    }
    return result;
}

std::vector<int> distinct_factor_degrees(const FpPoly& a) {
    if (a.is_zero()) throw DivisionByZero("factor degrees of the zero polynomial");
    const PrimeModulus& m = a.modulus();
    const FpPoly x = FpPoly::x(m);
    std::vector<int> degrees;
    FpPoly rest = a.monic();
    FpPoly frob = x % rest;  // x^(p^k) mod rest
    for (int k = 1; rest.degree() > 0; ++k) {
        frob = powmod(frob, m.value(), rest);
        // gcd with x^(p^k) - x is squarefree: the product of the distinct irreducible
        // factors of rest whose degree divides k. Smaller degrees are already gone.
        FpPoly g = gcd(rest, frob - x);
        if (g.degree() <= 0) continue;
        for (int i = 0; i < g.degree() / k; ++i) degrees.push_back(k);
        // Strip every power of those factors.
        while (g.degree() > 0) {
            rest = divmod(rest, g).quotient;
            g = gcd(rest, g);
        }
        if (rest.degree() > 0) frob = frob % rest;
    }
    return degrees;
}

namespace {

void split_linear(const FpPoly& a, std::mt19937_64& rng, std::vector<std::uint64_t>& out) {
    const PrimeModulus& m = a.modulus();
    if (a.degree() <= 0) return;
    if (a.degree() == 1) {
        const FpPoly mon = a.monic();
        out.push_back(m.neg(mon[0]));
        return;
    }
    const std::uint64_t p = m.value();
    std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
    for (;;) {
        const FpPoly shift(m, std::vector<std::uint64_t>{dist(rng), 1});
        FpPoly h = powmod(shift, (p - 1) / 2, a) - FpPoly::constant(m, 1);
        FpPoly g = gcd(a, h);
        if (g.degree() > 0 && g.degree() < a.degree()) {
            split_linear(g, rng, out);
            split_linear(divmod(a, g).quotient, rng, out);
            return;
        }
    }
}

FpPoly linear_part(const FpPoly& a) {
    const FpPoly x = FpPoly::x(a.modulus());
    return gcd(a, powmod(x, a.modulus().value(), a) - x);
}

}  // namespace

std::vector<std::uint64_t> roots(const FpPoly& a, std::mt19937_64& rng) {
    if (a.is_zero()) throw DivisionByZero("roots of the zero polynomial");
    std::vector<std::uint64_t> out;
    if (a.degree() <= 0) return out;
    split_linear(linear_part(a), rng, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::uint64_t> roots(const FpPoly& a) {
    std::mt19937_64 rng(a.modulus().value());
    return roots(a, rng);
}

int count_roots(const FpPoly& a) {
    if (a.is_zero()) throw DivisionByZero("roots of the zero polynomial");
    if (a.degree() <= 0) return 0;
    return linear_part(a).degree();
}

}  // namespace maxorder
