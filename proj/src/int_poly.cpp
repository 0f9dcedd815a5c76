#include "maxorder/int_poly.hpp"

#include <stdexcept>

#include "json.hpp"
#include "maxorder/errors.hpp"

namespace maxorder {

namespace {

BigInt ipow(BigInt base, unsigned e) {
    BigInt r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

IntPoly divide_by_scalar(const IntPoly& a, const BigInt& s) {
    std::vector<BigInt> c = a.coeffs();
    for (auto& v : c) {
        if (v % s != 0) throw std::domain_error("inexact scalar division");
        v /= s;
    }
    return IntPoly(std::move(c));
}

}  // namespace

IntPoly::IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long long> coeffs) {
    c_.reserve(coeffs.size());
    for (auto v : coeffs) c_.emplace_back(v);
    trim();
}

IntPoly IntPoly::monomial(BigInt c, int degree) {
    std::vector<BigInt> v(static_cast<std::size_t>(degree) + 1, BigInt(0));
    v.back() = std::move(c);
    return IntPoly(std::move(v));
}

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const BigInt& IntPoly::lc() const {
    static const BigInt zero = 0;
    return c_.empty() ? zero : c_.back();
}

BigInt IntPoly::eval(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPoly IntPoly::derivative() const {
    if (c_.size() < 2) return {};
    std::vector<BigInt> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<unsigned long long>(i);
    return IntPoly(std::move(d));
}

BigInt IntPoly::content() const {
    BigInt g = 0;
    for (const auto& v : c_) g = boost::multiprecision::gcd(g, v);
    return abs(g);
}

IntPoly IntPoly::primitive_part() const {
    if (c_.empty()) return {};
    BigInt g = content();
    if (lc() < 0) g = -g;
    return divide_by_scalar(*this, g);
}

FpPoly IntPoly::reduce(const PrimeModulus& m) const {
    std::vector<std::uint64_t> out(c_.size());
    const BigInt p = m.value();
    for (std::size_t i = 0; i < c_.size(); ++i) {
        BigInt r = c_[i] % p;
        if (r < 0) r += p;
        out[i] = static_cast<std::uint64_t>(r);
    }
    return FpPoly(m, std::move(out));
}

IntPoly IntPoly::operator-() const {
    std::vector<BigInt> c = c_;
    for (auto& v : c) v = -v;
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<BigInt> c(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (c_.empty() || o.c_.empty()) return {};
    std::vector<BigInt> c(c_.size() + o.c_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator*(const BigInt& s) const {
    std::vector<BigInt> c = c_;
    for (auto& v : c) v *= s;
    return IntPoly(std::move(c));
}

std::string IntPoly::to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const BigInt& v = c_[i];
        if (v == 0) continue;
        const BigInt mag = abs(v);
        if (out.empty())
            out += v < 0 ? "-" : "";
        else
            out += v < 0 ? " - " : " + ";
        if (i == 0 || mag != 1) {
            out += mag.str();
            if (i > 0) out += "*";
        }
        if (i >= 1) out += "x";
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw DivisionByZero("pseudo-remainder by the zero polynomial");
    if (a.degree() < b.degree()) return a;
    std::vector<BigInt> r = a.coeffs();
    const int db = b.degree();
    const BigInt& l = b.lc();
    // deg a - deg b + 1 rounds, each multiplying by lc(b) once.
    for (int i = a.degree(); i >= db; --i) {
        const BigInt top = r[i];
        for (auto& v : r) v *= l;
        for (int j = 0; j <= db; ++j) r[i - db + j] -= top * b.coeffs()[j];
    }
    r.resize(db);
    return IntPoly(std::move(r));
}

IntPoly exact_quotient(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw DivisionByZero("division by the zero polynomial");
    if (a.is_zero()) return {};
    if (a.degree() < b.degree()) throw std::domain_error("inexact polynomial division");
    std::vector<BigInt> r = a.coeffs();
    std::vector<BigInt> q(a.degree() - b.degree() + 1);
    const int db = b.degree();
    for (int i = a.degree(); i >= db; --i) {
        if (r[i] % b.lc() != 0) throw std::domain_error("inexact polynomial division");
        const BigInt t = r[i] / b.lc();
        q[i - db] = t;
        for (int j = 0; j <= db; ++j) r[i - db + j] -= t * b.coeffs()[j];
    }
    for (int i = 0; i < db; ++i)
        if (r[i] != 0) throw std::domain_error("inexact polynomial division");
    return IntPoly(std::move(q));
}

BigInt resultant(const IntPoly& a_in, const IntPoly& b_in) {
    if (a_in.is_zero() || b_in.is_zero()) throw UndefinedResultant("resultant with the zero polynomial");
    // Subresultant PRS (Collins; Cohen, Algorithm 3.3.7).
    IntPoly A = a_in, B = b_in;
    const BigInt ca = A.content(), cb = B.content();
    A = divide_by_scalar(A, ca);
    B = divide_by_scalar(B, cb);
    const BigInt t = ipow(ca, static_cast<unsigned>(B.degree())) * ipow(cb, static_cast<unsigned>(A.degree()));
    int s = 1;
    if (A.degree() < B.degree()) {
        std::swap(A, B);
        if ((A.degree() & 1) && (B.degree() & 1)) s = -1;
    }
    BigInt g = 1, h = 1;
    while (B.degree() > 0) {
        const int delta = A.degree() - B.degree();
        if ((A.degree() & 1) && (B.degree() & 1)) s = -s;
        IntPoly R = pseudo_remainder(A, B);
        A = B;
        B = divide_by_scalar(R, g * ipow(h, static_cast<unsigned>(delta)));
        g = A.lc();
        // h <- h^(1-delta) g^delta
        if (delta > 0) h = ipow(g, static_cast<unsigned>(delta)) / ipow(h, static_cast<unsigned>(delta - 1));
    }
    if (B.is_zero()) return 0;
    // B is a nonzero constant: h <- h^(1 - deg A) lc(B)^deg A
    const int da = A.degree();
    if (da == 0) return BigInt(s) * t;  // both inputs were constants
    h = ipow(B.lc(), static_cast<unsigned>(da)) / ipow(h, static_cast<unsigned>(da - 1));
    return BigInt(s) * t * h;
}

BigInt poly_discriminant(const IntPoly& a) {
    const int n = a.degree();
    if (n < 1) throw std::domain_error("discriminant needs degree >= 1");
    if (n == 1) return 1;
    BigInt res = resultant(a, a.derivative());
    if (((n * (n - 1)) / 2) & 1) res = -res;
    return res / a.lc();
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero()) return b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    IntPoly A = a.primitive_part(), B = b.primitive_part();
    if (A.degree() < B.degree()) std::swap(A, B);
    while (!B.is_zero()) {
        IntPoly R = pseudo_remainder(A, B);
        A = std::move(B);
        B = R.is_zero() ? R : R.primitive_part();
    }
    return A.primitive_part();
}

IntPoly squarefree_part(const IntPoly& a) {
    if (a.degree() <= 0) return a.is_zero() ? a : IntPoly{1};
    const IntPoly g = gcd(a, a.derivative());
    return exact_quotient(a.primitive_part(), g).primitive_part();
}

std::string to_json(const IntPoly& a) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& v : a.coeffs()) arr.push_back(v.str());
    return arr.dump();
}

IntPoly int_poly_from_json(std::string_view text) {
    const auto doc = nlohmann::json::parse(text);
    if (!doc.is_array()) throw UsageError("polynomial JSON must be an array of decimal strings");
    std::vector<BigInt> c;
    for (const auto& v : doc) {
        if (!v.is_string()) throw UsageError("polynomial coefficients must be decimal strings");
        try {
            c.emplace_back(v.get<std::string>());
        } catch (const std::exception&) {
            throw UsageError("bad coefficient: " + v.get<std::string>());
        }
    }
    return IntPoly(std::move(c));
}

}  // namespace maxorder
