#include "maxorder/modmath.hpp"

#include <bit>
#include <string>

#include "maxorder/errors.hpp"

namespace maxorder {

namespace {

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
}

std::uint64_t powmod64(std::uint64_t b, std::uint64_t e, std::uint64_t n) {
    std::uint64_t r = 1 % n;
    b %= n;
    while (e) {
        if (e & 1) r = mulmod64(r, b, n);
        b = mulmod64(b, b, n);
        e >>= 1;
    }
    return r;
}

// Primes below 2^17 cover trial division of anything below 2^34.
const std::vector<std::uint64_t>& small_primes() {
    static const std::vector<std::uint64_t> table = primes_up_to(1u << 17);
    return table;
}

int jacobi(std::uint64_t a, std::uint64_t n) {
    int t = 1;
    a %= n;
    while (a != 0) {
        while ((a & 1) == 0) {
            a >>= 1;
            const std::uint64_t r = n & 7;
            if (r == 3 || r == 5) t = -t;
        }
        std::swap(a, n);
        if ((a & 3) == 3 && (n & 3) == 3) t = -t;
        a %= n;
    }
    return n == 1 ? t : 0;
}

}  // namespace

PrimeModulus::PrimeModulus(std::uint64_t p) : p_(p) {
    if (p < 3 || (p & 1) == 0 || p >= (std::uint64_t{1} << 32) || !is_prime(p))
        throw InvalidModulus("modulus " + std::to_string(p) + " is not an odd prime below 2^32");
}

PrimeModulus PrimeModulus::with_residue_table(std::uint64_t p) {
    PrimeModulus m(p);
    auto table = std::make_shared<std::vector<std::uint8_t>>(p, 0);
    // (p-y)^2 = y^2, so half the range suffices.
    std::uint64_t sq = 0;
    for (std::uint64_t y = 0; y <= p / 2; ++y) {
        (*table)[sq] = 1;
        sq += 2 * y + 1;
        while (sq >= p) sq -= p;
    }
    m.squares_ = std::move(table);
    return m;
}

std::uint64_t PrimeModulus::pow(std::uint64_t base, std::uint64_t e) const noexcept {
    std::uint64_t r = 1;
    base %= p_;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

std::uint64_t mod_inv(std::uint64_t a, const PrimeModulus& m) {
    const auto p = static_cast<std::int64_t>(m.value());
    std::int64_t r0 = p, r1 = static_cast<std::int64_t>(a % m.value());
    if (r1 == 0) throw DivisionByZero("inverse of 0 mod " + std::to_string(p));
    std::int64_t t0 = 0, t1 = 1;
    while (r1 != 0) {
        const std::int64_t q = r0 / r1;
        std::int64_t tmp = r0 - q * r1;
        r0 = r1;
        r1 = tmp;
        tmp = t0 - q * t1;
        t0 = t1;
        t1 = tmp;
    }
    return static_cast<std::uint64_t>(t0 < 0 ? t0 + p : t0);
}

int legendre_symbol(std::int64_t a, const PrimeModulus& m) {
    const std::uint64_t r = m.reduce(a);
    if (r == 0) return 0;
    if (m.has_residue_table()) return m.table_says_square(r) ? 1 : -1;
    return jacobi(r, m.value());
}

std::uint64_t sqrt_mod(std::uint64_t a, const PrimeModulus& m) {
    const std::uint64_t p = m.value();
    a %= p;
    if (a == 0) return 0;
    if (legendre_symbol(static_cast<std::int64_t>(a), m) != 1)
        throw NotASquare(std::to_string(a) + " is not a square mod " + std::to_string(p));

    std::uint64_t root;
    if ((p & 3) == 3) {
        root = m.pow(a, (p + 1) / 4);
    } else {
        // Tonelli-Shanks with p - 1 = q * 2^s.
        std::uint64_t q = p - 1;
        int s = 0;
        while ((q & 1) == 0) {
            q >>= 1;
            ++s;
        }
        std::uint64_t z = 2;
        while (jacobi(z, p) != -1) ++z;
        std::uint64_t c = m.pow(z, q);
        std::uint64_t t = m.pow(a, q);
        root = m.pow(a, (q + 1) / 2);
        int bits = s;
        while (t != 1) {
            int i = 0;
            std::uint64_t t2 = t;
            while (t2 != 1) {
                t2 = m.mul(t2, t2);
                ++i;
            }
            std::uint64_t b = c;
            for (int k = 0; k < bits - i - 1; ++k) b = m.mul(b, b);
            root = m.mul(root, b);
            c = m.mul(b, b);
            t = m.mul(t, c);
            bits = i;
        }
    }
    return root <= p - root ? root : p - root;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t x) {
    std::vector<std::uint64_t> out;
    if (x < 2) return out;
    std::vector<bool> composite(x + 1, false);
    for (std::uint64_t i = 2; i <= x; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        if (i <= x / i)
            for (std::uint64_t j = i * i; j <= x; j += i) composite[j] = true;
    }
    return out;
}

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // These twelve bases are a proven witness set for all n < 3.3e24.
    for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        std::uint64_t x = powmod64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

Factorization factor(std::uint64_t n) {
    Factorization out;
    if (n < 2) return out;
    auto take = [&](std::uint64_t q) {
        int e = 0;
        while (n % q == 0) {
            n /= q;
            ++e;
        }
        if (e) out.emplace_back(q, e);
    };
    for (std::uint64_t q : small_primes()) {
        if (q * q > n) break;
        take(q);
    }
    const std::uint64_t last = small_primes().back();
    for (std::uint64_t q = last + 2; q <= n / q; q += 2) take(q);
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::uint64_t isqrt(std::uint64_t n) noexcept {
    if (n < 2) return n;
    auto r = static_cast<std::uint64_t>(__builtin_sqrtl(static_cast<long double>(n)));
    while (r > 0 && r > n / r) --r;
    while ((r + 1) <= n / (r + 1)) ++r;
    return r;
}

}  // namespace maxorder
