#include "gl3recip/arith.hpp"

#include "gl3recip/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace gl3recip {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 base, u64 exp, u64 m) {
    u64 result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1U) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1U;
    }
    return result;
}

// Deterministic for all 64-bit inputs with these witnesses.
bool miller_rabin(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int r = 0;
    while ((d & 1U) == 0) {
        d >>= 1U;
        ++r;
    }
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < r; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

u64 pollard_rho(u64 n) {
    if (n % 2 == 0) return 2;
    for (u64 c = 1;; ++c) {
        u64 x = 2;
        u64 y = 2;
        u64 d = 1;
        auto f = [&](u64 v) { return (mul_mod(v, v, n) + c) % n; };
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            d = std::gcd(x > y ? x - y : y - x, n);
        }
        if (d != n) return d;
    }
}

void split_large(u64 n, std::vector<u64>& primes) {
    if (n == 1) return;
    if (miller_rabin(n)) {
        primes.push_back(n);
        return;
    }
    const u64 d = pollard_rho(n);
    split_large(d, primes);
    split_large(n / d, primes);
}

void require_positive(std::int64_t n, const char* what) {
    if (n < 1) fail(ErrorCode::invalid_argument, std::string(what) + ": argument must be >= 1");
}

}  // namespace

namespace arith {

bool is_prime(std::int64_t n) { return n >= 2 && miller_rabin(static_cast<u64>(n)); }

Factorization factorize(std::int64_t n) {
    require_positive(n, "factorize");
    Factorization out;
    auto m = static_cast<u64>(n);
    constexpr u64 trial_limit = 1'000'000;
    for (u64 p = 2; p <= trial_limit && p * p <= m; p += (p == 2 ? 1 : 2)) {
        if (m % p != 0) continue;
        int e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        out.push_back({static_cast<std::int64_t>(p), e});
    }
    if (m > 1) {
        std::vector<u64> rest;
        split_large(m, rest);
        std::sort(rest.begin(), rest.end());
        for (u64 p : rest) {
            if (!out.empty() && out.back().prime == static_cast<std::int64_t>(p)) {
                ++out.back().exponent;
            } else {
                out.push_back({static_cast<std::int64_t>(p), 1});
            }
        }
    }
    return out;
}

int mobius(std::int64_t n) {
    const auto f = factorize(n);
    for (const auto& pp : f) {
        if (pp.exponent >= 2) return 0;
    }
    return f.size() % 2 == 0 ? 1 : -1;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
    std::vector<std::int64_t> out{1};
    for (const auto& [p, e] : factorize(n)) {
        const std::size_t base = out.size();
        std::int64_t pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::int64_t euler_phi(std::int64_t n) {
    std::int64_t phi = n;
    for (const auto& pp : factorize(n)) phi = phi / pp.prime * (pp.prime - 1);
    return phi;
}

int valuation(std::int64_t n, std::int64_t p) {
    require_positive(n, "valuation");
    int e = 0;
    while (n % p == 0) {
        n /= p;
        ++e;
    }
    return e;
}

std::int64_t radical(std::int64_t n) {
    std::int64_t r = 1;
    for (const auto& pp : factorize(n)) r *= pp.prime;
    return r;
}

std::complex<double> sigma_complex(std::complex<double> nu, std::int64_t n) {
    std::complex<double> total = 0.0;
    for (std::int64_t d : divisors(n)) {
        total += std::exp(nu * std::log(static_cast<double>(d)));
    }
    return total;
}

std::int64_t ramanujan_sum(std::int64_t n, std::int64_t d) {
    require_positive(d, "ramanujan_sum");
    const std::int64_t g = std::gcd(n < 0 ? -n : n, d);  // gcd(0, d) = d
    std::int64_t total = 0;
    for (std::int64_t e : divisors(g)) total += e * mobius(d / e);
    return total;
}

std::int64_t mod_inverse(std::int64_t x, std::int64_t d) {
    if (d < 2) fail(ErrorCode::invalid_argument, "mod_inverse: modulus must be >= 2");
    std::int64_t a = mod_floor(x, d);
    std::int64_t m = d;
    std::int64_t u = 1;
    std::int64_t v = 0;
    while (m != 0) {
        const std::int64_t q = a / m;
        std::swap(a, m);
        m -= q * a;
        std::swap(u, v);
        v -= q * u;
    }
    if (a != 1) {
        fail(ErrorCode::domain,
             "mod_inverse: " + std::to_string(x) + " is not invertible modulo " + std::to_string(d));
    }
    return mod_floor(u, d);
}

std::int64_t primitive_root(std::int64_t p) {
    if (p == 2) return 1;
    if (!is_prime(p)) fail(ErrorCode::domain, "primitive_root: modulus " + std::to_string(p) + " is not prime");
    const auto f = factorize(p - 1);
    for (std::int64_t g = 2; g < p; ++g) {
        const bool ok = std::all_of(f.begin(), f.end(), [&](const PrimePower& q) {
            return pow_mod(static_cast<u64>(g), static_cast<u64>((p - 1) / q.prime), static_cast<u64>(p)) != 1;
        });
        if (ok) return g;
    }
    fail(ErrorCode::domain, "primitive_root: none found");
}

}  // namespace arith

PosRational::PosRational(std::int64_t num, std::int64_t den) {
    if (num < 1 || den < 1) {
        fail(ErrorCode::invalid_argument, "PosRational: numerator and denominator must be >= 1");
    }
    const std::int64_t g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
}

namespace {

std::int64_t checked_narrow(__int128 v) {
    if (v > static_cast<__int128>(INT64_MAX)) fail(ErrorCode::invalid_argument, "PosRational: overflow");
    return static_cast<std::int64_t>(v);
}

PosRational make_reduced(__int128 num, __int128 den) {
    // Reduce in 128-bit before narrowing so that intermediate products may exceed int64.
    __int128 a = num;
    __int128 b = den;
    while (b != 0) {
        const __int128 t = a % b;
        a = b;
        b = t;
    }
    return PosRational(checked_narrow(num / a), checked_narrow(den / a));
}

}  // namespace

PosRational operator*(const PosRational& x, const PosRational& y) {
    return make_reduced(static_cast<__int128>(x.num_) * y.num_, static_cast<__int128>(x.den_) * y.den_);
}

PosRational operator/(const PosRational& x, const PosRational& y) {
    return make_reduced(static_cast<__int128>(x.num_) * y.den_, static_cast<__int128>(x.den_) * y.num_);
}

std::strong_ordering operator<=>(const PosRational& x, const PosRational& y) {
    const __int128 lhs = static_cast<__int128>(x.num_) * y.den_;
    const __int128 rhs = static_cast<__int128>(y.num_) * x.den_;
    return lhs <=> rhs;
}

std::string PosRational::str() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace gl3recip
