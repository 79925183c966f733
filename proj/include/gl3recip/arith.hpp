#pragma once

#include <complex>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace gl3recip {

struct PrimePower {
    std::int64_t prime;
    int exponent;
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization sorted by ascending prime; empty for n = 1.
using Factorization = std::vector<PrimePower>;

namespace arith {

bool is_prime(std::int64_t n);
Factorization factorize(std::int64_t n);
int mobius(std::int64_t n);
std::vector<std::int64_t> divisors(std::int64_t n);
std::int64_t euler_phi(std::int64_t n);

/// Exponent of p in n (o_p(n)).
int valuation(std::int64_t n, std::int64_t p);

/// Product of the distinct primes dividing n.
std::int64_t radical(std::int64_t n);

/// Sum over d | n of d^nu.
std::complex<double> sigma_complex(std::complex<double> nu, std::int64_t n);

/// S(0, n; d) = sum of e(l n / d) over units l mod d, via sum_{e | (n,d)} e mu(d/e).
std::int64_t ramanujan_sum(std::int64_t n, std::int64_t d);

/// Inverse of x modulo d in [1, d-1]; throws ErrorCode::domain when gcd(x, d) != 1.
std::int64_t mod_inverse(std::int64_t x, std::int64_t d);

/// Smallest primitive root modulo an odd prime p.
std::int64_t primitive_root(std::int64_t p);

/// Reduces x into [0, d).
inline std::int64_t mod_floor(std::int64_t x, std::int64_t d) {
    const std::int64_t r = x % d;
    return r < 0 ? r + d : r;
}

}  // namespace arith

/// Positive rational number kept in lowest terms; the exponent bases of ExpSum.
class PosRational {
public:
    PosRational() = default;
    PosRational(std::int64_t num, std::int64_t den = 1);

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }

    PosRational inverse() const { return PosRational(den_, num_); }
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
    std::string str() const;

    friend PosRational operator*(const PosRational& x, const PosRational& y);
    friend PosRational operator/(const PosRational& x, const PosRational& y);
    friend bool operator==(const PosRational&, const PosRational&) = default;
    friend std::strong_ordering operator<=>(const PosRational& x, const PosRational& y);

private:
    std::int64_t num_ = 1;
    std::int64_t den_ = 1;
};

}  // namespace gl3recip
