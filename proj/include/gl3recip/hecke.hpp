#pragma once

#include "gl3recip/arith.hpp"
#include "gl3recip/expsum.hpp"
#include "gl3recip/hecke_poly.hpp"

#include <array>
#include <complex>
#include <numeric>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace gl3recip {

using Complex = std::complex<double>;
using AlphaTriple = std::array<Complex, 3>;

/// lambda(p^k) as a polynomial in A_p, B_p: the X^k coefficient of (1 - A_p X + B_p X^2 - X^3)^(-1).
HeckePoly lambda_power(std::int64_t p, int k);

/// Cuspidal Phi with unknown eigenvalues; values are HeckePoly.
class SymbolicProvider {
public:
    using value_type = HeckePoly;

    value_type lambda(std::int64_t n) const;
    value_type lambda_bar(std::int64_t n) const;
    value_type lambda_prime_power(std::int64_t p, int k, bool dual) const;
    /// Entries 0..n_max; entry 0 is unused and zero.
    std::vector<value_type> lambda_table(std::int64_t n_max, bool dual) const;
    std::string name() const { return "symbolic"; }
};

/// Minimal-parabolic Eisenstein series with spectral parameters alpha; lambda(n) = tau_alpha(n).
class EisensteinProvider {
public:
    using value_type = Complex;

    /// Requires alpha_1 + alpha_2 + alpha_3 = 0 within 1e-12.
    explicit EisensteinProvider(const AlphaTriple& alpha);
    /// Any triple; the local recurrence then carries e3 = p^(-sum alpha).
    static EisensteinProvider general(const AlphaTriple& alpha);

    const AlphaTriple& alpha() const noexcept { return alpha_; }
    /// The provider of the dual form: alpha -> -alpha.
    EisensteinProvider dual() const;

    value_type lambda(std::int64_t n) const;
    value_type lambda_bar(std::int64_t n) const;
    value_type lambda_prime_power(std::int64_t p, int k, bool dual) const;
    std::vector<value_type> lambda_table(std::int64_t n_max, bool dual) const;
    std::string name() const;

private:
    struct Unchecked {};
    EisensteinProvider(const AlphaTriple& alpha, Unchecked) : alpha_(alpha) {}
    AlphaTriple alpha_;
};

using CoefficientProvider = std::variant<SymbolicProvider, EisensteinProvider>;
using RingElement = std::variant<HeckePoly, Complex>;

std::string render(const RingElement& x);

/// Direct triple-divisor sum  sum_{d1 d2 d3 = n} d1^(-a1) d2^(-a2) d3^(-a3).
Complex tau_alpha(const AlphaTriple& alpha, std::int64_t n);

/// B(m1, m2) = sum_{r | (m1, m2)} mu(r) lambda-bar(m1/r) lambda(m2/r).
template <class Provider>
typename Provider::value_type fourier_coefficient(const Provider& provider, std::int64_t m1, std::int64_t m2) {
    if (m1 < 1 || m2 < 1) fail(ErrorCode::invalid_argument, "fourier_coefficient: indices must be >= 1");
    typename Provider::value_type total = RingTraits<typename Provider::value_type>::zero();
    const std::int64_t g = std::gcd(m1, m2);
    for (std::int64_t r : arith::divisors(g)) {
        const int mu = arith::mobius(r);
        if (mu == 0) continue;
        auto term = provider.lambda_bar(m1 / r) * provider.lambda(m2 / r);
        if (mu > 0) total += term;
        else total -= term;
    }
    return total;
}

RingElement lambda_of(const CoefficientProvider& provider, std::int64_t n);
RingElement fourier_coefficient(const CoefficientProvider& provider, std::int64_t m1, std::int64_t m2);

/// Finite Euler product over p | a in the exponent variable `var`:
///   undualized  prod { lambda-bar(p^o) - lambda-bar(p^(o-1)) p^(-2s) }
///   dualized    prod { lambda(p^o) - lambda(p^(o-1)) p^(-2(1-s)) }
/// The result is exact (no truncation).
template <class Provider>
ExpSum<typename Provider::value_type> cfkrs_local_factor(const Provider& provider, std::int64_t a,
                                                         const ExponentVariable& var, bool dualize) {
    using R = typename Provider::value_type;
    if (a < 1) fail(ErrorCode::invalid_argument, "cfkrs_local_factor: a must be >= 1");
    ExpSum<R> out = ExpSum<R>::constant(RingTraits<R>::one());
    for (const auto& [p, o] : arith::factorize(a)) {
        const bool dual_lambda = !dualize;
        const auto term = dualize ? var.power_of(p, -2, 2) : var.power_of(p, 0, -2);
        ExpSum<R> local;
        local.add_term(PosRational(1), provider.lambda_prime_power(p, o, dual_lambda));
        R second = provider.lambda_prime_power(p, o - 1, dual_lambda);
        if constexpr (RingTraits<R>::exact) {
            second *= -term.coefficient;
        } else {
            second *= -term.coefficient.get_d();
        }
        local.add_term(term.base, second);
        out = mul(out, local);
    }
    return out;
}

}  // namespace gl3recip
