#include "gl3recip/hecke.hpp"

#include <fmt/format.h>

#include <cmath>

namespace gl3recip {

HeckePoly lambda_power(std::int64_t p, int k) {
    if (k < 0) return {};
    std::vector<HeckePoly> v;
    v.reserve(static_cast<std::size_t>(k) + 1);
    const HeckePoly a = HeckePoly::A(p);
    const HeckePoly b = HeckePoly::B(p);
    for (int j = 0; j <= k; ++j) {
        if (j == 0) {
            v.emplace_back(1L);
            continue;
        }
        HeckePoly next = a * v[j - 1];
        if (j >= 2) next -= b * v[j - 2];
        if (j >= 3) next += v[j - 3];
        v.push_back(std::move(next));
    }
    return v.back();
}

namespace {

// Smallest-prime-factor sieve; spf[1] = 1.
std::vector<std::int64_t> spf_sieve(std::int64_t n_max) {
    std::vector<std::int64_t> spf(static_cast<std::size_t>(n_max) + 1, 0);
    if (n_max >= 1) spf[1] = 1;
    for (std::int64_t i = 2; i <= n_max; ++i) {
        if (spf[i] != 0) continue;
        for (std::int64_t j = i; j <= n_max; j += i) {
            if (spf[j] == 0) spf[j] = i;
        }
    }
    return spf;
}

// Fills a multiplicative table from its prime-power values.
template <class R, class PrimePowerFn>
std::vector<R> multiplicative_table(std::int64_t n_max, PrimePowerFn&& at_prime_power) {
    if (n_max < 0) fail(ErrorCode::invalid_argument, "lambda_table: negative size");
    std::vector<R> table(static_cast<std::size_t>(n_max) + 1, RingTraits<R>::zero());
    if (n_max == 0) return table;
    table[1] = RingTraits<R>::one();
    const auto spf = spf_sieve(n_max);
    for (std::int64_t n = 2; n <= n_max; ++n) {
        const std::int64_t p = spf[n];
        std::int64_t m = n;
        int k = 0;
        while (m % p == 0) {
            m /= p;
            ++k;
        }
        if (m == 1) {
            table[n] = at_prime_power(p, k);
        } else {
            table[n] = table[n / m] * table[m];
        }
    }
    return table;
}

}  // namespace

// --- SymbolicProvider ---

HeckePoly SymbolicProvider::lambda_prime_power(std::int64_t p, int k, bool dual) const {
    HeckePoly v = lambda_power(p, k);
    return dual ? v.dual() : v;
}

HeckePoly SymbolicProvider::lambda(std::int64_t n) const {
    if (n < 1) fail(ErrorCode::invalid_argument, "lambda: n must be >= 1");
    HeckePoly out(1L);
    for (const auto& [p, e] : arith::factorize(n)) out = out * lambda_power(p, e);
    return out;
}

HeckePoly SymbolicProvider::lambda_bar(std::int64_t n) const { return lambda(n).dual(); }

std::vector<HeckePoly> SymbolicProvider::lambda_table(std::int64_t n_max, bool dual) const {
    return multiplicative_table<HeckePoly>(n_max, [&](std::int64_t p, int k) { return lambda_prime_power(p, k, dual); });
}

// --- EisensteinProvider ---

EisensteinProvider::EisensteinProvider(const AlphaTriple& alpha) : alpha_(alpha) {
    const Complex sum = alpha[0] + alpha[1] + alpha[2];
    if (std::abs(sum) > 1e-12) {
        fail(ErrorCode::invalid_argument, "Eisenstein parameters must sum to zero, got " + format_complex(sum));
    }
}

EisensteinProvider EisensteinProvider::general(const AlphaTriple& alpha) { return {alpha, Unchecked{}}; }

EisensteinProvider EisensteinProvider::dual() const {
    return {AlphaTriple{-alpha_[0], -alpha_[1], -alpha_[2]}, Unchecked{}};
}

Complex EisensteinProvider::lambda_prime_power(std::int64_t p, int k, bool dual) const {
    if (k < 0) return 0.0;
    const double lp = std::log(static_cast<double>(p));
    const double sgn = dual ? 1.0 : -1.0;  // lambda uses p^(-alpha), lambda-bar p^(+alpha)
    Complex x[3];
    for (int i = 0; i < 3; ++i) x[i] = std::exp(sgn * alpha_[i] * lp);
    const Complex e1 = x[0] + x[1] + x[2];
    const Complex e2 = x[0] * x[1] + x[0] * x[2] + x[1] * x[2];
    const Complex e3 = x[0] * x[1] * x[2];
    Complex v0 = 1.0, v1 = 0.0, v2 = 0.0;  // lambda(p^j), lambda(p^(j-1)), lambda(p^(j-2))
    for (int j = 1; j <= k; ++j) {
        const Complex next = e1 * v0 - e2 * v1 + e3 * v2;
        v2 = v1;
        v1 = v0;
        v0 = next;
    }
    return v0;
}

Complex EisensteinProvider::lambda(std::int64_t n) const {
    if (n < 1) fail(ErrorCode::invalid_argument, "lambda: n must be >= 1");
    Complex out = 1.0;
    for (const auto& [p, e] : arith::factorize(n)) out *= lambda_prime_power(p, e, false);
    return out;
}

Complex EisensteinProvider::lambda_bar(std::int64_t n) const {
    if (n < 1) fail(ErrorCode::invalid_argument, "lambda_bar: n must be >= 1");
    Complex out = 1.0;
    for (const auto& [p, e] : arith::factorize(n)) out *= lambda_prime_power(p, e, true);
    return out;
}

std::vector<Complex> EisensteinProvider::lambda_table(std::int64_t n_max, bool dual) const {
    return multiplicative_table<Complex>(n_max, [&](std::int64_t p, int k) { return lambda_prime_power(p, k, dual); });
}

std::string EisensteinProvider::name() const {
    return fmt::format("eisenstein({},{},{})", format_complex(alpha_[0]), format_complex(alpha_[1]),
                       format_complex(alpha_[2]));
}

// --- free functions ---

std::string render(const RingElement& x) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            return RingTraits<T>::str(v);
        },
        x);
}

Complex tau_alpha(const AlphaTriple& alpha, std::int64_t n) {
    if (n < 1) fail(ErrorCode::invalid_argument, "tau_alpha: n must be >= 1");
    Complex total = 0.0;
    for (std::int64_t d1 : arith::divisors(n)) {
        const Complex t1 = std::exp(-alpha[0] * std::log(static_cast<double>(d1)));
        for (std::int64_t d2 : arith::divisors(n / d1)) {
            const std::int64_t d3 = n / d1 / d2;
            total += t1 * std::exp(-alpha[1] * std::log(static_cast<double>(d2)) -
                                   alpha[2] * std::log(static_cast<double>(d3)));
        }
    }
    return total;
}

RingElement lambda_of(const CoefficientProvider& provider, std::int64_t n) {
    return std::visit([n](const auto& pr) -> RingElement { return pr.lambda(n); }, provider);
}

RingElement fourier_coefficient(const CoefficientProvider& provider, std::int64_t m1, std::int64_t m2) {
    return std::visit([=](const auto& pr) -> RingElement { return fourier_coefficient(pr, m1, m2); }, provider);
}

}  // namespace gl3recip
