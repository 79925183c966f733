#include "gl3recip/numeric.hpp"

#include <boost/math/special_functions/bernoulli.hpp>
#include <fmt/format.h>

#include <cmath>
#include <map>
#include <numbers>

namespace gl3recip {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

void require_region(const char* what, Complex value, double margin) {
    if (!(value.real() >= margin)) {
        fail(ErrorCode::region, fmt::format("{}: real part {} is below the convergence margin {}", what,
                                            format_real(value.real()), format_real(margin)));
    }
}

Complex hurwitz_zeta(Complex s, double a, const HurwitzOptions& opts) {
    if (!(a > 0.0 && a <= 1.0)) fail(ErrorCode::domain, "hurwitz_zeta: a must lie in (0, 1]");
    if (s == Complex(1.0)) fail(ErrorCode::domain, "hurwitz_zeta: pole at s = 1");
    const int m = std::max(opts.min_terms, static_cast<int>(std::ceil(opts.imag_factor * std::abs(s.imag()))));
    Complex total = 0.0;
    for (int n = 0; n < m; ++n) total += std::exp(-s * std::log(n + a));
    const double x = m + a;
    const double log_x = std::log(x);
    const Complex x_pow = std::exp(-s * log_x);  // x^(-s)
    total += x * x_pow / (s - 1.0) + 0.5 * x_pow;
    // Bernoulli corrections B_2k/(2k)! * s(s+1)...(s+2k-2) * x^(-s-2k+1).
    Complex rising = s;
    Complex x_term = x_pow / x;
    double factorial = 2.0;
    for (int k = 1; k <= opts.bernoulli_terms; ++k) {
        total += boost::math::bernoulli_b2n<double>(k) / factorial * rising * x_term;
        rising *= (s + static_cast<double>(2 * k - 1)) * (s + static_cast<double>(2 * k));
        x_term /= x * x;
        factorial *= static_cast<double>((2 * k + 1) * (2 * k + 2));
    }
    return total;
}

Complex riemann_zeta(Complex s) { return hurwitz_zeta(s, 1.0); }

Complex complex_gamma(Complex s) {
    // Lanczos approximation, g = 7, n = 9 (coefficients as published by Godfrey).
    static constexpr double g = 7.0;
    static constexpr double coeff[9] = {0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
                                        771.32342877765313,   -176.61502916214059,   12.507343278686905,
                                        -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
    if (s.imag() == 0.0 && s.real() <= 0.0 && s.real() == std::round(s.real())) {
        fail(ErrorCode::domain, "complex_gamma: pole at nonpositive integer " + format_real(s.real()));
    }
    Complex shift = 1.0;
    while (s.real() < 0.5) {
        shift *= s;
        s += 1.0;
    }
    const Complex z = s - 1.0;
    Complex x = coeff[0];
    for (int i = 1; i < 9; ++i) x += coeff[i] / (z + static_cast<double>(i));
    const Complex t = z + g + 0.5;
    return std::sqrt(2.0 * kPi) * std::exp((z + 0.5) * std::log(t) - t) * x / shift;
}

Complex gamma_R(Complex s) {
    if (s.imag() == 0.0 && s.real() <= 0.0 && std::fmod(s.real(), 2.0) == 0.0) {
        fail(ErrorCode::domain, "gamma_R: pole at " + format_real(s.real()));
    }
    return std::exp(-s / 2.0 * std::log(kPi)) * complex_gamma(s / 2.0);
}

Complex additive_character(std::int64_t n, std::int64_t d) {
    const std::int64_t m = arith::mod_floor(n, d);
    if (m == 0) return 1.0;
    // Exact values where the phase is a multiple of a quarter turn.
    if (2 * m == d) return -1.0;
    if (4 * m == d) return Complex(0.0, 1.0);
    if (4 * m == 3 * d) return Complex(0.0, -1.0);
    return std::polar(1.0, 2.0 * kPi * static_cast<double>(m) / static_cast<double>(d));
}

// --- characters ---

DirichletCharacter::DirichletCharacter(std::int64_t p, std::int64_t index) : p_(p), j_(index) {
    if (!arith::is_prime(p)) {
        fail(ErrorCode::domain, fmt::format("characters are supported only for prime moduli, got {}", p));
    }
    if (index < 0 || index > p - 2) fail(ErrorCode::invalid_argument, "character index must lie in [0, p-2]");
    g_ = arith::primitive_root(p);
    values_.assign(static_cast<std::size_t>(p), 0.0);
    std::int64_t x = 1;
    for (std::int64_t k = 0; k < p - 1; ++k) {
        values_[static_cast<std::size_t>(x)] = additive_character(j_ * k, p - 1);
        x = x * g_ % p;
    }
}

DirichletCharacter DirichletCharacter::conj() const { return {p_, (p_ - 1 - j_) % (p_ - 1)}; }

std::vector<DirichletCharacter> characters_mod(std::int64_t p) {
    std::vector<DirichletCharacter> out;
    out.reserve(static_cast<std::size_t>(std::max<std::int64_t>(p - 1, 0)));
    out.emplace_back(p, 0);
    for (std::int64_t j = 1; j <= p - 2; ++j) out.emplace_back(p, j);
    return out;
}

Complex gauss_sum(const DirichletCharacter& chi) {
    Complex total = 0.0;
    for (std::int64_t x = 1; x < chi.modulus(); ++x) total += chi(x) * additive_character(x, chi.modulus());
    return total;
}

Complex dirichlet_L(Complex s, const DirichletCharacter& chi) {
    const double p = static_cast<double>(chi.modulus());
    if (chi.is_principal()) {
        if (s == Complex(1.0)) fail(ErrorCode::domain, "dirichlet_L: pole of the principal character at s = 1");
        return riemann_zeta(s) * (1.0 - std::exp(-s * std::log(p)));
    }
    Complex total = 0.0;
    for (std::int64_t l = 1; l < chi.modulus(); ++l) total += chi(l) * hurwitz_zeta(s, static_cast<double>(l) / p);
    return std::exp(-s * std::log(p)) * total;
}

// --- twisted series ---

Complex twisted_L_direct(Complex s, Fraction frac, const EisensteinProvider& provider, std::int64_t cutoff, double tol) {
    require_region("twisted_L_direct", s, 1.5);
    if (frac.d < 1 || cutoff < 1) fail(ErrorCode::invalid_argument, "twisted_L_direct: need d >= 1 and N >= 1");
    const std::int64_t n_max = 2 * cutoff;
    const auto table = provider.lambda_table(n_max, false);
    std::vector<Complex> roots(static_cast<std::size_t>(frac.d));
    for (std::int64_t c = 0; c < frac.d; ++c) roots[c] = additive_character(c * arith::mod_floor(frac.r, frac.d), frac.d);
    Complex partial = 0.0, at_cutoff = 0.0;
    for (std::int64_t n = 1; n <= n_max; ++n) {
        partial += table[n] * roots[n % frac.d] * std::exp(-s * std::log(static_cast<double>(n)));
        if (n == cutoff) at_cutoff = partial;
    }
    const double diff = std::abs(partial - at_cutoff);
    if (diff > tol / 10.0) {
        fail(ErrorCode::convergence, fmt::format("twisted_L_direct: partial sums to N = {} and 2N differ by {} > tol/10",
                                                 cutoff, format_real(diff)));
    }
    return partial;
}

Complex twisted_L_hurwitz(Complex s, Fraction frac, const AlphaTriple& alpha) {
    const std::int64_t d = frac.d;
    if (d < 1) fail(ErrorCode::invalid_argument, "twisted_L_hurwitz: d must be >= 1");
    const std::int64_t r = arith::mod_floor(frac.r, d);
    const double dd = static_cast<double>(d);
    std::vector<Complex> z[3];
    for (int i = 0; i < 3; ++i) {
        const Complex si = s + alpha[i];
        const Complex scale = std::exp(-si * std::log(dd));
        z[i].resize(static_cast<std::size_t>(d) + 1);
        for (std::int64_t c = 1; c <= d; ++c) z[i][c] = scale * hurwitz_zeta(si, static_cast<double>(c) / dd);
    }
    // f[m] = sum_{c3} e(m c3 r/d) z3[c3]
    std::vector<Complex> f(static_cast<std::size_t>(d), 0.0);
    for (std::int64_t m = 0; m < d; ++m)
        for (std::int64_t c3 = 1; c3 <= d; ++c3) f[m] += additive_character(m * c3 % d * r, d) * z[2][c3];
    Complex total = 0.0;
    for (std::int64_t c1 = 1; c1 <= d; ++c1) {
        Complex inner = 0.0;
        for (std::int64_t c2 = 1; c2 <= d; ++c2) inner += z[1][c2] * f[c1 * c2 % d];
        total += z[0][c1] * inner;
    }
    return total;
}

Complex eisenstein_L(Complex s, const AlphaTriple& alpha) {
    return riemann_zeta(s + alpha[0]) * riemann_zeta(s + alpha[1]) * riemann_zeta(s + alpha[2]);
}

Complex eisenstein_L(Complex s, const AlphaTriple& alpha, const DirichletCharacter& chi) {
    return dirichlet_L(s + alpha[0], chi) * dirichlet_L(s + alpha[1], chi) * dirichlet_L(s + alpha[2], chi);
}

TwistedSeriesWorkspace::TwistedSeriesWorkspace(const EisensteinProvider& provider, Complex s, Complex s0,
                                               std::int64_t a0_max, std::int64_t a1_max)
    : provider_(provider), s_(s), s0_(s0) {
    if (a0_max < 1 || a1_max < 1) fail(ErrorCode::invalid_argument, "TwistedSeriesWorkspace: cutoffs must be >= 1");
    const Complex w = 2.0 * s - s0;
    a0_powers_.resize(static_cast<std::size_t>(a0_max) + 1);
    for (std::int64_t n = 1; n <= a0_max; ++n) a0_powers_[n] = std::exp(-w * std::log(static_cast<double>(n)));
    weighted_ = provider.lambda_table(a1_max, false);
    for (std::int64_t n = 1; n <= a1_max; ++n) weighted_[n] *= std::exp(-s0 * std::log(static_cast<double>(n)));
}

Complex TwistedSeriesWorkspace::twisted_partial(Fraction frac, std::int64_t cutoff) const {
    if (cutoff >= static_cast<std::int64_t>(weighted_.size())) {
        fail(ErrorCode::invalid_argument, "twisted_partial: cutoff exceeds the workspace table");
    }
    const std::int64_t d = frac.d;
    std::vector<Complex> by_class(static_cast<std::size_t>(d), 0.0);
    for (std::int64_t n = 1; n <= cutoff; ++n) by_class[n % d] += weighted_[n];
    Complex total = 0.0;
    for (std::int64_t c = 0; c < d; ++c) total += by_class[c] * additive_character(c * arith::mod_floor(frac.r, d), d);
    return total;
}

namespace {

std::int64_t unit_inverse(std::int64_t l, std::int64_t d) { return d == 1 ? 0 : arith::mod_inverse(l, d); }

// Units modulo d as residues in [1, d]; {1} for d = 1.
std::vector<std::int64_t> units_mod(std::int64_t d) {
    std::vector<std::int64_t> out;
    for (std::int64_t l = 1; l <= d; ++l)
        if (std::gcd(l, d) == 1) out.push_back(l);
    return out;
}

}  // namespace

Complex TwistedSeriesWorkspace::raw_partial(std::int64_t a, int sign, std::int64_t a0_cutoff,
                                            std::int64_t a1_cutoff) const {
    if (a0_cutoff >= static_cast<std::int64_t>(a0_powers_.size()) ||
        a1_cutoff >= static_cast<std::int64_t>(weighted_.size())) {
        fail(ErrorCode::invalid_argument, "raw_partial: cutoff exceeds the workspace tables");
    }
    Complex total = 0.0;
    for (std::int64_t d : arith::divisors(a)) {
        const std::int64_t m = a / d;
        std::vector<Complex> z(static_cast<std::size_t>(d), 0.0);
        for (std::int64_t a0 = 1; a0 <= a0_cutoff; ++a0) {
            if (d == 1 || std::gcd(a0, d) == 1) z[a0 % d] += a0_powers_[a0];
        }
        // W[c] = sum_{a1 = c mod d} B(m, a1) a1^(-s0), expanded over r | (m, a1).
        std::vector<Complex> wc(static_cast<std::size_t>(d), 0.0);
        for (std::int64_t r : arith::divisors(m)) {
            const int mu = arith::mobius(r);
            if (mu == 0) continue;
            const Complex kappa = static_cast<double>(mu) * provider_.lambda_bar(m / r) *
                                  std::exp(-s0_ * std::log(static_cast<double>(r)));
            for (std::int64_t k = 1; k <= a1_cutoff / r; ++k) wc[r * k % d] += kappa * weighted_[k];
        }
        Complex inner = 0.0;
        for (std::int64_t l = 0; l < d; ++l) {
            if (z[l] == 0.0) continue;
            const std::int64_t linv = unit_inverse(l, d);
            Complex twisted = 0.0;
            for (std::int64_t c = 0; c < d; ++c) twisted += wc[c] * additive_character(-sign * c * linv, d);
            inner += z[l] * twisted;
        }
        total += std::exp((2.0 * s_ + s0_ - 1.0) * std::log(static_cast<double>(d))) * inner;
    }
    return total;
}

Complex TwistedSeriesWorkspace::decomposed_partial(std::int64_t a, int sign, std::int64_t a1_cutoff) const {
    const Complex w = 2.0 * s_ - s0_;
    Complex total = 0.0;
    for (std::int64_t d : arith::divisors(a)) {
        const double dd = static_cast<double>(d);
        std::map<std::int64_t, Complex> hurwitz;
        for (std::int64_t l : units_mod(d)) hurwitz[l] = hurwitz_zeta(w, static_cast<double>(l) / dd);
        for (std::int64_t r : arith::divisors(a / d)) {
            const int mu = arith::mobius(r);
            if (mu == 0) continue;
            const Complex coeff = std::exp((2.0 * s0_ - 1.0) * std::log(dd)) * static_cast<double>(mu) *
                                  std::exp(-s0_ * std::log(static_cast<double>(r))) * provider_.lambda_bar(a / (d * r));
            Complex inner = 0.0;
            for (const auto& [l, zeta] : hurwitz) {
                inner += zeta * twisted_partial({-sign * r * unit_inverse(l % d, d), d}, a1_cutoff / r);
            }
            total += coeff * inner;
        }
    }
    return total;
}

Complex raw_twisted_double_series(std::int64_t a, Complex s0, Complex s, const EisensteinProvider& provider, int sign,
                                  const RawSeriesOptions& opts) {
    if (a < 1) fail(ErrorCode::invalid_argument, "raw_twisted_double_series: a must be >= 1");
    if (sign != 1 && sign != -1) fail(ErrorCode::invalid_argument, "raw_twisted_double_series: sign must be +1 or -1");
    require_region("raw_twisted_double_series (2s - s0)", 2.0 * s - s0, 1.5);
    require_region("raw_twisted_double_series (s0)", s0, 1.5);
    const TwistedSeriesWorkspace ws(provider, s, s0, 2 * opts.a0_cutoff, 2 * opts.a1_cutoff);
    const Complex v1 = ws.raw_partial(a, sign, opts.a0_cutoff, opts.a1_cutoff);
    const Complex v2 = ws.raw_partial(a, sign, 2 * opts.a0_cutoff, 2 * opts.a1_cutoff);
    if (relative_error(v1, v2) > opts.stability_tol) {
        fail(ErrorCode::convergence, fmt::format("raw_twisted_double_series: doubling changed the value by {} (relative)",
                                                 format_real(relative_error(v1, v2))));
    }
    return v2;
}

}  // namespace gl3recip
