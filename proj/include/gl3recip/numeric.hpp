#pragma once

#include "gl3recip/hecke.hpp"

#include <complex>
#include <cstdint>
#include <vector>

namespace gl3recip {

struct HurwitzOptions {
    int min_terms = 20;         // M >= min_terms
    double imag_factor = 3.0;   // M >= ceil(imag_factor * |Im s|)
    int bernoulli_terms = 12;   // K
};

/// zeta(s, a) = sum_{n>=0} (n + a)^(-s), continued by Euler-Maclaurin. Pole at s = 1.
Complex hurwitz_zeta(Complex s, double a, const HurwitzOptions& opts = {});
Complex riemann_zeta(Complex s);

/// Complex Gamma (Lanczos, g = 7, n = 9). Poles at nonpositive integers.
Complex complex_gamma(Complex s);
/// pi^(-s/2) Gamma(s/2). Poles at 0, -2, -4, ...
Complex gamma_R(Complex s);

/// e(x) = exp(2 pi i x) for x = n / d, reduced exactly mod d first.
Complex additive_character(std::int64_t n, std::int64_t d);

/// Character mod an odd prime p: chi(g^k) = e(jk / (p-1)) for the smallest primitive root g.
class DirichletCharacter {
public:
    DirichletCharacter(std::int64_t p, std::int64_t index);

    std::int64_t modulus() const noexcept { return p_; }
    std::int64_t index() const noexcept { return j_; }
    std::int64_t primitive_root() const noexcept { return g_; }
    bool is_principal() const noexcept { return j_ == 0; }
    /// a_chi: 0 for even, 1 for odd.
    int parity() const noexcept { return static_cast<int>(j_ % 2); }
    DirichletCharacter conj() const;

    Complex operator()(std::int64_t n) const { return values_[static_cast<std::size_t>(arith::mod_floor(n, p_))]; }
    const std::vector<Complex>& values() const noexcept { return values_; }

private:
    std::int64_t p_;
    std::int64_t j_;
    std::int64_t g_;
    std::vector<Complex> values_;
};

/// All p-1 characters in index order; throws ErrorCode::domain for composite or p < 3.
std::vector<DirichletCharacter> characters_mod(std::int64_t p);

/// tau(chi) = sum over units x of chi(x) e(x/p).
Complex gauss_sum(const DirichletCharacter& chi);

/// L(s, chi) via Hurwitz zeta; zeta(s)(1 - p^(-s)) for the principal character.
Complex dirichlet_L(Complex s, const DirichletCharacter& chi);

struct Fraction {
    std::int64_t r;
    std::int64_t d;
};

/// sum_{n <= N} lambda(n) e(n r/d) n^(-s), checked against the partial sum to 2N:
/// throws ErrorCode::convergence when they differ by more than tol/10 and
/// ErrorCode::region when Re s < 1.5. Returns the 2N partial sum.
Complex twisted_L_direct(Complex s, Fraction frac, const EisensteinProvider& provider, std::int64_t cutoff,
                         double tol = 1e-8);

/// L(s, r/d; tau_alpha) in closed form through the Hurwitz expansion
///   sum_{c in [1, d]^3} e(c1 c2 c3 r/d) prod_i d^(-(s + alpha_i)) zeta(s + alpha_i, c_i/d).
/// Valid wherever each Hurwitz factor is; any alpha triple is accepted.
Complex twisted_L_hurwitz(Complex s, Fraction frac, const AlphaTriple& alpha);

/// L(s, Phi x chi) = prod_i L(s + alpha_i, chi) for Eisenstein Phi.
Complex eisenstein_L(Complex s, const AlphaTriple& alpha);
Complex eisenstein_L(Complex s, const AlphaTriple& alpha, const DirichletCharacter& chi);

struct RawSeriesOptions {
    std::int64_t a0_cutoff = 1000000;
    std::int64_t a1_cutoff = 200000;
    double stability_tol = 1e-3;  // relative agreement of the (A0, A1) and (2A0, 2A1) partial sums
};

/// Partial sums of the twisted double series and of its Hecke-relation decomposition at fixed (s, s0),
/// sharing the power tables a0^(-(2s - s0)) and lambda(n) n^(-s0).
class TwistedSeriesWorkspace {
public:
    TwistedSeriesWorkspace(const EisensteinProvider& provider, Complex s, Complex s0, std::int64_t a0_max,
                           std::int64_t a1_max);

    Complex s() const noexcept { return s_; }
    Complex s0() const noexcept { return s0_; }

    /// sum_{d|a} d^(2s+s0-1) sum_{a0 <= A0, (a0,d)=1} sum_{a1 <= A1} B(a/d, a1) a0^(-(2s-s0)) a1^(-s0) e(-+ a1 a0inv/d).
    Complex raw_partial(std::int64_t a, int sign, std::int64_t a0_cutoff, std::int64_t a1_cutoff) const;

    /// sum_{dr|a} d^(2s0-1) mu(r) r^(-s0) lambda-bar(a/dr) sum*_l zeta(2s-s0, l/d) L_{A1/r}(s0, -+ r linv/d),
    /// where L_M is the twisted partial sum to n <= M. Equal to raw_partial with A0 = infinity.
    Complex decomposed_partial(std::int64_t a, int sign, std::int64_t a1_cutoff) const;

    /// sum_{n <= M} lambda(n) n^(-s0) e(n r/d).
    Complex twisted_partial(Fraction frac, std::int64_t cutoff) const;

private:
    EisensteinProvider provider_;
    Complex s_;
    Complex s0_;
    std::vector<Complex> a0_powers_;   // a0^(-(2s-s0))
    std::vector<Complex> weighted_;    // lambda(n) n^(-s0)
};

/// The twisted double series at (s0, s), truncated directly, with a doubling stability check.
/// sign is +1 or -1 for the e(-+ ...) twist. Requires Re(2s - s0) >= 1.5 and Re s0 >= 1.5.
Complex raw_twisted_double_series(std::int64_t a, Complex s0, Complex s, const EisensteinProvider& provider, int sign,
                                  const RawSeriesOptions& opts = {});

/// Throws ErrorCode::region unless Re(value) >= margin.
void require_region(const char* what, Complex value, double margin);

}  // namespace gl3recip
