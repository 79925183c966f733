#pragma once

#include "gl3recip/expsum.hpp"
#include "gl3recip/hecke.hpp"
#include "gl3recip/numeric.hpp"
#include "gl3recip/report.hpp"

#include <array>
#include <cstdint>

namespace gl3recip {

/// lambda and lambda-bar tabulated up to n_max for one provider, with B(m1, m2) on top.
template <class Provider>
class CoefficientTable {
public:
    using value_type = typename Provider::value_type;

    CoefficientTable(const Provider& provider, std::int64_t n_max)
        : provider_(provider),
          lambda_(provider.lambda_table(n_max, false)),
          lambda_bar_(provider.lambda_table(n_max, true)) {}

    const Provider& provider() const noexcept { return provider_; }
    std::int64_t size() const noexcept { return static_cast<std::int64_t>(lambda_.size()) - 1; }
    const value_type& lambda(std::int64_t n) const { return lambda_.at(static_cast<std::size_t>(n)); }
    const value_type& lambda_bar(std::int64_t n) const { return lambda_bar_.at(static_cast<std::size_t>(n)); }

    value_type fourier(std::int64_t m1, std::int64_t m2) const {
        value_type total = RingTraits<value_type>::zero();
        for (std::int64_t r : arith::divisors(std::gcd(m1, m2))) {
            const int mu = arith::mobius(r);
            if (mu == 0) continue;
            if (mu > 0) total += lambda_bar(m1 / r) * lambda(m2 / r);
            else total -= lambda_bar(m1 / r) * lambda(m2 / r);
        }
        return total;
    }

    /// Exposes the table through the provider interface used by truncated_L.
    std::vector<value_type> lambda_table(std::int64_t n_max, bool dual) const {
        if (n_max > size()) return provider_.lambda_table(n_max, dual);
        const auto& src = dual ? lambda_bar_ : lambda_;
        return {src.begin(), src.begin() + n_max + 1};
    }

private:
    Provider provider_;
    std::vector<value_type> lambda_;
    std::vector<value_type> lambda_bar_;
};

template <class R>
struct IdentitySides {
    ExpSum<R> lhs;
    ExpSum<R> rhs;
    PosRational height;
    ExponentVariable variable;
};

// --- symbolic identities (templated so the Eisenstein layer can replay them numerically) ---

/// sum_{a1 >= 1} B(a, a1) a1^(-2s)  vs  L(2s) prod_{p|a} {lambda-bar(p^o) - lambda-bar(p^(o-1)) p^(-2s)}, in u = 2s.
template <class Provider>
IdentitySides<typename Provider::value_type> diagonal_sides(const CoefficientTable<Provider>& table, std::int64_t a,
                                                           std::int64_t height) {
    using R = typename Provider::value_type;
    if (a < 1 || height < 1) fail(ErrorCode::invalid_argument, "diagonal: need a >= 1 and H >= 1");
    if (table.size() < std::max(a, height)) fail(ErrorCode::invalid_argument, "diagonal: coefficient table too small");
    const auto var = ExponentVariable::two_s();
    ExpSum<R> lhs(CompletenessBound::upto(PosRational(height)));
    for (std::int64_t a1 = 1; a1 <= height; ++a1) lhs.add_term(PosRational(a1), table.fourier(a, a1));
    const auto l = truncated_L(table, LSeriesKind::standard, height);
    const auto factor = cfkrs_local_factor(table.provider(), a, var, false);
    return {std::move(lhs), mul(l, factor, PosRational(height)), PosRational(height), var};
}

/// sum_{d|a} d^(4s-3) sum_{a1} B(a/d, a1) S(0, a1; d) a1^(-(2s-1))
///   vs  a^(2s-1) L(2s-1) prod_{p|a} {lambda(p^o) - lambda(p^(o-1)) p^(-2(1-s))}, in u = 2s-1.
template <class Provider>
IdentitySides<typename Provider::value_type> offdiag_sides(const CoefficientTable<Provider>& table, std::int64_t a,
                                                          std::int64_t a1_cutoff, std::int64_t height) {
    using R = typename Provider::value_type;
    if (a < 1 || height < 1 || a1_cutoff < 1) fail(ErrorCode::invalid_argument, "offdiag: need a, A1, H >= 1");
    const auto var = ExponentVariable::two_s_minus_one();
    const PosRational h(height);

    ExpSum<R> lhs;
    bool first = true;
    for (std::int64_t d : arith::divisors(a)) {
        // Inner sum over a1 <= A1, kept only where the scaled base a1/d^2 can reach H.
        const std::int64_t inner = std::min(a1_cutoff, height * d * d);
        if (table.size() < inner) fail(ErrorCode::invalid_argument, "offdiag: coefficient table too small");
        ExpSum<R> part(CompletenessBound::upto(PosRational(inner)));
        for (std::int64_t a1 = 1; a1 <= inner; ++a1) {
            const std::int64_t ram = arith::ramanujan_sum(a1, d);
            if (ram == 0) continue;
            R c = table.fourier(a / d, a1);
            if constexpr (RingTraits<R>::exact) {
                c *= make_rational(ram);
            } else {
                c *= static_cast<double>(ram);
            }
            part.add_term(PosRational(a1), c);
        }
        R inv_d;
        if constexpr (RingTraits<R>::exact) {
            inv_d = R(make_rational(1, d));
        } else {
            inv_d = 1.0 / static_cast<double>(d);
        }
        auto scaled = scale_base(part, PosRational(d * d), inv_d);
        lhs = first ? std::move(scaled) : add(lhs, scaled);
        first = false;
    }

    const std::int64_t rad = arith::radical(a);
    const std::int64_t l_cutoff = std::min(a1_cutoff, height * a * rad);
    if (table.size() < l_cutoff) fail(ErrorCode::invalid_argument, "offdiag: coefficient table too small");
    const auto l = truncated_L(table, LSeriesKind::standard, l_cutoff);
    const auto factor = cfkrs_local_factor(table.provider(), a, var, true);
    auto rhs = scale_base(mul(l, factor, h * PosRational(a)), PosRational(a), RingTraits<R>::one());
    return {std::move(lhs), std::move(rhs), h, var};
}

/// sum_{n|a} lambda(a/n) mu(n) n^(-2(1-s)) vs the Euler-product form, as exact sums in u = 2s-1.
template <class Provider>
IdentitySides<typename Provider::value_type> convolution_sides(const Provider& provider, std::int64_t a) {
    using R = typename Provider::value_type;
    const auto var = ExponentVariable::two_s_minus_one();
    ExpSum<R> conv;
    for (std::int64_t n : arith::divisors(a)) {
        const int mu = arith::mobius(n);
        if (mu == 0) continue;
        // n^(-2(1-s)) = n^(-2+2s): base 1/n, coefficient 1/n in u = 2s-1.
        R c = provider.lambda(a / n);
        if constexpr (RingTraits<R>::exact) {
            c *= make_rational(mu, n);
        } else {
            c *= static_cast<double>(mu) / static_cast<double>(n);
        }
        conv.add_term(PosRational(1, n), c);
    }
    return {std::move(conv), cfkrs_local_factor(provider, a, var, true), PosRational(1), var};
}

using SymbolicTable = CoefficientTable<SymbolicProvider>;

struct SymbolicOptions {
    std::size_t max_items = 200;
};

CheckReport check_diagonal(const SymbolicTable& table, std::int64_t a, std::int64_t height,
                           const SymbolicOptions& opts = {});
CheckReport check_offdiag_residue(const SymbolicTable& table, std::int64_t a, std::int64_t a1_cutoff,
                                  std::int64_t height, const SymbolicOptions& opts = {});

// --- numeric identities ---

CheckReport check_ramanujan_generating(std::int64_t a1, Complex z, std::int64_t cutoff, double tol = 1e-6);

struct DecompositionOptions {
    std::int64_t a0_cutoff = 1000000;
    std::int64_t a1_cutoff = 200000;
    double tol = 1e-5;
};

/// Raw double series vs the Hecke-relation decomposition, both truncated at the same a1 cutoff
/// (A1 for the raw series, A1/r for the twisted partial sums), compared at (A0, A1) and (2A0, 2A1).
/// The workspace must cover 2A0 and 2A1.
CheckReport check_twisted_decomposition(const TwistedSeriesWorkspace& ws, const AlphaTriple& alpha, std::int64_t a,
                                        int sign, const DecompositionOptions& opts = {});
CheckReport check_twisted_decomposition(std::int64_t a, Complex s0, Complex s, int sign, const AlphaTriple& alpha,
                                        const DecompositionOptions& opts = {});

/// The decomposed form with every series in closed form (Hurwitz zeta and the Hurwitz expansion of
/// the twisted L-series); valid by continuation away from 2s - s0 = 1.
Complex decomposed_closed_form(std::int64_t a, Complex s0, Complex s, int sign, const AlphaTriple& alpha);

/// a^(2s-1) L(2s-1, Phi) prod_{p|a} {lambda(p^o) - lambda(p^(o-1)) p^(-2(1-s))}.
Complex residue_closed_form(std::int64_t a, Complex s, const AlphaTriple& alpha);
/// sum_{dr|a} d^(4s-3) mu(r) r^(-(2s-1)) lambda-bar(a/dr) sum*_l L(2s-1, -+ r linv/d), summed over the
/// sorted residues so both signs give the same floating-point result.
Complex residue_series(std::int64_t a, Complex s, int sign, const AlphaTriple& alpha);

struct ResidueOptions {
    double eps1 = 1e-2;
    double eps2 = 1e-3;
    double tol = 1e-3;         // extrapolated residue
    double series_tol = 1e-9;  // residue series vs closed form
    double sign_tol = 0.0;     // the residue series must not depend on the sign at all
};

CheckReport check_residue_numeric(std::int64_t a, Complex s, int sign, const AlphaTriple& alpha,
                                  const ResidueOptions& opts = {});

CheckReport check_prime_dual(std::int64_t p, Complex s0, Complex s, int sign, const AlphaTriple& alpha,
                             double tol = 1e-5);

CheckReport check_gauss_modulus(std::int64_t p, double tol = 1e-11, double principal_tol = 1e-13);
CheckReport check_gauss_twist(std::int64_t p, std::int64_t n_max, int sign, double tol = 1e-10);

CheckReport check_dirichlet_functional_eq(std::int64_t p, Complex s0, double tol = 1e-7);

/// epsilon is a triple of +1/-1; the factor is evaluated for the Eisenstein data -epsilon * alpha.
CheckReport check_conjecture_factor(std::int64_t a, const AlphaTriple& alpha, double tol = 1e-10);
Complex conjecture_factor_tau(std::int64_t a, const AlphaTriple& beta);
Complex conjecture_factor_specialized(std::int64_t a, const AlphaTriple& beta);

// --- property suites ---

CheckReport check_orthogonality(std::int64_t p, double tol = 1e-10);
CheckReport check_hurwitz_decomposition(std::int64_t p, double tol = 1e-9);
CheckReport check_hecke_recurrence(const AlphaTriple& alpha, double tol = 1e-12);
CheckReport check_mobius_sum(std::int64_t n_max);
CheckReport check_ramanujan_bruteforce(std::int64_t d_max, double tol = 1e-9);
CheckReport check_symbolic_specialization(std::int64_t m_max, double tol = 1e-9);
/// Replays the diagonal and off-diagonal identities with Eisenstein coefficients and compares each
/// coefficient with the symbolic one under A_p -> tau_alpha(p), B_p -> tau_{-alpha}(p).
CheckReport check_layer_consistency(std::int64_t a, const AlphaTriple& alpha, std::int64_t height, double tol = 1e-10);
CheckReport check_eisenstein_character_L(std::int64_t p, Complex s, std::int64_t cutoff, double tol = 1e-6);

std::string alpha_str(const AlphaTriple& alpha);
std::string sign_str(int sign);

}  // namespace gl3recip
