#include "gl3recip/identities.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

namespace gl3recip {

namespace {

constexpr double kPi = std::numbers::pi;

Complex cpow(double base, Complex exponent) { return std::exp(exponent * std::log(base)); }

// Linear sieve for mu(n), n <= n_max; cached per thread because the suites reuse one size.
const std::vector<int>& mobius_table(std::int64_t n_max) {
    thread_local std::vector<int> mu;
    if (static_cast<std::int64_t>(mu.size()) > n_max) return mu;
    mu.assign(static_cast<std::size_t>(n_max) + 1, 0);
    std::vector<std::int64_t> primes;
    std::vector<bool> composite(static_cast<std::size_t>(n_max) + 1, false);
    if (n_max >= 1) mu[1] = 1;
    for (std::int64_t i = 2; i <= n_max; ++i) {
        if (!composite[i]) {
            primes.push_back(i);
            mu[i] = -1;
        }
        for (std::int64_t p : primes) {
            if (i * p > n_max) break;
            composite[i * p] = true;
            if (i % p == 0) {
                mu[i * p] = 0;
                break;
            }
            mu[i * p] = -mu[i];
        }
    }
    return mu;
}

// d^(-z) for d <= n_max, cached for the last z.
const std::vector<Complex>& power_table(Complex z, std::int64_t n_max) {
    thread_local std::vector<Complex> table;
    thread_local Complex cached_z = std::numeric_limits<double>::quiet_NaN();
    if (cached_z == z && static_cast<std::int64_t>(table.size()) > n_max) return table;
    table.assign(static_cast<std::size_t>(n_max) + 1, 0.0);
    for (std::int64_t d = 1; d <= n_max; ++d) table[d] = std::exp(-z * std::log(static_cast<double>(d)));
    cached_z = z;
    return table;
}

void append_items(CheckReport& into, const CheckReport& from, const std::string& prefix) {
    for (auto item : from.items) {
        item.key = prefix + item.key;
        into.items.push_back(std::move(item));
    }
}

nlohmann::ordered_json alpha_json(const AlphaTriple& alpha) {
    auto out = nlohmann::ordered_json::array();
    for (const auto& x : alpha) out.push_back(format_complex(x));
    return out;
}

std::int64_t unit_inverse(std::int64_t l, std::int64_t d) { return d == 1 ? 0 : arith::mod_inverse(l, d); }

std::vector<std::int64_t> units_mod(std::int64_t d) {
    std::vector<std::int64_t> out;
    for (std::int64_t l = 1; l <= d; ++l)
        if (std::gcd(l, d) == 1) out.push_back(l);
    return out;
}

void require_sign(int sign) {
    if (sign != 1 && sign != -1) fail(ErrorCode::invalid_argument, "sign must be +1 or -1");
}

std::string eps_str(const std::array<int, 3>& eps) {
    std::string out;
    for (int e : eps) out += e > 0 ? '+' : '-';
    return out;
}

}  // namespace

std::string alpha_str(const AlphaTriple& alpha) {
    return format_complex(alpha[0]) + "," + format_complex(alpha[1]) + "," + format_complex(alpha[2]);
}

std::string sign_str(int sign) { return sign > 0 ? "+" : "-"; }

// --- symbolic identities ---

CheckReport check_diagonal(const SymbolicTable& table, std::int64_t a, std::int64_t height,
                           const SymbolicOptions& opts) {
    const auto sides = diagonal_sides(table, a, height);
    CheckReport report = assert_equal_up_to(sides.lhs, sides.rhs, sides.height, {0.0, opts.max_items});
    report.identity = "diagonal";
    report.params = {{"a", a}, {"height", height}};
    report.substitution = sides.variable.str();
    report.finalize();
    return report;
}

CheckReport check_offdiag_residue(const SymbolicTable& table, std::int64_t a, std::int64_t a1_cutoff,
                                  std::int64_t height, const SymbolicOptions& opts) {
    const auto sides = offdiag_sides(table, a, a1_cutoff, height);
    CheckReport report = assert_equal_up_to(sides.lhs, sides.rhs, sides.height, {0.0, opts.max_items});
    const auto conv = convolution_sides(table.provider(), a);
    append_items(report, assert_equal_up_to(conv.lhs, conv.rhs, conv.height), "local factor convolution ");
    report.identity = "offdiag-residue";
    report.params = {{"a", a}, {"a1_cutoff", a1_cutoff}, {"height", height}};
    report.substitution = sides.variable.str();
    report.finalize();
    return report;
}

// --- Ramanujan generating function ---

CheckReport check_ramanujan_generating(std::int64_t a1, Complex z, std::int64_t cutoff, double tol) {
    if (a1 < 1 || cutoff < 1) fail(ErrorCode::invalid_argument, "ramanujan generating: need a1 >= 1 and D >= 1");
    require_region("ramanujan generating", z, 1.8);
    const std::int64_t n_max = 2 * cutoff;
    const auto& mu = mobius_table(n_max);
    const auto& pw = power_table(z, n_max);
    const auto divs = arith::divisors(a1);
    Complex partial = 0.0, at_cutoff = 0.0;
    for (std::int64_t d = 1; d <= n_max; ++d) {
        // S(0, a1; d) = sum_{e | (a1, d)} e mu(d/e)
        std::int64_t ram = 0;
        for (std::int64_t e : divs) {
            if (e > d) break;
            if (d % e == 0) ram += e * mu[d / e];
        }
        if (ram != 0) partial += static_cast<double>(ram) * pw[d];
        if (d == cutoff) at_cutoff = partial;
    }
    const Complex rhs = arith::sigma_complex(1.0 - z, a1) / riemann_zeta(z);
    CheckReport report;
    report.identity = "ramanujan-generating";
    report.mode = CheckMode::numeric;
    report.params = {{"a1", a1}, {"z", format_complex(z)}, {"cutoff", cutoff}, {"tolerance", tol}};
    report.substitution = "sum_d S(0,a1;d) d^-z = sigma_{1-z}(a1)/zeta(z)";
    report.add_numeric(fmt::format("D={}", cutoff), relative_error(at_cutoff, rhs), tol);
    report.add_numeric(fmt::format("D={}", n_max), relative_error(partial, rhs), tol);
    report.add_numeric("doubling drift", std::abs(partial - at_cutoff) / std::abs(rhs), tol);
    report.finalize();
    return report;
}

// --- twisted double series ---

CheckReport check_twisted_decomposition(const TwistedSeriesWorkspace& ws, const AlphaTriple& alpha, std::int64_t a,
                                        int sign, const DecompositionOptions& opts) {
    require_sign(sign);
    require_region("twisted decomposition (2s - s0)", 2.0 * ws.s() - ws.s0(), 1.5);
    require_region("twisted decomposition (s0)", ws.s0(), 1.5);
    CheckReport report;
    report.identity = "twisted-decomposition";
    report.mode = CheckMode::numeric;
    report.params = {{"a", a},
                     {"s", format_complex(ws.s())},
                     {"s0", format_complex(ws.s0())},
                     {"sign", sign_str(sign)},
                     {"alpha", alpha_json(alpha)},
                     {"a0_cutoff", opts.a0_cutoff},
                     {"a1_cutoff", opts.a1_cutoff},
                     {"tolerance", opts.tol}};
    report.substitution = "raw series truncated at (A0, A1); decomposition with Hurwitz zeta and twisted sums to A1/r";
    for (std::int64_t k : {1, 2}) {
        const Complex raw = ws.raw_partial(a, sign, k * opts.a0_cutoff, k * opts.a1_cutoff);
        const Complex dec = ws.decomposed_partial(a, sign, k * opts.a1_cutoff);
        report.add_numeric(fmt::format("A0={},A1={}", k * opts.a0_cutoff, k * opts.a1_cutoff), relative_error(raw, dec),
                           opts.tol);
    }
    report.finalize();
    return report;
}

CheckReport check_twisted_decomposition(std::int64_t a, Complex s0, Complex s, int sign, const AlphaTriple& alpha,
                                        const DecompositionOptions& opts) {
    require_region("twisted decomposition (2s - s0)", 2.0 * s - s0, 1.5);
    require_region("twisted decomposition (s0)", s0, 1.5);
    const TwistedSeriesWorkspace ws(EisensteinProvider(alpha), s, s0, 2 * opts.a0_cutoff, 2 * opts.a1_cutoff);
    return check_twisted_decomposition(ws, alpha, a, sign, opts);
}

Complex decomposed_closed_form(std::int64_t a, Complex s0, Complex s, int sign, const AlphaTriple& alpha) {
    require_sign(sign);
    const auto prov = EisensteinProvider::general(alpha);
    const Complex w = 2.0 * s - s0;
    Complex total = 0.0;
    for (std::int64_t d : arith::divisors(a)) {
        const double dd = static_cast<double>(d);
        std::vector<std::pair<std::int64_t, Complex>> hurwitz;
        for (std::int64_t l : units_mod(d)) hurwitz.emplace_back(l, hurwitz_zeta(w, static_cast<double>(l) / dd));
        for (std::int64_t r : arith::divisors(a / d)) {
            const int mu = arith::mobius(r);
            if (mu == 0) continue;
            const Complex coeff = cpow(dd, 2.0 * s0 - 1.0) * static_cast<double>(mu) *
                                  cpow(static_cast<double>(r), -s0) * prov.lambda_bar(a / (d * r));
            Complex inner = 0.0;
            for (const auto& [l, zeta] : hurwitz) {
                inner += zeta * twisted_L_hurwitz(s0, {-sign * r * unit_inverse(l % d, d), d}, alpha);
            }
            total += coeff * inner;
        }
    }
    return total;
}

Complex residue_closed_form(std::int64_t a, Complex s, const AlphaTriple& alpha) {
    const auto prov = EisensteinProvider::general(alpha);
    const auto factor = cfkrs_local_factor(prov, a, ExponentVariable::s(), true);
    return cpow(static_cast<double>(a), 2.0 * s - 1.0) * eisenstein_L(2.0 * s - 1.0, alpha) * evaluate(factor, s);
}

Complex residue_series(std::int64_t a, Complex s, int sign, const AlphaTriple& alpha) {
    require_sign(sign);
    const auto prov = EisensteinProvider::general(alpha);
    const Complex s0 = 2.0 * s - 1.0;
    Complex total = 0.0;
    for (std::int64_t d : arith::divisors(a)) {
        for (std::int64_t r : arith::divisors(a / d)) {
            const int mu = arith::mobius(r);
            if (mu == 0) continue;
            // The residues -+ r linv run over the same multiset for either sign; summing them in
            // sorted order makes the floating-point result sign independent as well.
            std::vector<std::int64_t> residues;
            for (std::int64_t l : units_mod(d)) residues.push_back(arith::mod_floor(-sign * r * unit_inverse(l % d, d), d));
            std::sort(residues.begin(), residues.end());
            Complex inner = 0.0;
            for (std::int64_t b : residues) inner += twisted_L_hurwitz(s0, {b, d}, alpha);
            total += cpow(static_cast<double>(d), 2.0 * s0 - 1.0) * static_cast<double>(mu) *
                     cpow(static_cast<double>(r), -s0) * prov.lambda_bar(a / (d * r)) * inner;
        }
    }
    return total;
}

CheckReport check_residue_numeric(std::int64_t a, Complex s, int sign, const AlphaTriple& alpha,
                                  const ResidueOptions& opts) {
    require_sign(sign);
    if (a < 1) fail(ErrorCode::invalid_argument, "residue: a must be >= 1");
    require_region("residue check (s)", s, 1.5);
    const Complex pole = 2.0 * s - 1.0;
    auto f = [&](double eps) { return eps * decomposed_closed_form(a, pole + eps, s, sign, alpha); };
    const double e1 = opts.eps1, e2 = opts.eps2;
    const Complex extrapolated = (e1 * f(e2) - e2 * f(e1)) / (e1 - e2);
    const Complex closed = residue_closed_form(a, s, alpha);
    const Complex series = residue_series(a, s, sign, alpha);
    const Complex series_other = residue_series(a, s, -sign, alpha);

    CheckReport report;
    report.identity = "residue";
    report.mode = CheckMode::numeric;
    report.params = {{"a", a},
                     {"s", format_complex(s)},
                     {"sign", sign_str(sign)},
                     {"alpha", alpha_json(alpha)},
                     {"eps", {e1, e2}},
                     {"tolerances", {{"extrapolated", opts.tol}, {"series", opts.series_tol}, {"sign", opts.sign_tol}}}};
    report.substitution = "s0 = 2s-1+eps";
    report.add_numeric("-Res by Richardson extrapolation vs closed form", relative_error(-extrapolated, closed), opts.tol);
    report.add_numeric("-Res as twisted L-series at s0=2s-1 vs closed form", relative_error(series, closed),
                       opts.series_tol);
    report.add_numeric("-Res series sign independence", std::abs(series - series_other) / std::abs(closed),
                       opts.sign_tol);
    report.finalize();
    return report;
}

// --- prime dual moment ---

CheckReport check_prime_dual(std::int64_t p, Complex s0, Complex s, int sign, const AlphaTriple& alpha, double tol) {
    require_sign(sign);
    if (!arith::is_prime(p) || p < 3) fail(ErrorCode::domain, fmt::format("prime dual: {} is not an odd prime", p));
    require_region("prime dual (2s - s0)", 2.0 * s - s0, 1.5);
    require_region("prime dual (s0)", s0, 1.5);
    const EisensteinProvider eis(alpha);
    const double pd = static_cast<double>(p);
    const Complex w = 2.0 * s - s0;
    const Complex zeta_w = riemann_zeta(w);
    const Complex l_phi = eisenstein_L(s0, alpha);
    const Complex lam = eis.lambda(p), lam_bar = eis.lambda_bar(p);
    const Complex pref = cpow(pd, 2.0 * s + s0 - 1.0) / (pd - 1.0);
    const auto chars = characters_mod(p);

    // Left side, split as in the proof: d = 1, then d = p through the character expansion of zeta(w, l/p).
    const Complex lhs_d1 = (lam_bar - cpow(pd, -s0)) * zeta_w * twisted_L_hurwitz(s0, {0, 1}, alpha);
    std::vector<Complex> twisted(static_cast<std::size_t>(p), 0.0);
    for (std::int64_t l = 1; l < p; ++l) twisted[l] = twisted_L_hurwitz(s0, {-sign * arith::mod_inverse(l, p), p}, alpha);
    Complex lhs_chi0 = 0.0, lhs_chi = 0.0, rhs_chi = 0.0;
    for (const auto& chi : chars) {
        Complex inner = 0.0;
        for (std::int64_t l = 1; l < p; ++l) inner += std::conj(chi(l)) * twisted[l];
        const Complex l_w = dirichlet_L(w, chi);
        if (chi.is_principal()) {
            lhs_chi0 = pref * l_w * inner;
        } else {
            lhs_chi += pref * l_w * inner;
            rhs_chi += pref * chi(-sign) * gauss_sum(chi) * l_w * eisenstein_L(s0, alpha, chi.conj());
        }
    }
    const Complex lhs_total = decomposed_closed_form(p, s0, s, sign, alpha);

    const Complex bracket = -1.0 + lam * cpow(pd, 1.0 - s0) - lam_bar * cpow(pd, 1.0 - 2.0 * s0) + cpow(pd, 1.0 - 3.0 * s0);
    const Complex rhs_chi0 = pref * (1.0 - cpow(pd, -w)) * bracket * zeta_w * l_phi;
    const Complex rhs_d1 = (lam_bar - cpow(pd, -s0)) * zeta_w * l_phi;
    const Complex p_p = pref * (1.0 - cpow(pd, -w)) * bracket + lam_bar - cpow(pd, -s0);
    const Complex rhs_total = p_p * zeta_w * l_phi + rhs_chi;

    CheckReport report;
    report.identity = "prime-dual";
    report.mode = CheckMode::numeric;
    report.params = {{"p", p},
                     {"s", format_complex(s)},
                     {"s0", format_complex(s0)},
                     {"sign", sign_str(sign)},
                     {"alpha", alpha_json(alpha)},
                     {"tolerance", tol}};
    report.substitution = "characters mod p via the smallest primitive root";
    report.add_numeric("total", relative_error(lhs_total, rhs_total), tol);
    report.add_numeric("d=1", relative_error(lhs_d1, rhs_d1), tol);
    report.add_numeric("d=p, chi=chi0", relative_error(lhs_chi0, rhs_chi0), tol);
    report.add_numeric("d=p, chi!=chi0", relative_error(lhs_chi, rhs_chi), tol);
    report.add_numeric("split pieces sum to total", relative_error(lhs_d1 + lhs_chi0 + lhs_chi, lhs_total), tol);
    report.finalize();
    return report;
}

// --- Gauss sums and functional equations ---

CheckReport check_gauss_modulus(std::int64_t p, double tol, double principal_tol) {
    CheckReport report;
    report.identity = "gauss-modulus";
    report.mode = CheckMode::numeric;
    report.params = {{"p", p}, {"tolerances", {{"modulus", tol}, {"principal", principal_tol}}}};
    report.substitution = "";
    const double root = std::sqrt(static_cast<double>(p));
    for (const auto& chi : characters_mod(p)) {
        const Complex tau = gauss_sum(chi);
        if (chi.is_principal()) {
            report.add_numeric("tau(chi0) = -1", std::abs(tau + 1.0), principal_tol);
        } else {
            report.add_numeric(fmt::format("|tau(chi_{})| = sqrt(p)", chi.index()), std::abs(std::abs(tau) - root), tol);
        }
    }
    report.finalize();
    return report;
}

CheckReport check_gauss_twist(std::int64_t p, std::int64_t n_max, int sign, double tol) {
    require_sign(sign);
    CheckReport report;
    report.identity = "gauss-twist";
    report.mode = CheckMode::numeric;
    report.params = {{"p", p}, {"n_max", n_max}, {"sign", sign_str(sign)}, {"tolerance", tol}};
    report.substitution = "sum*_l conj(chi(l)) e(-+n linv/p)";
    for (const auto& chi : characters_mod(p)) {
        const Complex tau = gauss_sum(chi);
        for (std::int64_t n = 1; n <= n_max; ++n) {
            Complex direct = 0.0;
            for (std::int64_t l = 1; l < p; ++l)
                direct += std::conj(chi(l)) * additive_character(-sign * n * arith::mod_inverse(l, p), p);
            Complex closed;
            if (n % p == 0) {
                closed = chi.is_principal() ? static_cast<double>(p - 1) : 0.0;
            } else {
                closed = std::conj(chi(-sign * n)) * tau;
            }
            report.add_numeric(fmt::format("n={},chi_{}", n, chi.index()), std::abs(direct - closed), tol);
        }
    }
    report.finalize();
    return report;
}

CheckReport check_dirichlet_functional_eq(std::int64_t p, Complex s0, double tol) {
    const double pd = static_cast<double>(p);
    const Complex i(0.0, 1.0);
    CheckReport report;
    report.identity = "functional-equation";
    report.mode = CheckMode::numeric;
    report.params = {{"p", p}, {"s0", format_complex(s0)}, {"tolerance", tol}};
    report.substitution = "a_chi = 0 (even), 1 (odd)";
    Complex even_lhs = 0.0, even_sum = 0.0, odd_lhs = 0.0, odd_sum = 0.0;
    bool have_even = false;
    for (const auto& chi : characters_mod(p)) {
        if (chi.is_principal()) continue;
        const int a = chi.parity();
        const auto chi_bar = chi.conj();
        const Complex tau = gauss_sum(chi), tau_bar = gauss_sum(chi_bar);
        const Complex l_dual = dirichlet_L(1.0 - s0, chi);
        const Complex l_bar = dirichlet_L(s0, chi_bar);
        const Complex rhs = std::pow(i, -a) * tau_bar / std::sqrt(pd) * cpow(pd, 0.5 - s0) *
                            gamma_R(1.0 - s0 + static_cast<double>(a)) / gamma_R(s0 + static_cast<double>(a)) * l_dual;
        report.add_numeric(fmt::format("L(s0, conj chi_{})", chi.index()), relative_error(l_bar, rhs), tol);
        report.add_numeric(fmt::format("tau(chi_{}) tau(conj chi) = chi(-1) p", chi.index()),
                           std::abs(tau * tau_bar - chi(-1) * pd) / pd, tol);
        const Complex lhs_term = tau * l_dual * std::pow(l_bar, 3);
        const Complex sum_term = l_dual * l_dual * l_bar * l_bar;
        if (a == 0) {
            even_lhs += lhs_term;
            even_sum += sum_term;
            have_even = true;
        } else {
            odd_lhs += lhs_term;
            odd_sum += sum_term;
        }
    }
    if (have_even) {
        const Complex rhs = cpow(pd, 1.0 - s0) * gamma_R(1.0 - s0) / gamma_R(s0) * even_sum;
        report.add_numeric("even aggregate", relative_error(even_lhs, rhs), tol);
    }
    const Complex odd_rhs = i * cpow(pd, 1.0 - s0) * gamma_R(2.0 - s0) / gamma_R(1.0 + s0) * odd_sum;
    report.add_numeric("odd aggregate", relative_error(odd_lhs, odd_rhs), tol);
    report.finalize();
    return report;
}

// --- conjecture factor ---

Complex conjecture_factor_tau(std::int64_t a, const AlphaTriple& beta) {
    Complex out = std::pow(static_cast<double>(a), -0.5);
    for (const auto& [p, o] : arith::factorize(a)) {
        std::int64_t pk = 1;
        for (int k = 0; k < o - 1; ++k) pk *= p;
        out *= tau_alpha(beta, pk * p) - tau_alpha(beta, pk) / static_cast<double>(p);
    }
    return out;
}

Complex conjecture_factor_specialized(std::int64_t a, const AlphaTriple& beta) {
    const Complex s = 0.5;
    const auto factor = cfkrs_local_factor(EisensteinProvider::general(beta), a, ExponentVariable::s(), true);
    return cpow(static_cast<double>(a), s - 1.0) * evaluate(factor, s);
}

CheckReport check_conjecture_factor(std::int64_t a, const AlphaTriple& alpha, double tol) {
    if (a < 1) fail(ErrorCode::invalid_argument, "conjecture factor: a must be >= 1");
    if (std::abs(alpha[0] + alpha[1] + alpha[2]) > 1e-12) {
        fail(ErrorCode::invalid_argument, "conjecture factor: alpha must sum to zero");
    }
    CheckReport report;
    report.identity = "conjecture-factor";
    report.mode = CheckMode::numeric;
    report.params = {{"a", a}, {"alpha", alpha_json(alpha)}, {"tolerance", tol}};
    report.substitution = "s = 1/2, Eisenstein data -eps*alpha";
    for (int mask = 0; mask < 8; ++mask) {
        const std::array<int, 3> eps{mask & 4 ? -1 : 1, mask & 2 ? -1 : 1, mask & 1 ? -1 : 1};
        AlphaTriple beta;
        for (int i = 0; i < 3; ++i) beta[i] = -static_cast<double>(eps[i]) * alpha[i];
        report.add_numeric("eps=" + eps_str(eps),
                           relative_error(conjecture_factor_specialized(a, beta), conjecture_factor_tau(a, beta)), tol);
    }
    report.finalize();
    return report;
}

// --- property suites ---

CheckReport check_orthogonality(std::int64_t p, double tol) {
    const auto chars = characters_mod(p);
    double worst = 0.0;
    for (std::int64_t l = 0; l < p; ++l) {
        for (std::int64_t m = 0; m < p; ++m) {
            Complex total = 0.0;
            for (const auto& chi : chars) total += std::conj(chi(l)) * chi(m);
            const double expected = (l == m && l != 0) ? static_cast<double>(p - 1) : 0.0;
            worst = std::max(worst, std::abs(total - expected));
        }
    }
    CheckReport report;
    report.identity = "property/orthogonality";
    report.mode = CheckMode::numeric;
    report.params = {{"p", p}, {"tolerance", tol}};
    report.add_numeric("max over (l, m)", worst, tol);
    report.finalize();
    return report;
}

CheckReport check_hurwitz_decomposition(std::int64_t p, double tol) {
    const auto chars = characters_mod(p);
    const double pd = static_cast<double>(p);
    CheckReport report;
    report.identity = "property/hurwitz-characters";
    report.mode = CheckMode::numeric;
    report.params = {{"p", p}, {"tolerance", tol}};
    report.substitution = "zeta(z, l/p) = p^z/phi(p) sum_chi conj(chi(l)) L(z, chi)";
    for (Complex z : {Complex(2.0, 0.0), Complex(3.0, 0.0), Complex(2.0, 5.0), Complex(3.0, -5.0), Complex(2.0, -2.5),
                      Complex(3.0, 1.0)}) {
        std::vector<Complex> lvals;
        for (const auto& chi : chars) lvals.push_back(dirichlet_L(z, chi));
        double worst = 0.0;
        for (std::int64_t l = 1; l < p; ++l) {
            Complex total = 0.0;
            for (std::size_t k = 0; k < chars.size(); ++k) total += std::conj(chars[k](l)) * lvals[k];
            total *= cpow(pd, z) / (pd - 1.0);
            worst = std::max(worst, std::abs(total - hurwitz_zeta(z, static_cast<double>(l) / pd)));
        }
        report.add_numeric("z=" + format_complex(z), worst, tol);
    }
    report.finalize();
    return report;
}

CheckReport check_hecke_recurrence(const AlphaTriple& alpha, double tol) {
    const EisensteinProvider prov(alpha);
    CheckReport report;
    report.identity = "property/hecke-recurrence";
    report.mode = CheckMode::numeric;
    report.params = {{"alpha", alpha_json(alpha)}, {"p_max", 50}, {"k_max", 6}, {"tolerance", tol}};
    report.substitution = "recurrence vs triple-divisor sum";
    for (std::int64_t p = 2; p <= 50; ++p) {
        if (!arith::is_prime(p)) continue;
        double worst = 0.0;
        std::int64_t pk = 1;
        for (int k = 0; k <= 6; ++k) {
            const Complex direct = tau_alpha(alpha, pk);
            worst = std::max(worst, std::abs(prov.lambda_prime_power(p, k, false) - direct) / std::max(1.0, std::abs(direct)));
            pk *= p;
        }
        report.add_numeric(fmt::format("p={}", p), worst, tol);
    }
    report.finalize();
    return report;
}

CheckReport check_mobius_sum(std::int64_t n_max) {
    std::vector<std::int64_t> sums(static_cast<std::size_t>(n_max) + 1, 0);
    for (std::int64_t d = 1; d <= n_max; ++d) {
        const int mu = arith::mobius(d);
        if (mu == 0) continue;
        for (std::int64_t n = d; n <= n_max; n += d) sums[n] += mu;
    }
    std::int64_t bad = 0;
    for (std::int64_t n = 1; n <= n_max; ++n) bad += sums[n] != (n == 1 ? 1 : 0);
    CheckReport report;
    report.identity = "property/mobius-sum";
    report.mode = CheckMode::symbolic;
    report.params = {{"n_max", n_max}};
    report.substitution = "sum_{d|n} mu(d) = [n = 1]";
    report.add_exact(fmt::format("n<={} (mismatched={})", n_max, bad), bad == 0);
    report.finalize();
    return report;
}

CheckReport check_ramanujan_bruteforce(std::int64_t d_max, double tol) {
    CheckReport report;
    report.identity = "property/ramanujan-sum";
    report.mode = CheckMode::numeric;
    report.params = {{"d_max", d_max}, {"tolerance", tol}};
    report.substitution = "mu-convolution vs exponential sum";
    const std::int64_t ns[] = {-30, -7, -1, 0, 1, 2, 3, 4, 6, 12, 30, 60, 97, 210};
    double worst = 0.0;
    bool symmetric = true;
    for (std::int64_t d = 1; d <= d_max; ++d) {
        for (std::int64_t n : ns) {
            Complex brute = 0.0;
            for (std::int64_t l = 1; l <= d; ++l)
                if (std::gcd(l, d) == 1) brute += additive_character(l * n, d);
            const std::int64_t exact = arith::ramanujan_sum(n, d);
            worst = std::max(worst, std::abs(brute - static_cast<double>(exact)));
            symmetric = symmetric && exact == arith::ramanujan_sum(-n, d);
        }
    }
    report.add_numeric(fmt::format("d<={}", d_max), worst, tol);
    report.add_exact("S(0,-n;d) = S(0,n;d)", symmetric);
    report.finalize();
    return report;
}

CheckReport check_symbolic_specialization(std::int64_t m_max, double tol) {
    const SymbolicProvider sym;
    const EisensteinProvider eis({0.0, 0.0, 0.0});
    const HeckePoly::Substitution three = [](std::int64_t) { return std::pair<Complex, Complex>(3.0, 3.0); };
    double worst = 0.0;
    bool dual_ok = true;
    for (std::int64_t m1 = 1; m1 <= m_max; ++m1) {
        for (std::int64_t m2 = 1; m2 <= m_max; ++m2) {
            const auto b = fourier_coefficient(sym, m1, m2);
            worst = std::max(worst, std::abs(b.evaluate(three) - fourier_coefficient(eis, m1, m2)));
            dual_ok = dual_ok && fourier_coefficient(sym, m2, m1) == b.dual() && b.dual().dual() == b;
        }
    }
    CheckReport report;
    report.identity = "property/symbolic-specialization";
    report.mode = CheckMode::numeric;
    report.params = {{"m_max", m_max}, {"tolerance", tol}};
    report.substitution = "A_p = B_p = 3 vs Eisenstein(0,0,0)";
    report.add_numeric("B(m1,m2)", worst, tol);
    report.add_exact("B(m2,m1) = dual B(m1,m2), dual involutive", dual_ok);
    report.finalize();
    return report;
}

namespace {

double compare_layers(const ExpSum<HeckePoly>& symbolic, const ExpSum<Complex>& numeric, const PosRational& height,
                      const HeckePoly::Substitution& subst) {
    double worst = 0.0;
    for (const auto& [m, c] : symbolic.terms()) {
        if (m > height) break;
        const Complex expected = c.evaluate(subst);
        worst = std::max(worst, std::abs(expected - numeric.coefficient(m)) / std::max(1.0, std::abs(expected)));
    }
    for (const auto& [m, c] : numeric.terms()) {
        if (m > height) break;
        if (symbolic.terms().count(m) == 0) worst = std::max(worst, std::abs(c));
    }
    return worst;
}

}  // namespace

CheckReport check_layer_consistency(std::int64_t a, const AlphaTriple& alpha, std::int64_t height, double tol) {
    const EisensteinProvider eis(alpha);
    const std::int64_t a1_cutoff = height * a * a;
    const SymbolicTable sym_table(SymbolicProvider{}, std::max(a1_cutoff, a));
    const CoefficientTable<EisensteinProvider> eis_table(eis, std::max(a1_cutoff, a));
    const HeckePoly::Substitution subst = [&](std::int64_t p) {
        return std::pair<Complex, Complex>(eis.lambda(p), eis.lambda_bar(p));
    };
    CheckReport report;
    report.identity = "property/layer-consistency";
    report.mode = CheckMode::numeric;
    report.params = {{"a", a}, {"alpha", alpha_json(alpha)}, {"height", height}, {"tolerance", tol}};
    report.substitution = "A_p -> tau_alpha(p), B_p -> tau_-alpha(p)";
    const auto ds = diagonal_sides(sym_table, a, height);
    const auto dn = diagonal_sides(eis_table, a, height);
    report.add_numeric("diagonal lhs", compare_layers(ds.lhs, dn.lhs, ds.height, subst), tol);
    report.add_numeric("diagonal rhs", compare_layers(ds.rhs, dn.rhs, ds.height, subst), tol);
    const auto os = offdiag_sides(sym_table, a, a1_cutoff, height);
    const auto on = offdiag_sides(eis_table, a, a1_cutoff, height);
    report.add_numeric("offdiag lhs", compare_layers(os.lhs, on.lhs, os.height, subst), tol);
    report.add_numeric("offdiag rhs", compare_layers(os.rhs, on.rhs, os.height, subst), tol);
    report.finalize();
    return report;
}

CheckReport check_eisenstein_character_L(std::int64_t p, Complex s, std::int64_t cutoff, double tol) {
    require_region("Eisenstein character L", s, 2.0);
    const EisensteinProvider d3({0.0, 0.0, 0.0});
    const auto tau3 = d3.lambda_table(cutoff, false);
    CheckReport report;
    report.identity = "property/eisenstein-character-L";
    report.mode = CheckMode::numeric;
    report.params = {{"p", p}, {"s", format_complex(s)}, {"cutoff", cutoff}, {"tolerance", tol}};
    report.substitution = "sum tau_3(n) conj(chi(n)) n^-s = L(s, conj chi)^3";
    std::vector<Complex> powers(static_cast<std::size_t>(cutoff) + 1);
    for (std::int64_t n = 1; n <= cutoff; ++n) powers[n] = tau3[n] * std::exp(-s * std::log(static_cast<double>(n)));
    for (const auto& chi : characters_mod(p)) {
        Complex direct = 0.0;
        for (std::int64_t n = 1; n <= cutoff; ++n) direct += std::conj(chi(n)) * powers[n];
        report.add_numeric(fmt::format("chi_{}", chi.index()), relative_error(direct, std::pow(dirichlet_L(s, chi.conj()), 3)),
                           tol);
    }
    report.finalize();
    return report;
}

}  // namespace gl3recip
