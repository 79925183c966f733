#include <doctest.h>

#include "gl3recip/identities.hpp"

#include <cmath>
#include <numbers>

using namespace gl3recip;

namespace {

constexpr double kZeta3 = 1.2020569031595942854;
const AlphaTriple kZero{0.0, 0.0, 0.0};
const AlphaTriple kTwist{Complex(0, 0.3), Complex(0, -0.1), Complex(0, -0.2)};

std::string failing_keys(const CheckReport& r) {
    std::string out;
    for (const auto& item : r.items)
        if (!item.passed()) out += item.key + " (" + (item.error ? std::to_string(*item.error) : "mismatch") + "); ";
    return out;
}

#define REQUIRE_PASS(report)                                  \
    do {                                                      \
        const auto& rep_ = (report);                          \
        INFO(rep_.identity << ": " << failing_keys(rep_));    \
        REQUIRE(rep_.pass);                                   \
    } while (0)

template <class F>
ErrorCode error_code_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::invalid_argument;
}

}  // namespace

TEST_CASE("diagonal identity, symbolic") {
    const SymbolicTable table(SymbolicProvider{}, 200);
    REQUIRE_PASS(check_diagonal(table, 1, 50));
    REQUIRE_PASS(check_diagonal(table, 12, 100));
    for (std::int64_t a = 1; a <= 40; ++a) REQUIRE_PASS(check_diagonal(table, a, 10));

    // a = p, base p: B(p, p) = A_p B_p - 1 on both sides.
    for (std::int64_t p : {2, 3, 7}) {
        const auto sides = diagonal_sides(table, p, 10);
        const auto expected = HeckePoly::A(p) * HeckePoly::B(p) - HeckePoly(1L);
        CHECK(sides.lhs.coefficient(PosRational(p)) == expected);
        CHECK(sides.rhs.coefficient(PosRational(p)) == expected);
    }
    const auto rep = check_diagonal(table, 6, 10);
    CHECK(rep.mode == CheckMode::symbolic);
    CHECK(rep.substitution == "u = 2s");
}

TEST_CASE("off-diagonal residue identity, symbolic") {
    const SymbolicTable table(SymbolicProvider{}, 10 * 30 * 30);
    REQUIRE_PASS(check_offdiag_residue(table, 1, 10, 10));
    for (std::int64_t a = 1; a <= 30; ++a) REQUIRE_PASS(check_offdiag_residue(table, a, 10 * a * a, 10));

    // a = 2, base 1: A2^2 - (A2^2 - B2)/2, worked out by hand.
    const auto a2 = HeckePoly::A(2), b2 = HeckePoly::B(2);
    const auto expected = a2 * a2 - (a2 * a2 - b2) * make_rational(1, 2);
    const auto sides = offdiag_sides(table, 2, 40, 10);
    CHECK(sides.lhs.coefficient(PosRational(1)) == expected);
    CHECK(sides.rhs.coefficient(PosRational(1)) == expected);

    // a = 1 reduces to the L-series itself.
    const auto one = offdiag_sides(table, 1, 10, 10);
    for (std::int64_t n = 1; n <= 10; ++n) CHECK(one.lhs.coefficient(PosRational(n)) == table.lambda(n));

    // Too small an inner cutoff cannot certify the requested height.
    CHECK(error_code_of([&] { check_offdiag_residue(table, 6, 10, 10); }) == ErrorCode::completeness);
}

TEST_CASE("symbolic identity detects a corrupted coefficient") {
    const SymbolicTable table(SymbolicProvider{}, 100);
    auto sides = diagonal_sides(table, 4, 10);
    sides.lhs.add_term(PosRational(3), HeckePoly(1L));
    const auto rep = assert_equal_up_to(sides.lhs, sides.rhs, sides.height);
    CHECK_FALSE(rep.pass);
}

TEST_CASE("Ramanujan generating function") {
    const auto r1 = check_ramanujan_generating(1, 2.0, 100000);
    REQUIRE_PASS(r1);
    // Independent oracle: a1 = 1 gives sum mu(d) d^-2 = 6/pi^2.
    Complex direct = 0.0;
    for (std::int64_t d = 1; d <= 200000; ++d) direct += arith::mobius(d) / (double(d) * double(d));
    CHECK(std::abs(direct - 6.0 / (std::numbers::pi * std::numbers::pi)) < 1e-5);
    REQUIRE_PASS(check_ramanujan_generating(6, 2.5, 100000));
    REQUIRE_PASS(check_ramanujan_generating(4, 3.0, 100000));
    REQUIRE_PASS(check_ramanujan_generating(12, Complex(3, -1), 100000));
    CHECK(error_code_of([] { check_ramanujan_generating(1, 1.5, 1000); }) == ErrorCode::region);
}

TEST_CASE("twisted decomposition, matched truncation") {
    DecompositionOptions opts;
    opts.a0_cutoff = 200000;
    opts.a1_cutoff = 40000;
    const TwistedSeriesWorkspace ws(EisensteinProvider(kTwist), 2.5, 2.0, 2 * opts.a0_cutoff, 2 * opts.a1_cutoff);
    for (std::int64_t a : {1, 2, 6}) {
        for (int sign : {1, -1}) REQUIRE_PASS(check_twisted_decomposition(ws, kTwist, a, sign, opts));
    }
    CHECK(error_code_of([] { check_twisted_decomposition(2, 1.4, 2.2, 1, kZero); }) == ErrorCode::region);
    CHECK(error_code_of([] { check_twisted_decomposition(2, 2.1, 1.7, 1, kZero); }) == ErrorCode::region);
}

TEST_CASE("residue at the polar divisor") {
    // a = 1, s = 2: -Res = zeta(3)^3 for Phi = Eisenstein(0, 0, 0).
    const Complex closed = residue_closed_form(1, 2.0, kZero);
    CHECK(std::abs(closed - std::pow(kZeta3, 3)) < 1e-13);
    for (std::int64_t a : {1, 2, 6}) {
        for (int sign : {1, -1}) {
            const auto rep = check_residue_numeric(a, 2.0, sign, kZero);
            REQUIRE_PASS(rep);
        }
        CHECK(residue_series(a, 2.0, 1, kTwist) == residue_series(a, 2.0, -1, kTwist));
    }
    REQUIRE_PASS(check_residue_numeric(12, Complex(2.0, 0.5), 1, kTwist));
    CHECK(error_code_of([] { check_residue_numeric(2, 1.2, 1, kZero); }) == ErrorCode::region);

    // The unextrapolated eps * L at eps = 1e-2 is visibly off, so the ladder is doing work.
    const Complex f = 1e-2 * decomposed_closed_form(2, 3.01, 2.0, 1, kZero);
    CHECK(relative_error(-f, residue_closed_form(2, 2.0, kZero)) > 1e-3);
}

TEST_CASE("prime dual moment") {
    for (std::int64_t p : {3, 5, 7}) {
        for (int sign : {1, -1}) {
            REQUIRE_PASS(check_prime_dual(p, 2.1, 2.2, sign, kZero));
            REQUIRE_PASS(check_prime_dual(p, 2.0, 2.5, sign, kTwist));
        }
    }
    // The character combination depends on the sign, so the reports differ.
    const auto plus = check_prime_dual(5, 2.1, 2.2, 1, kZero), minus = check_prime_dual(5, 2.1, 2.2, -1, kZero);
    CHECK(plus.to_json().dump() != minus.to_json().dump());
    CHECK(decomposed_closed_form(5, 2.1, 2.2, 1, kZero) != decomposed_closed_form(5, 2.1, 2.2, -1, kZero));
    CHECK(error_code_of([] { check_prime_dual(9, 2.1, 2.2, 1, kZero); }) == ErrorCode::domain);
    CHECK(error_code_of([] { check_prime_dual(5, 2.1, 1.7, 1, kZero); }) == ErrorCode::region);
}

TEST_CASE("Gauss sums") {
    for (std::int64_t p : {2, 3, 5, 7, 11, 13, 47}) REQUIRE_PASS(check_gauss_modulus(p));
    for (std::int64_t p : {3, 5, 7, 11}) {
        REQUIRE_PASS(check_gauss_twist(p, 3 * p, 1));
        REQUIRE_PASS(check_gauss_twist(p, 3 * p, -1));
    }
}

TEST_CASE("Dirichlet functional equation") {
    for (std::int64_t p : {5, 7, 11}) {
        REQUIRE_PASS(check_dirichlet_functional_eq(p, Complex(0.5, 1.0)));
        REQUIRE_PASS(check_dirichlet_functional_eq(p, Complex(0.5, 2.0)));
        REQUIRE_PASS(check_dirichlet_functional_eq(p, Complex(0.8, -3.0)));
    }
    const auto rep = check_dirichlet_functional_eq(7, Complex(0.5, 1.0));
    bool has_even = false, has_odd = false;
    for (const auto& item : rep.items) {
        has_even = has_even || item.key == "even aggregate";
        has_odd = has_odd || item.key == "odd aggregate";
    }
    CHECK(has_even);
    CHECK(has_odd);
}

TEST_CASE("conjecture factor") {
    for (std::int64_t p : {2, 3, 5, 7}) {
        const Complex expected = (3.0 - 1.0 / double(p)) / std::sqrt(double(p));
        CHECK(std::abs(conjecture_factor_tau(p, kZero) - expected) < 1e-14);
        CHECK(std::abs(conjecture_factor_specialized(p, kZero) - expected) < 1e-14);
    }
    CHECK(std::abs(conjecture_factor_tau(1, kTwist) - 1.0) < 1e-15);
    for (std::int64_t a = 1; a <= 30; ++a) {
        REQUIRE_PASS(check_conjecture_factor(a, kZero));
        REQUIRE_PASS(check_conjecture_factor(a, kTwist));
    }
    CHECK(check_conjecture_factor(12, kTwist).items.size() == 8);
    CHECK(error_code_of([] { check_conjecture_factor(4, {0.1, 0.0, 0.0}); }) == ErrorCode::invalid_argument);
}

TEST_CASE("property suites") {
    for (std::int64_t p : {3, 5, 7, 11, 13}) {
        REQUIRE_PASS(check_orthogonality(p));
        REQUIRE_PASS(check_hurwitz_decomposition(p));
    }
    REQUIRE_PASS(check_hecke_recurrence(kZero));
    REQUIRE_PASS(check_hecke_recurrence(kTwist));
    REQUIRE_PASS(check_mobius_sum(10000));
    REQUIRE_PASS(check_ramanujan_bruteforce(100));
    REQUIRE_PASS(check_symbolic_specialization(30));
    REQUIRE_PASS(check_eisenstein_character_L(5, 3.0, 20000));
}

TEST_CASE("symbolic and Eisenstein layers agree") {
    for (std::int64_t a : {1, 2, 4, 6, 12, 30}) {
        REQUIRE_PASS(check_layer_consistency(a, kTwist, 10));
        REQUIRE_PASS(check_layer_consistency(a, kZero, 10));
    }
}
