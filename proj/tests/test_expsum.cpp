#include <doctest.h>

#include "gl3recip/hecke.hpp"

#include <random>

using namespace gl3recip;

namespace {

using PolySum = ExpSum<HeckePoly>;

PolySum from_list(std::initializer_list<std::pair<PosRational, HeckePoly>> terms,
                  CompletenessBound bound = CompletenessBound::exact()) {
    PolySum out(bound);
    for (const auto& [m, c] : terms) out.add_term(m, c);
    return out;
}

PolySum random_sum(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(1, 12), den(1, 4), coeff(-3, 3), count(0, 4);
    PolySum out;
    for (int i = count(rng); i > 0; --i) {
        HeckePoly c(static_cast<long>(coeff(rng)));
        if (num(rng) % 2) c = c * HeckePoly::A(2);
        out.add_term(PosRational(num(rng), den(rng)), c);
    }
    return out;
}

}  // namespace

TEST_CASE("add") {
    const auto c = HeckePoly::A(3);
    CHECK(add(from_list({{2, 1L}}), from_list({{2, c}})) == from_list({{2, HeckePoly(1L) + c}}));
    const auto x = from_list({{2, c}, {5, 3L}});
    CHECK(add(x, PolySum()) == x);
    CHECK(add(from_list({{1, 1L}}), from_list({{1, -1L}})).empty());
    const auto t = add(from_list({{1, 1L}}, CompletenessBound::upto(7)), from_list({{1, 1L}}, CompletenessBound::upto(3)));
    CHECK(t.bound() == CompletenessBound::upto(3));
}

TEST_CASE("mul") {
    const auto a = HeckePoly::A(2), b = HeckePoly::B(2);
    CHECK(mul(from_list({{2, a}}), from_list({{3, b}})) == from_list({{6, a * b}}));
    const auto one_two = from_list({{1, 1L}, {2, 1L}});
    CHECK(mul(one_two, one_two) == from_list({{1, 1L}, {2, 2L}, {4, 1L}}));
    CHECK(mul(from_list({{PosRational(1, 2), 1L}}), from_list({{2, 1L}})) == from_list({{1, 1L}}));

    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
        const auto x = random_sum(rng), y = random_sum(rng), z = random_sum(rng);
        REQUIRE(mul(x, y) == mul(y, x));
        REQUIRE(mul(mul(x, y), z) == mul(x, mul(y, z)));
    }
}

TEST_CASE("mul completeness bound") {
    // Both truncated, both starting at base 1: the bound is min(bx, by).
    const auto x = from_list({{1, 1L}, {2, 1L}}, CompletenessBound::upto(5));
    const auto y = from_list({{1, 1L}}, CompletenessBound::upto(9));
    CHECK(mul(x, y).bound() == CompletenessBound::upto(5));
    // Truncated times an exact sum starting at 1/3: bx * 1/3.
    const auto z = from_list({{PosRational(1, 3), 1L}, {1, 1L}});
    CHECK(mul(x, z).bound() == CompletenessBound::upto(PosRational(5, 3)));
    // Exact times exact stays exact.
    CHECK(mul(z, z).bound().is_exact());
    // Ceiling caps both bound and content.
    const auto c = mul(x, z, PosRational(1));
    CHECK(c.bound() == CompletenessBound::upto(1));
    CHECK(c.terms().rbegin()->first == PosRational(1));
}

TEST_CASE("scale_base and truncate") {
    const auto a2 = HeckePoly::A(2), b2 = HeckePoly::B(2);
    CHECK(scale_base(from_list({{4, 1L}}), PosRational(4), HeckePoly(1L)) == from_list({{1, 1L}}));
    CHECK(scale_base(from_list({{1, 1L}}), PosRational(6), HeckePoly(1L)) == from_list({{PosRational(1, 6), 1L}}));
    CHECK(scale_base(from_list({{2, a2}}), PosRational(1), b2) == from_list({{2, a2 * b2}}));

    std::mt19937 rng(99);
    for (int i = 0; i < 100; ++i) {
        auto x = random_sum(rng);
        x.set_bound(CompletenessBound::upto(PosRational(7, 2)));
        const PosRational q(3, 5);
        REQUIRE(scale_base(scale_base(x, q, HeckePoly(1L)), q.inverse(), HeckePoly(1L)) == x);
    }
    const auto x = scale_base(from_list({{1, 1L}}, CompletenessBound::upto(10)), PosRational(4), HeckePoly(1L));
    CHECK(x.bound() == CompletenessBound::upto(PosRational(5, 2)));
    const auto t = truncate(from_list({{1, 1L}, {3, 1L}, {5, 1L}}), PosRational(4));
    CHECK(t == from_list({{1, 1L}, {3, 1L}}, CompletenessBound::upto(4)));
}

TEST_CASE("truncated_L") {
    const SymbolicProvider sym;
    CHECK(truncated_L(sym, LSeriesKind::standard, 1).str() == "{1 -> 1} (complete to 1)");
    CHECK(truncated_L(sym, LSeriesKind::standard, 2).str() == "{1 -> 1, 2 -> A2} (complete to 2)");
    CHECK(truncated_L(sym, LSeriesKind::dual, 2).str() == "{1 -> 1, 2 -> B2} (complete to 2)");

    // d3 divisor function by a brute-force triple loop.
    const EisensteinProvider eis({0.0, 0.0, 0.0});
    const auto l = truncated_L(eis, LSeriesKind::standard, 1000);
    for (std::int64_t n = 1; n <= 1000; ++n) {
        std::int64_t count = 0;
        for (std::int64_t d1 = 1; d1 <= n; ++d1)
            for (std::int64_t d2 = 1; d1 * d2 <= n; ++d2)
                if (n % (d1 * d2) == 0) ++count;
        REQUIRE(l.coefficient(PosRational(n)) == Complex(static_cast<double>(count)));
    }
}

TEST_CASE("assert_equal_up_to") {
    const auto x = from_list({{1, HeckePoly::A(2)}}, CompletenessBound::upto(3));
    CHECK(assert_equal_up_to(x, x, PosRational(3)).pass);
    const auto y = from_list({{1, HeckePoly::B(2)}}, CompletenessBound::upto(3));
    const auto r = assert_equal_up_to(x, y, PosRational(1));
    CHECK_FALSE(r.pass);
    REQUIRE(r.items.size() == 1);
    CHECK(r.items[0].key == "base=1");
    CHECK_FALSE(r.items[0].exact);

    // Comparing beyond a completeness bound is refused, never silently passed.
    const SymbolicProvider sym;
    const auto l = truncated_L(sym, LSeriesKind::standard, 10);
    const auto ld = truncated_L(sym, LSeriesKind::dual, 10);
    const auto prod = mul(l, ld);
    CHECK(prod.bound() == CompletenessBound::upto(10));
    try {
        (void)assert_equal_up_to(prod, prod, PosRational(11));
        FAIL("expected completeness error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::completeness);
    }

    // Complex comparison uses the tolerance.
    ExpSum<Complex> u, v;
    u.add_term(PosRational(2), Complex(1.0, 0.0));
    v.add_term(PosRational(2), Complex(1.0, 1e-13));
    CHECK(assert_equal_up_to(u, v, PosRational(5), {1e-12, 200}).pass);
    CHECK_FALSE(assert_equal_up_to(u, v, PosRational(5), {1e-14, 200}).pass);
}

TEST_CASE("item cap lists mismatches and an aggregate") {
    PolySum x(CompletenessBound::upto(500)), y(CompletenessBound::upto(500));
    for (int n = 1; n <= 300; ++n) {
        x.add_term(PosRational(n), HeckePoly(static_cast<long>(n)));
        y.add_term(PosRational(n), HeckePoly(static_cast<long>(n == 77 ? 0 : n)));
    }
    const auto r = assert_equal_up_to(x, y, PosRational(300), {0.0, 200});
    CHECK_FALSE(r.pass);
    REQUIRE(r.items.size() == 2);
    CHECK(r.items[0].key == "base=77");
    CHECK(r.items[1].key == "bases<=300 (n=300, mismatched=1)");
}

TEST_CASE("ExponentVariable") {
    CHECK(ExponentVariable::two_s_minus_one().str() == "u = 2s-1");
    CHECK(ExponentVariable::two_s().str() == "u = 2s");
    const auto t = ExponentVariable::two_s_minus_one().power_of(3, -2, 2);
    CHECK(t.base == PosRational(1, 3));
    CHECK(t.coefficient == make_rational(1, 3));
    CHECK_THROWS_AS(ExponentVariable::two_s().power_of(3, 0, 1), Error);
}
