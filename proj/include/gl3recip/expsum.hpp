#pragma once

#include "gl3recip/arith.hpp"
#include "gl3recip/error.hpp"
#include "gl3recip/report.hpp"
#include "gl3recip/ring.hpp"

#include <algorithm>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <type_traits>

namespace gl3recip {

/// Largest base up to which a truncated series is known to hold every term; or exact
/// (no truncation at all, e.g. a finite Euler factor).
class CompletenessBound {
public:
    static CompletenessBound exact() { return CompletenessBound(); }
    static CompletenessBound upto(PosRational b) { return CompletenessBound(b); }

    bool is_exact() const noexcept { return !value_.has_value(); }
    const PosRational& value() const { return *value_; }
    bool covers(const PosRational& h) const { return is_exact() || h <= *value_; }
    std::string str() const { return is_exact() ? "exact" : value_->str(); }

    CompletenessBound times(const PosRational& q) const {
        return is_exact() ? exact() : upto(*value_ * q);
    }
    CompletenessBound divided_by(const PosRational& q) const {
        return is_exact() ? exact() : upto(*value_ / q);
    }
    friend CompletenessBound min(const CompletenessBound& x, const CompletenessBound& y) {
        if (x.is_exact()) return y;
        if (y.is_exact()) return x;
        return *x.value_ <= *y.value_ ? x : y;
    }
    friend bool operator==(const CompletenessBound&, const CompletenessBound&) = default;

private:
    CompletenessBound() = default;
    explicit CompletenessBound(PosRational b) : value_(b) {}
    std::optional<PosRational> value_;
};

/// The single formal exponent variable u = scale * s + shift.
struct ExponentVariable {
    int scale = 1;
    int shift = 0;

    static ExponentVariable s() { return {1, 0}; }
    static ExponentVariable two_s() { return {2, 0}; }
    static ExponentVariable two_s_minus_one() { return {2, -1}; }

    struct Term {
        PosRational base;
        Rational coefficient;
    };

    /// Rewrites p^(c0 + c1*s) as coefficient * base^(-u).
    Term power_of(std::int64_t p, int c0, int c1) const;
    std::string str() const;
};

/// Finite formal sum  sum_m c_m m^(-u)  over positive rational bases m.
template <class R>
class ExpSum {
public:
    using Ring = R;
    using Traits = RingTraits<R>;
    using TermMap = std::map<PosRational, R>;

    explicit ExpSum(CompletenessBound bound = CompletenessBound::exact()) : bound_(bound) {}

    static ExpSum constant(const R& c) {
        ExpSum out;
        out.add_term(PosRational(1), c);
        return out;
    }

    const TermMap& terms() const noexcept { return terms_; }
    const CompletenessBound& bound() const noexcept { return bound_; }
    void set_bound(CompletenessBound b) { bound_ = b; }
    bool empty() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    void add_term(const PosRational& base, const R& c) {
        if (Traits::is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(base, c);
        if (!inserted) {
            it->second += c;
            if (Traits::is_zero(it->second)) terms_.erase(it);
        }
    }

    R coefficient(const PosRational& base) const {
        auto it = terms_.find(base);
        return it == terms_.end() ? Traits::zero() : it->second;
    }

    std::optional<PosRational> min_base() const {
        if (terms_.empty()) return std::nullopt;
        return terms_.begin()->first;
    }

    template <class F>
    auto map_coefficients(F&& f) const {
        using Out = std::decay_t<decltype(f(std::declval<const R&>()))>;
        ExpSum<Out> out(bound_);
        for (const auto& [m, c] : terms_) out.add_term(m, f(c));
        return out;
    }

    std::string str() const {
        std::string out = "{";
        bool first = true;
        for (const auto& [m, c] : terms_) {
            if (!first) out += ", ";
            first = false;
            out += m.str() + " -> " + Traits::str(c);
        }
        return out + "} (complete to " + bound_.str() + ")";
    }

    friend bool operator==(const ExpSum&, const ExpSum&) = default;

private:
    TermMap terms_;
    CompletenessBound bound_;
};

template <class R>
ExpSum<R> add(const ExpSum<R>& x, const ExpSum<R>& y) {
    ExpSum<R> out = x;
    for (const auto& [m, c] : y.terms()) out.add_term(m, c);
    out.set_bound(min(x.bound(), y.bound()));
    return out;
}

namespace detail {

// Smallest base a series can have, counting terms that truncation may have dropped.
template <class R>
std::optional<PosRational> effective_min(const ExpSum<R>& x) {
    auto stored = x.min_base();
    if (x.bound().is_exact()) return stored;
    if (!stored) return x.bound().value();
    return std::min(*stored, x.bound().value());
}

}  // namespace detail

/// Dirichlet-series product. Bases multiply; the result is complete to
/// min(bx * min_y, by * min_x, bx, by). With a ceiling, bases above it are dropped
/// and the bound is capped at the ceiling.
template <class R>
ExpSum<R> mul(const ExpSum<R>& x, const ExpSum<R>& y, std::optional<PosRational> ceiling = std::nullopt) {
    const auto min_x = detail::effective_min(x);
    const auto min_y = detail::effective_min(y);
    CompletenessBound bound = CompletenessBound::exact();
    if (min_x && min_y) {
        if (!x.bound().is_exact()) bound = min(bound, min(x.bound(), x.bound().times(*min_y)));
        if (!y.bound().is_exact()) bound = min(bound, min(y.bound(), y.bound().times(*min_x)));
    }
    if (ceiling) bound = min(bound, CompletenessBound::upto(*ceiling));
    ExpSum<R> out(bound);
    for (const auto& [mx, cx] : x.terms()) {
        for (const auto& [my, cy] : y.terms()) {
            const PosRational m = mx * my;
            if (ceiling && m > *ceiling) break;  // y is sorted ascending
            out.add_term(m, cx * cy);
        }
    }
    return out;
}

/// Multiplies by c * q^u: every base m becomes m / q and every coefficient is scaled by c.
template <class R>
ExpSum<R> scale_base(const ExpSum<R>& x, const PosRational& q, const R& c) {
    ExpSum<R> out(x.bound().divided_by(q));
    for (const auto& [m, coeff] : x.terms()) out.add_term(m / q, coeff * c);
    return out;
}

/// Drops every base above h; the result is complete to min(bound, h).
template <class R>
ExpSum<R> truncate(const ExpSum<R>& x, const PosRational& h) {
    ExpSum<R> out(min(x.bound(), CompletenessBound::upto(h)));
    for (const auto& [m, c] : x.terms()) {
        if (m > h) break;
        out.add_term(m, c);
    }
    return out;
}

/// Evaluates a complex-coefficient sum at u using m^(-u) = exp(-u log m).
inline std::complex<double> evaluate(const ExpSum<std::complex<double>>& x, std::complex<double> u) {
    std::complex<double> total = 0.0;
    for (const auto& [m, c] : x.terms()) total += c * std::exp(-u * std::log(m.to_double()));
    return total;
}

enum class LSeriesKind { standard, dual };

/// sum_{n <= N} lambda(n) n^(-u) (lambda-bar for the dual series), complete to N.
/// The provider must expose lambda_table(N, dual).
template <class Provider>
auto truncated_L(const Provider& provider, LSeriesKind which, std::int64_t cutoff,
                 std::optional<PosRational> ceiling = std::nullopt) {
    using R = typename Provider::value_type;
    if (cutoff < 1) fail(ErrorCode::invalid_argument, "truncated_L: cutoff must be >= 1");
    std::int64_t n_max = cutoff;
    CompletenessBound bound = CompletenessBound::upto(PosRational(cutoff));
    if (ceiling && *ceiling < PosRational(cutoff)) {
        n_max = std::max<std::int64_t>(1, ceiling->num() / ceiling->den());
        bound = CompletenessBound::upto(*ceiling);
    }
    const auto table = provider.lambda_table(n_max, which == LSeriesKind::dual);
    ExpSum<R> out(bound);
    for (std::int64_t n = 1; n <= n_max; ++n) out.add_term(PosRational(n), table[static_cast<std::size_t>(n)]);
    return out;
}

struct CompareOptions {
    double tolerance = 0.0;       // absolute, complex rings only
    std::size_t max_items = 200;  // beyond this only mismatches and one aggregate item are listed
};

/// Compares the coefficients of every base m <= h present on either side. Throws
/// ErrorCode::completeness when h exceeds either completeness bound.
template <class R>
CheckReport assert_equal_up_to(const ExpSum<R>& x, const ExpSum<R>& y, const PosRational& h,
                               const CompareOptions& opts = {}) {
    if (!x.bound().covers(h) || !y.bound().covers(h)) {
        fail(ErrorCode::completeness, "assert_equal_up_to: height " + h.str() + " exceeds completeness bounds (" +
                                          x.bound().str() + ", " + y.bound().str() + ")");
    }
    CheckReport report;
    report.identity = "expsum.equal";
    report.mode = RingTraits<R>::exact ? CheckMode::symbolic : CheckMode::numeric;
    report.params["height"] = h.str();
    std::map<PosRational, std::pair<R, R>> merged;
    for (const auto& [m, c] : x.terms()) {
        if (m > h) break;
        merged.try_emplace(m, c, RingTraits<R>::zero());
    }
    for (const auto& [m, c] : y.terms()) {
        if (m > h) break;
        auto [it, inserted] = merged.try_emplace(m, RingTraits<R>::zero(), c);
        if (!inserted) it->second.second = c;
    }
    const bool list_all = merged.size() <= opts.max_items;
    std::size_t mismatches = 0;
    for (const auto& [m, pair] : merged) {
        const std::string key = "base=" + m.str();
        if constexpr (RingTraits<R>::exact) {
            const bool same = pair.first == pair.second;
            if (!same) ++mismatches;
            if (list_all || !same) report.add_exact(key, same);
        } else {
            const double err = std::abs(pair.first - pair.second);
            if (!(err <= opts.tolerance)) ++mismatches;
            if (list_all || !(err <= opts.tolerance)) report.add_numeric(key, err, opts.tolerance);
        }
    }
    if (!list_all) {
        const std::string key = "bases<=" + h.str() + " (n=" + std::to_string(merged.size()) +
                                ", mismatched=" + std::to_string(mismatches) + ")";
        if constexpr (RingTraits<R>::exact) {
            report.add_exact(key, mismatches == 0);
        } else {
            double worst = 0.0;
            for (const auto& [m, pair] : merged) worst = std::max(worst, std::abs(pair.first - pair.second));
            report.add_numeric(key, worst, opts.tolerance);
        }
    }
    report.finalize();
    return report;
}

}  // namespace gl3recip
