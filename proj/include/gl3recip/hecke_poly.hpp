#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace gl3recip {

using Rational = mpq_class;

/// num/den in canonical form (gmpxx does not reduce two-argument constructions).
inline Rational make_rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// A_p = lambda(p) and B_p = lambda-bar(p).
enum class Generator : std::uint8_t { A = 0, B = 1 };

/// Monomial in the per-prime generators, stored as factors sorted by (prime, generator).
class Monomial {
public:
    struct Factor {
        std::uint32_t prime;
        Generator gen;
        std::uint32_t power;
        friend bool operator==(const Factor&, const Factor&) = default;
    };

    Monomial() = default;
    static Monomial generator(Generator gen, std::int64_t p, std::uint32_t power = 1);

    const std::vector<Factor>& factors() const noexcept { return factors_; }
    bool is_one() const noexcept { return factors_.empty(); }
    std::uint32_t degree() const noexcept;

    friend Monomial operator*(const Monomial& x, const Monomial& y);
    Monomial swapped() const;
    std::string str() const;

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend bool operator<(const Monomial& x, const Monomial& y);

private:
    std::vector<Factor> factors_;
};

/// Polynomial with rational coefficients in the generators {A_p, B_p}; zero terms are never stored.
class HeckePoly {
public:
    using TermMap = std::map<Monomial, Rational>;

    HeckePoly() = default;
    HeckePoly(long c);  // NOLINT(google-explicit-constructor): integer constants read naturally
    explicit HeckePoly(const Rational& c);
    static HeckePoly generator(Generator gen, std::int64_t p);
    static HeckePoly A(std::int64_t p) { return generator(Generator::A, p); }
    static HeckePoly B(std::int64_t p) { return generator(Generator::B, p); }

    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    HeckePoly& operator+=(const HeckePoly& other);
    HeckePoly& operator-=(const HeckePoly& other);
    HeckePoly& operator*=(const Rational& c);
    friend HeckePoly operator+(HeckePoly x, const HeckePoly& y) { return x += y; }
    friend HeckePoly operator-(HeckePoly x, const HeckePoly& y) { return x -= y; }
    friend HeckePoly operator-(HeckePoly x) { return x *= Rational(-1); }
    friend HeckePoly operator*(const HeckePoly& x, const HeckePoly& y);
    friend HeckePoly operator*(HeckePoly x, const Rational& c) { return x *= c; }
    friend HeckePoly operator*(const Rational& c, HeckePoly x) { return x *= c; }
    friend bool operator==(const HeckePoly&, const HeckePoly&) = default;

    /// Adds c * m in place.
    void add_term(const Monomial& m, const Rational& c);

    /// Ring automorphism exchanging A_p and B_p for every p.
    HeckePoly dual() const;

    /// Evaluates under A_p -> values(p).first, B_p -> values(p).second.
    using Substitution = std::function<std::pair<std::complex<double>, std::complex<double>>(std::int64_t)>;
    std::complex<double> evaluate(const Substitution& values) const;

    /// Canonical text, e.g. "A2^2*B3 - 1/5": degree-descending, then by (prime, generator, power).
    std::string str() const;

private:
    TermMap terms_;
};

}  // namespace gl3recip
