#pragma once

#include "gl3recip/hecke_poly.hpp"

#include <complex>
#include <string>

namespace gl3recip {

/// Coefficient rings used by ExpSum: exact HeckePoly or numeric complex.
template <class R>
struct RingTraits;

template <>
struct RingTraits<HeckePoly> {
    static constexpr bool exact = true;
    static HeckePoly zero() { return {}; }
    static HeckePoly one() { return HeckePoly(1L); }
    static bool is_zero(const HeckePoly& x) { return x.is_zero(); }
    static HeckePoly scaled(const HeckePoly& x, const Rational& q) { return x * q; }
    static std::string str(const HeckePoly& x) { return x.str(); }
};

std::string format_real(double x);
std::string format_complex(std::complex<double> z);

template <>
struct RingTraits<std::complex<double>> {
    static constexpr bool exact = false;
    static std::complex<double> zero() { return 0.0; }
    static std::complex<double> one() { return 1.0; }
    static bool is_zero(const std::complex<double>& x) { return x == 0.0; }
    static std::complex<double> scaled(const std::complex<double>& x, const Rational& q) { return x * q.get_d(); }
    static std::string str(const std::complex<double>& x) { return format_complex(x); }
};

}  // namespace gl3recip
