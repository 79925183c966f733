#include "gl3recip/expsum.hpp"

#include <fmt/format.h>

namespace gl3recip {

namespace {

Rational int_power(std::int64_t p, int e) {
    mpz_class z;
    mpz_ui_pow_ui(z.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e < 0 ? -e : e));
    return e < 0 ? Rational(mpz_class(1), z) : Rational(z);
}

PosRational pos_power(std::int64_t p, int e) {
    PosRational out(1);
    for (int i = 0; i < (e < 0 ? -e : e); ++i) out = out * PosRational(p);
    return e < 0 ? out.inverse() : out;
}

}  // namespace

ExponentVariable::Term ExponentVariable::power_of(std::int64_t p, int c0, int c1) const {
    if (scale <= 0) fail(ErrorCode::invalid_argument, "ExponentVariable: scale must be positive");
    if (c1 % scale != 0) {
        fail(ErrorCode::invalid_argument,
             fmt::format("p^({} + {}s) is not a rational-base term in {}", c0, c1, str()));
    }
    const int base_exp = -c1 / scale;
    const int coeff_exp = c0 + base_exp * shift;  // c0 - c1*shift/scale
    return {pos_power(p, base_exp), int_power(p, coeff_exp)};
}

std::string ExponentVariable::str() const {
    std::string out = "u = ";
    if (scale != 1) out += std::to_string(scale);
    out += "s";
    if (shift > 0) out += "+" + std::to_string(shift);
    if (shift < 0) out += std::to_string(shift);
    return out;
}

}  // namespace gl3recip
