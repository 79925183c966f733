#include "gl3recip/hecke_poly.hpp"

#include "gl3recip/error.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

namespace gl3recip {

Monomial Monomial::generator(Generator gen, std::int64_t p, std::uint32_t power) {
    if (p < 2 || p > static_cast<std::int64_t>(UINT32_MAX)) fail(ErrorCode::invalid_argument, "Monomial: bad prime");
    Monomial m;
    if (power > 0) m.factors_.push_back({static_cast<std::uint32_t>(p), gen, power});
    return m;
}

std::uint32_t Monomial::degree() const noexcept {
    std::uint32_t d = 0;
    for (const auto& f : factors_) d += f.power;
    return d;
}

namespace {

auto factor_key(const Monomial::Factor& f) { return std::make_tuple(f.prime, static_cast<int>(f.gen)); }

}  // namespace

Monomial operator*(const Monomial& x, const Monomial& y) {
    Monomial out;
    auto& f = out.factors_;
    f.reserve(x.factors_.size() + y.factors_.size());
    auto i = x.factors_.begin();
    auto j = y.factors_.begin();
    while (i != x.factors_.end() && j != y.factors_.end()) {
        if (factor_key(*i) < factor_key(*j)) {
            f.push_back(*i++);
        } else if (factor_key(*j) < factor_key(*i)) {
            f.push_back(*j++);
        } else {
            f.push_back({i->prime, i->gen, i->power + j->power});
            ++i;
            ++j;
        }
    }
    f.insert(f.end(), i, x.factors_.end());
    f.insert(f.end(), j, y.factors_.end());
    return out;
}

Monomial Monomial::swapped() const {
    Monomial out = *this;
    for (auto& f : out.factors_) f.gen = f.gen == Generator::A ? Generator::B : Generator::A;
    std::sort(out.factors_.begin(), out.factors_.end(),
              [](const Factor& a, const Factor& b) { return factor_key(a) < factor_key(b); });
    return out;
}

bool operator<(const Monomial& x, const Monomial& y) {
    return std::lexicographical_compare(
        x.factors_.begin(), x.factors_.end(), y.factors_.begin(), y.factors_.end(),
        [](const Monomial::Factor& a, const Monomial::Factor& b) {
            return std::make_tuple(a.prime, static_cast<int>(a.gen), a.power) <
                   std::make_tuple(b.prime, static_cast<int>(b.gen), b.power);
        });
}

std::string Monomial::str() const {
    std::string out;
    for (const auto& f : factors_) {
        if (!out.empty()) out += '*';
        out += (f.gen == Generator::A ? 'A' : 'B');
        out += std::to_string(f.prime);
        if (f.power > 1) out += "^" + std::to_string(f.power);
    }
    return out.empty() ? "1" : out;
}

HeckePoly::HeckePoly(long c) : HeckePoly(Rational(c)) {}

HeckePoly::HeckePoly(const Rational& c) {
    if (c != 0) terms_.emplace(Monomial{}, c);
}

HeckePoly HeckePoly::generator(Generator gen, std::int64_t p) {
    HeckePoly out;
    out.terms_.emplace(Monomial::generator(gen, p), Rational(1));
    return out;
}

void HeckePoly::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

HeckePoly& HeckePoly::operator+=(const HeckePoly& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

HeckePoly& HeckePoly::operator-=(const HeckePoly& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

HeckePoly& HeckePoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_) coeff *= c;
    return *this;
}

HeckePoly operator*(const HeckePoly& x, const HeckePoly& y) {
    HeckePoly out;
    if (x.size() == 1 && x.terms_.begin()->first.is_one()) return y * x.terms_.begin()->second;
    if (y.size() == 1 && y.terms_.begin()->first.is_one()) return x * y.terms_.begin()->second;
    for (const auto& [mx, cx] : x.terms_) {
        for (const auto& [my, cy] : y.terms_) out.add_term(mx * my, cx * cy);
    }
    return out;
}

HeckePoly HeckePoly::dual() const {
    HeckePoly out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m.swapped(), c);
    return out;
}

std::complex<double> HeckePoly::evaluate(const Substitution& values) const {
    std::map<std::uint32_t, std::pair<std::complex<double>, std::complex<double>>> cache;
    std::complex<double> total = 0.0;
    for (const auto& [m, c] : terms_) {
        std::complex<double> term = c.get_d();
        for (const auto& f : m.factors()) {
            auto it = cache.find(f.prime);
            if (it == cache.end()) it = cache.emplace(f.prime, values(f.prime)).first;
            const auto& base = f.gen == Generator::A ? it->second.first : it->second.second;
            term *= std::pow(base, static_cast<int>(f.power));
        }
        total += term;
    }
    return total;
}

std::string HeckePoly::str() const {
    if (terms_.empty()) return "0";
    std::vector<const TermMap::value_type*> order;
    for (const auto& t : terms_) order.push_back(&t);
    auto key = [](const Monomial::Factor& f) {
        return std::make_tuple(f.prime, static_cast<int>(f.gen), -static_cast<std::int64_t>(f.power));
    };
    std::sort(order.begin(), order.end(), [&](const auto* a, const auto* b) {
        const auto da = a->first.degree();
        const auto db = b->first.degree();
        if (da != db) return da > db;
        const auto& fa = a->first.factors();
        const auto& fb = b->first.factors();
        return std::lexicographical_compare(fa.begin(), fa.end(), fb.begin(), fb.end(),
                                            [&](const auto& u, const auto& v) { return key(u) < key(v); });
    });
    std::string out;
    bool first = true;
    for (const auto* t : order) {
        Rational c = t->second;
        const bool negative = c < 0;
        if (negative) c = -c;
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        const bool unit = c == 1;
        if (t->first.is_one()) {
            out += c.get_str();
        } else {
            if (!unit) out += c.get_str() + "*";
            out += t->first.str();
        }
    }
    return out;
}

}  // namespace gl3recip
