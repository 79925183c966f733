#include "gl3recip/report.hpp"

#include "gl3recip/ring.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace gl3recip {

std::string format_real(double x) {
    if (x == 0.0) return "0";  // also folds -0
    return fmt::format("{:.15g}", x);
}

std::string format_complex(std::complex<double> z) {
    if (z.imag() == 0.0) return format_real(z.real());
    const std::string im = format_real(std::abs(z.imag())) + "i";
    if (z.real() == 0.0) return (z.imag() < 0 ? "-" : "") + im;
    return format_real(z.real()) + (z.imag() < 0 ? "-" : "+") + im;
}

double round_report(double x) {
    if (!std::isfinite(x)) return x;
    return std::strtod(fmt::format("{:.15g}", x).c_str(), nullptr);
}

double relative_error(std::complex<double> x, std::complex<double> y, double floor) {
    return std::abs(x - y) / std::max(std::abs(y), floor);
}

bool CheckItem::passed() const {
    if (error) return std::isfinite(*error) && *error <= tolerance;
    return exact;
}

void CheckReport::add_numeric(std::string key, double error, double tolerance) {
    items.push_back({std::move(key), error, false, tolerance});
}

void CheckReport::add_exact(std::string key, bool matched) {
    items.push_back({std::move(key), std::nullopt, matched, 0.0});
}

void CheckReport::finalize() {
    max_error = 0.0;
    pass = true;
    for (const auto& item : items) {
        if (item.error) {
            // NaN propagates as failure; the reported maximum stays finite for JSON.
            max_error = std::isfinite(*item.error) ? std::max(max_error, *item.error) : max_error;
        }
        pass = pass && item.passed();
    }
    if (items.empty()) pass = false;
}

nlohmann::ordered_json CheckReport::to_json() const {
    nlohmann::ordered_json out;
    out["identity"] = identity;
    out["params"] = params;
    out["mode"] = mode == CheckMode::symbolic ? "symbolic" : "numeric";
    auto arr = nlohmann::ordered_json::array();
    for (const auto& item : items) {
        nlohmann::ordered_json j;
        j["key"] = item.key;
        if (item.error && std::isfinite(*item.error)) {
            j["error"] = round_report(*item.error);
        } else {
            j["error"] = nullptr;
        }
        j["exact"] = item.exact;
        arr.push_back(std::move(j));
    }
    out["items"] = std::move(arr);
    out["max_error"] = round_report(max_error);
    out["pass"] = pass;
    out["substitution"] = substitution;
    return out;
}

std::string CheckReport::summary_line() const {
    std::size_t failed = 0;
    for (const auto& item : items) failed += item.passed() ? 0 : 1;
    std::string line = fmt::format("{} {} {}", pass ? "ok  " : "FAIL", identity, params.dump());
    if (mode == CheckMode::numeric) line += " max_error=" + format_real(max_error);
    line += fmt::format(" items={}", items.size());
    if (failed) line += fmt::format(" failed={}", failed);
    return line;
}

std::string CheckReport::sort_key() const {
    // Integers are zero-padded so a=2 sorts before a=10.
    std::string key = identity;
    for (const auto& [name, value] : params.items()) {
        key += '\x1f' + name + '=';
        if (value.is_number_integer()) {
            const auto v = value.get<std::int64_t>();
            key += fmt::format("{}{:019d}", v < 0 ? '-' : '0', v < 0 ? -v : v);
        } else {
            key += value.dump();
        }
    }
    return key;
}

std::string reports_to_json(const std::vector<CheckReport>& reports) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) arr.push_back(r.to_json());
    return arr.dump(2) + "\n";
}

std::string summary_footer(const std::vector<CheckReport>& reports) {
    const auto passed = static_cast<std::size_t>(
        std::count_if(reports.begin(), reports.end(), [](const CheckReport& r) { return r.pass; }));
    const bool all = passed == reports.size() && !reports.empty();
    return fmt::format("{} {}/{}", all ? "PASS" : "FAIL", passed, reports.size());
}

std::string reports_to_text(const std::vector<CheckReport>& reports) {
    std::string out;
    for (const auto& r : reports) {
        out += r.summary_line();
        out += '\n';
        if (!r.pass) {
            for (const auto& item : r.items) {
                if (item.passed()) continue;
                out += "    " + item.key;
                if (item.error) out += " error=" + format_real(*item.error) + " tol=" + format_real(item.tolerance);
                else out += " mismatch";
                out += '\n';
            }
        }
    }
    out += summary_footer(reports);
    out += '\n';
    return out;
}

}  // namespace gl3recip
