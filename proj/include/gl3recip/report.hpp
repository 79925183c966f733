#pragma once

#include <json.hpp>

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace gl3recip {

enum class CheckMode { symbolic, numeric };

/// One compared quantity. Numeric items carry a relative or absolute error checked
/// against `tolerance`; symbolic items carry only the exact-match flag.
struct CheckItem {
    std::string key;
    std::optional<double> error;
    bool exact = false;
    double tolerance = 0.0;  // not serialized; recorded per report under params.tolerances

    bool passed() const;
};

struct CheckReport {
    std::string identity;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    CheckMode mode = CheckMode::numeric;
    std::vector<CheckItem> items;
    double max_error = 0.0;
    bool pass = false;
    std::string substitution;

    void add_numeric(std::string key, double error, double tolerance);
    void add_exact(std::string key, bool matched);
    /// Recomputes max_error and pass from the items.
    void finalize();

    nlohmann::ordered_json to_json() const;
    std::string summary_line() const;
    /// Sort key used to merge suite output deterministically.
    std::string sort_key() const;
};

/// Relative error |x - y| / max(|y|, floor), with floor guarding exact zeros.
double relative_error(std::complex<double> x, std::complex<double> y, double floor = 1e-300);

/// Rounds to 15 significant digits (the report precision).
double round_report(double x);

std::string reports_to_json(const std::vector<CheckReport>& reports);
std::string reports_to_text(const std::vector<CheckReport>& reports);
std::string summary_footer(const std::vector<CheckReport>& reports);

}  // namespace gl3recip
