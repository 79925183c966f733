#pragma once

#include "gl3recip/hecke.hpp"
#include "gl3recip/report.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gl3recip {

/// Run parameters as key/value strings, parsed on use. Unknown keys and malformed values raise
/// ErrorCode::usage.
class RunConfig {
public:
    static const std::vector<std::string>& known_keys();

    void set(const std::string& key, const std::string& value);
    /// `key = value` lines; blank lines and lines starting with '#' are skipped.
    void load_text(const std::string& text);
    void load_file(const std::string& path);

    bool has(const std::string& key) const { return values_.count(key) != 0; }
    const std::string& raw(const std::string& key) const;

    std::optional<std::int64_t> integer(const std::string& key) const;
    std::optional<double> real(const std::string& key) const;
    std::optional<Complex> complex(const std::string& key) const;
    std::optional<AlphaTriple> alpha(const std::string& key) const;
    std::optional<int> sign(const std::string& key) const;
    bool flag(const std::string& key) const;

private:
    std::map<std::string, std::string> values_;
};

Complex parse_complex(const std::string& text);
AlphaTriple parse_alpha(const std::string& text);

const std::vector<std::string>& suite_names();

/// Runs one suite ("all" runs every suite, "properties" the property checks). Parameters are
/// validated before any check runs; reports come back sorted by CheckReport::sort_key.
std::vector<CheckReport> run_suite(const std::string& suite, const RunConfig& config);

const std::vector<std::string>& eval_function_names();

/// Evaluates one function for `eval`; values print as the shortest round-trip decimal.
std::string eval_function(const std::string& fn, const RunConfig& config);

}  // namespace gl3recip
