#include "gl3recip/gl3recip.h"

#include "gl3recip/suites.hpp"

#include <cstdlib>
#include <cstring>
#include <new>

using namespace gl3recip;

struct g3r_config {
    RunConfig config;
};

struct g3r_result {
    std::vector<CheckReport> reports;
    std::string json;
    std::string text;
    std::string summary;
};

namespace {

thread_local std::string last_error;

g3r_status to_status(ErrorCode code) {
    switch (code) {
        case ErrorCode::usage: return G3R_E_USAGE;
        case ErrorCode::invalid_argument: return G3R_E_INVALID;
        case ErrorCode::domain: return G3R_E_DOMAIN;
        case ErrorCode::region: return G3R_E_REGION;
        case ErrorCode::completeness: return G3R_E_COMPLETENESS;
        case ErrorCode::convergence: return G3R_E_CONVERGENCE;
    }
    return G3R_E_INTERNAL;
}

template <class F>
g3r_status guarded(F&& f) {
    last_error.clear();
    try {
        f();
        return G3R_OK;
    } catch (const Error& e) {
        last_error = e.what();
        return to_status(e.code());
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
    } catch (const std::exception& e) {
        last_error = e.what();
    } catch (...) {
        last_error = "unknown error";
    }
    return G3R_E_INTERNAL;
}

g3r_status null_arg(const char* what) {
    last_error = std::string(what) + " must not be null";
    return G3R_E_INVALID;
}

}  // namespace

extern "C" {

const char* g3r_version(void) { return "0.1.0"; }

const char* g3r_status_name(g3r_status status) {
    switch (status) {
        case G3R_OK: return "ok";
        case G3R_E_USAGE: return "usage";
        case G3R_E_INVALID: return "invalid-argument";
        case G3R_E_DOMAIN: return "domain";
        case G3R_E_REGION: return "region";
        case G3R_E_COMPLETENESS: return "completeness";
        case G3R_E_CONVERGENCE: return "convergence";
        case G3R_E_INTERNAL: return "internal";
    }
    return "unknown";
}

const char* g3r_last_error(void) { return last_error.c_str(); }

g3r_status g3r_config_new(g3r_config** out) {
    if (!out) return null_arg("out");
    return guarded([&] { *out = new g3r_config; });
}

void g3r_config_free(g3r_config* config) { delete config; }

g3r_status g3r_config_set(g3r_config* config, const char* key, const char* value) {
    if (!config || !key || !value) return null_arg("config, key and value");
    return guarded([&] { config->config.set(key, value); });
}

g3r_status g3r_config_load_file(g3r_config* config, const char* path) {
    if (!config || !path) return null_arg("config and path");
    return guarded([&] { config->config.load_file(path); });
}

size_t g3r_suite_count(void) { return suite_names().size(); }

const char* g3r_suite_name(size_t index) {
    const auto& names = suite_names();
    return index < names.size() ? names[index].c_str() : nullptr;
}

g3r_status g3r_verify(const g3r_config* config, const char* suite, g3r_result** out) {
    if (!config || !suite || !out) return null_arg("config, suite and out");
    *out = nullptr;
    return guarded([&] {
        auto result = std::make_unique<g3r_result>();
        result->reports = run_suite(suite, config->config);
        result->json = reports_to_json(result->reports);
        result->text = reports_to_text(result->reports);
        result->summary = summary_footer(result->reports);
        *out = result.release();
    });
}

void g3r_result_free(g3r_result* result) { delete result; }

size_t g3r_result_count(const g3r_result* result) { return result ? result->reports.size() : 0; }

size_t g3r_result_passed(const g3r_result* result) {
    if (!result) return 0;
    size_t n = 0;
    for (const auto& r : result->reports) n += r.pass ? 1 : 0;
    return n;
}

int g3r_result_all_pass(const g3r_result* result) {
    return result && !result->reports.empty() && g3r_result_passed(result) == result->reports.size();
}

const char* g3r_result_json(const g3r_result* result) { return result ? result->json.c_str() : ""; }
const char* g3r_result_text(const g3r_result* result) { return result ? result->text.c_str() : ""; }
const char* g3r_result_summary(const g3r_result* result) { return result ? result->summary.c_str() : ""; }

g3r_status g3r_eval(const g3r_config* config, const char* function, char** out) {
    if (!config || !function || !out) return null_arg("config, function and out");
    *out = nullptr;
    return guarded([&] {
        const std::string value = eval_function(function, config->config);
        char* buf = static_cast<char*>(std::malloc(value.size() + 1));
        if (!buf) throw std::bad_alloc();
        std::memcpy(buf, value.c_str(), value.size() + 1);
        *out = buf;
    });
}

void g3r_string_free(char* s) { std::free(s); }

}  // extern "C"
