// Command-line front end: `verify <suite>` and `eval <function>`.
#include "gl3recip/gl3recip.h"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Options {
    std::map<std::string, std::string> values;
    bool json = false;
    bool symbolic = false;
    std::string out;
    std::string config_path;
};

void add_value(CLI::App* app, Options& opts, const std::string& key, const std::string& help) {
    app->add_option_function<std::string>(
        "--" + key, [&opts, key](const std::string& v) { opts.values[key] = v; }, help);
}

using ConfigPtr = std::unique_ptr<g3r_config, decltype(&g3r_config_free)>;

int report_error(g3r_status status) {
    std::cerr << "error (" << g3r_status_name(status) << "): " << g3r_last_error() << '\n';
    return status == G3R_E_USAGE ? kExitUsage : kExitFail;
}

// Returns a usable config or an exit code.
int build_config(const Options& opts, ConfigPtr& cfg) {
    g3r_config* raw = nullptr;
    if (g3r_config_new(&raw) != G3R_OK) return report_error(G3R_E_INTERNAL);
    cfg.reset(raw);
    if (!opts.config_path.empty()) {
        if (auto st = g3r_config_load_file(cfg.get(), opts.config_path.c_str()); st != G3R_OK) return report_error(st);
    }
    for (const auto& [key, value] : opts.values) {
        if (auto st = g3r_config_set(cfg.get(), key.c_str(), value.c_str()); st != G3R_OK) return report_error(st);
    }
    if (opts.symbolic) g3r_config_set(cfg.get(), "symbolic", "true");
    return 0;
}

int run_verify(const std::string& suite, const Options& opts) {
    ConfigPtr cfg(nullptr, g3r_config_free);
    if (int rc = build_config(opts, cfg)) return rc;
    g3r_result* raw = nullptr;
    if (auto st = g3r_verify(cfg.get(), suite.c_str(), &raw); st != G3R_OK) return report_error(st);
    std::unique_ptr<g3r_result, decltype(&g3r_result_free)> result(raw, g3r_result_free);

    const char* body = opts.json ? g3r_result_json(result.get()) : g3r_result_text(result.get());
    if (opts.out.empty()) {
        std::cout << body;
    } else {
        std::ofstream file(opts.out, std::ios::binary);
        if (!file) {
            std::cerr << "error (usage): cannot write '" << opts.out << "'\n";
            return kExitUsage;
        }
        file << body;
        if (opts.json) file << g3r_result_summary(result.get()) << '\n';
    }
    // In JSON mode stdout stays valid JSON, so the summary goes to stderr.
    if (opts.json) std::cerr << g3r_result_summary(result.get()) << '\n';
    else if (!opts.out.empty()) std::cout << g3r_result_summary(result.get()) << '\n';
    std::cout.flush();
    return g3r_result_all_pass(result.get()) ? 0 : kExitFail;
}

int run_eval(const std::string& fn, const Options& opts) {
    ConfigPtr cfg(nullptr, g3r_config_free);
    if (int rc = build_config(opts, cfg)) return rc;
    char* value = nullptr;
    if (auto st = g3r_eval(cfg.get(), fn.c_str(), &value); st != G3R_OK) return report_error(st);
    std::cout << value << '\n';
    g3r_string_free(value);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Verify Hecke-algebra and Dirichlet-series identities for GL(3) reciprocity"};
    app.require_subcommand(1);
    Options opts;
    app.add_option("--config", opts.config_path, "Read `key = value` defaults from a file (flags override)");

    std::string suite;
    std::vector<std::string> suites;
    for (size_t i = 0; i < g3r_suite_count(); ++i) suites.emplace_back(g3r_suite_name(i));
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(suites));
    add_value(verify, opts, "a", "Single a (or a1 for ramanujan)");
    add_value(verify, opts, "a-max", "Run a = 1..N");
    add_value(verify, opts, "p", "Prime modulus");
    add_value(verify, opts, "alpha", "Spectral parameters x,y,z (entries like 0.3i)");
    add_value(verify, opts, "s", "Complex s as re,im (z for ramanujan)");
    add_value(verify, opts, "s0", "Complex s0 as re,im");
    add_value(verify, opts, "sign", "+, - or both");
    add_value(verify, opts, "height", "Base height H for symbolic suites");
    add_value(verify, opts, "cutoff", "Primary cutoff: A1 (offdiag, decomposition), D (ramanujan), n_max (gauss)");
    add_value(verify, opts, "a0", "Outer cutoff A0 for the raw double series");
    add_value(verify, opts, "a1", "Inner cutoff A1 for the raw double series");
    add_value(verify, opts, "tol", "Override the suite's main tolerance");
    add_value(verify, opts, "series-tol", "Residue series tolerance");
    add_value(verify, opts, "sign-tol", "Residue sign-independence tolerance");
    add_value(verify, opts, "principal-tol", "Tolerance for tau(chi0) = -1");
    verify->add_flag("--json", opts.json, "Emit the JSON report array (summary on stderr)");
    verify->add_option("--out", opts.out, "Write the report to PATH");

    std::string fn;
    std::vector<std::string> fns{"hurwitz", "dirichlet-l", "gauss-sum", "ramanujan", "hecke-coeff", "tau-alpha", "gamma-r"};
    auto* eval = app.add_subcommand("eval", "Evaluate a single function");
    eval->add_option("function", fn, "Function name")->required()->check(CLI::IsMember(fns));
    add_value(eval, opts, "s", "Complex argument as re,im");
    add_value(eval, opts, "a", "Hurwitz shift in (0, 1]");
    add_value(eval, opts, "p", "Prime modulus");
    add_value(eval, opts, "j", "Character index: chi(g^k) = e(jk/(p-1)) for the least primitive root g");
    add_value(eval, opts, "n", "Integer n");
    add_value(eval, opts, "d", "Modulus d");
    add_value(eval, opts, "m1", "First Fourier index");
    add_value(eval, opts, "m2", "Second Fourier index");
    add_value(eval, opts, "alpha", "Spectral parameters x,y,z");
    eval->add_flag("--symbolic", opts.symbolic, "Render the Hecke coefficient symbolically");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }
    if (verify->parsed()) return run_verify(suite, opts);
    return run_eval(fn, opts);
}
