#include "gl3recip/suites.hpp"

#include "gl3recip/identities.hpp"
#include "gl3recip/numeric.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <memory>
#include <sstream>

namespace gl3recip {

namespace {

[[noreturn]] void usage(const std::string& msg) { fail(ErrorCode::usage, msg); }

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(trim(cur));
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

std::optional<double> to_real(const std::string& s) {
    if (s.empty()) return std::nullopt;
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size() || !std::isfinite(v)) return std::nullopt;
    return v;
}

// "x", "yi", "x+yi", "x-yi"; "i" and "-i" stand for +-1i.
std::optional<Complex> to_complex_token(const std::string& s) {
    if (s.empty()) return std::nullopt;
    if (s.back() != 'i') {
        const auto r = to_real(s);
        return r ? std::optional<Complex>(*r) : std::nullopt;
    }
    const std::string body = s.substr(0, s.size() - 1);
    std::size_t split_at = std::string::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            split_at = k;
            break;
        }
    }
    auto imag_part = [](const std::string& t) -> std::optional<double> {
        if (t.empty() || t == "+") return 1.0;
        if (t == "-") return -1.0;
        return to_real(t);
    };
    if (split_at == std::string::npos) {
        const auto im = imag_part(body);
        return im ? std::optional<Complex>(Complex(0.0, *im)) : std::nullopt;
    }
    const auto re = to_real(body.substr(0, split_at));
    const auto im = imag_part(body.substr(split_at));
    if (!re || !im) return std::nullopt;
    return Complex(*re, *im);
}

const AlphaTriple kAlphaZero{0.0, 0.0, 0.0};
const AlphaTriple kAlphaTwist{Complex(0, 0.3), Complex(0, -0.1), Complex(0, -0.2)};

struct Point {
    Complex s, s0;
};
const std::vector<Point> kDefaultPoints{{2.2, 2.1}, {2.5, 2.0}};

using Task = std::function<std::vector<CheckReport>()>;

// Integer list from a / a-max style keys.
std::vector<std::int64_t> index_list(const RunConfig& cfg, const std::string& single, const std::string& max_key,
                                     std::vector<std::int64_t> fallback) {
    if (auto v = cfg.integer(single)) {
        if (*v < 1) usage(fmt::format("--{} must be >= 1", single));
        return {*v};
    }
    if (auto m = cfg.integer(max_key)) {
        if (*m < 1) usage(fmt::format("--{} must be >= 1", max_key));
        std::vector<std::int64_t> out;
        for (std::int64_t k = 1; k <= *m; ++k) out.push_back(k);
        return out;
    }
    return fallback;
}

std::vector<std::int64_t> range(std::int64_t lo, std::int64_t hi) {
    std::vector<std::int64_t> out;
    for (std::int64_t k = lo; k <= hi; ++k) out.push_back(k);
    return out;
}

std::vector<std::int64_t> prime_list(const RunConfig& cfg, std::vector<std::int64_t> fallback, std::int64_t min_p) {
    if (auto p = cfg.integer("p")) {
        if (*p < min_p || !arith::is_prime(*p)) usage(fmt::format("--p {} is not a prime >= {}", *p, min_p));
        return {*p};
    }
    return fallback;
}

std::vector<int> sign_list(const RunConfig& cfg) {
    if (auto s = cfg.sign("sign")) return {*s};
    return {1, -1};
}

std::vector<AlphaTriple> alpha_list(const RunConfig& cfg, bool zero_sum) {
    if (auto a = cfg.alpha("alpha")) {
        if (zero_sum && std::abs((*a)[0] + (*a)[1] + (*a)[2]) > 1e-12) usage("--alpha must sum to zero");
        return {*a};
    }
    return {kAlphaZero, kAlphaTwist};
}

std::vector<Point> point_list(const RunConfig& cfg) {
    const auto s = cfg.complex("s");
    const auto s0 = cfg.complex("s0");
    if (!s && !s0) return kDefaultPoints;
    return {{s.value_or(kDefaultPoints[0].s), s0.value_or(kDefaultPoints[0].s0)}};
}

double tol_or(const RunConfig& cfg, const std::string& key, double fallback) {
    if (auto t = cfg.real(key)) {
        if (!(*t >= 0.0)) usage(fmt::format("--{} must be non-negative", key));
        return *t;
    }
    return fallback;
}

std::int64_t positive_or(const RunConfig& cfg, const std::string& key, std::int64_t fallback) {
    if (auto v = cfg.integer(key)) {
        if (*v < 1) usage(fmt::format("--{} must be >= 1", key));
        return *v;
    }
    return fallback;
}

void region(const char* what, Complex z, double margin) {
    if (!(z.real() >= margin)) {
        usage(fmt::format("{}: real part {} is below the convergence margin {}", what, format_real(z.real()),
                          format_real(margin)));
    }
}

// --- suite planners ---

std::vector<Task> plan_diagonal(const RunConfig& cfg) {
    const auto as = index_list(cfg, "a", "a-max", range(1, 200));
    const std::int64_t h = positive_or(cfg, "height", 10);
    const std::int64_t n_max = std::max(*std::max_element(as.begin(), as.end()), h);
    auto table = std::make_shared<std::optional<SymbolicTable>>();
    std::vector<Task> tasks;
    for (std::int64_t a : as) {
        tasks.push_back([=] {
            if (!*table) table->emplace(SymbolicProvider{}, n_max);
            return std::vector<CheckReport>{check_diagonal(**table, a, h)};
        });
    }
    return tasks;
}

std::vector<Task> plan_offdiag(const RunConfig& cfg) {
    const auto as = index_list(cfg, "a", "a-max", range(1, 60));
    const std::int64_t h = positive_or(cfg, "height", 10);
    const auto fixed = cfg.integer("cutoff");
    std::int64_t n_max = 1;
    for (std::int64_t a : as) {
        const std::int64_t a1 = fixed ? *fixed : h * a * a;
        if (a1 < h * a * a) usage(fmt::format("offdiag: cutoff {} is below H a^2 = {} for a = {}", a1, h * a * a, a));
        n_max = std::max({n_max, a1, a});
    }
    auto table = std::make_shared<std::optional<SymbolicTable>>();
    std::vector<Task> tasks;
    for (std::int64_t a : as) {
        const std::int64_t a1 = fixed ? *fixed : h * a * a;
        tasks.push_back([=] {
            if (!*table) table->emplace(SymbolicProvider{}, n_max);
            return std::vector<CheckReport>{check_offdiag_residue(**table, a, a1, h)};
        });
    }
    return tasks;
}

std::vector<Task> plan_ramanujan(const RunConfig& cfg) {
    const auto a1s = index_list(cfg, "a", "a-max", range(1, 20));
    std::vector<Complex> zs{2.0, 2.5, Complex(3, 1), Complex(3, -1)};
    if (auto z = cfg.complex("s")) zs = {*z};
    for (Complex z : zs) region("ramanujan (z)", z, 1.8);
    const std::int64_t d = positive_or(cfg, "cutoff", 200000);
    const double tol = tol_or(cfg, "tol", 1e-6);
    std::vector<Task> tasks;
    for (Complex z : zs)
        for (std::int64_t a1 : a1s) tasks.push_back([=] { return std::vector<CheckReport>{check_ramanujan_generating(a1, z, d, tol)}; });
    return tasks;
}

std::vector<Task> plan_decomposition(const RunConfig& cfg) {
    std::vector<std::int64_t> as{1, 2, 3, 4, 6, 12};
    if (auto a = cfg.integer("a")) {
        if (*a < 1) usage("--a must be >= 1");
        as = {*a};
    }
    const auto points = point_list(cfg);
    for (const auto& pt : points) {
        region("decomposition (2s - s0)", 2.0 * pt.s - pt.s0, 1.5);
        region("decomposition (s0)", pt.s0, 1.5);
    }
    DecompositionOptions opts;
    opts.a1_cutoff = positive_or(cfg, "a1", positive_or(cfg, "cutoff", opts.a1_cutoff));
    opts.a0_cutoff = positive_or(cfg, "a0", cfg.has("a1") || cfg.has("cutoff") ? 5 * opts.a1_cutoff : opts.a0_cutoff);
    opts.tol = tol_or(cfg, "tol", opts.tol);
    const auto signs = sign_list(cfg);
    std::vector<Task> tasks;
    for (const auto& alpha : alpha_list(cfg, true)) {
        for (const auto& pt : points) {
            tasks.push_back([=] {
                const TwistedSeriesWorkspace ws(EisensteinProvider(alpha), pt.s, pt.s0, 2 * opts.a0_cutoff,
                                                2 * opts.a1_cutoff);
                std::vector<CheckReport> out;
                for (std::int64_t a : as)
                    for (int sign : signs) out.push_back(check_twisted_decomposition(ws, alpha, a, sign, opts));
                return out;
            });
        }
    }
    return tasks;
}

std::vector<Task> plan_residue(const RunConfig& cfg) {
    std::vector<std::int64_t> as{1, 2, 6};
    if (auto a = cfg.integer("a")) {
        if (*a < 1) usage("--a must be >= 1");
        as = {*a};
    }
    const Complex s = cfg.complex("s").value_or(2.0);
    region("residue (s)", s, 1.5);
    ResidueOptions opts;
    opts.tol = tol_or(cfg, "tol", opts.tol);
    opts.series_tol = tol_or(cfg, "series-tol", opts.series_tol);
    opts.sign_tol = tol_or(cfg, "sign-tol", opts.sign_tol);
    std::vector<Task> tasks;
    for (const auto& alpha : alpha_list(cfg, false))
        for (std::int64_t a : as)
            for (int sign : sign_list(cfg))
                tasks.push_back([=] { return std::vector<CheckReport>{check_residue_numeric(a, s, sign, alpha, opts)}; });
    return tasks;
}

std::vector<Task> plan_prime_dual(const RunConfig& cfg) {
    const auto ps = prime_list(cfg, {3, 5, 7, 11, 13}, 3);
    const auto points = point_list(cfg);
    for (const auto& pt : points) {
        region("prime-dual (2s - s0)", 2.0 * pt.s - pt.s0, 1.5);
        region("prime-dual (s0)", pt.s0, 1.5);
    }
    const double tol = tol_or(cfg, "tol", 1e-5);
    std::vector<Task> tasks;
    for (const auto& alpha : alpha_list(cfg, true))
        for (std::int64_t p : ps)
            for (const auto& pt : points)
                for (int sign : sign_list(cfg))
                    tasks.push_back(
                        [=] { return std::vector<CheckReport>{check_prime_dual(p, pt.s0, pt.s, sign, alpha, tol)}; });
    return tasks;
}

std::vector<Task> plan_gauss(const RunConfig& cfg) {
    std::vector<std::int64_t> moduli;
    for (std::int64_t p = 2; p <= 50; ++p)
        if (arith::is_prime(p)) moduli.push_back(p);
    moduli = prime_list(cfg, moduli, 2);
    const auto twist = prime_list(cfg, {3, 5, 7, 11, 13}, 2);
    const double tol = tol_or(cfg, "tol", 1e-11);
    const double twist_tol = tol_or(cfg, "tol", 1e-10);
    const double principal_tol = tol_or(cfg, "principal-tol", 1e-13);
    const auto n_max = cfg.integer("cutoff");
    if (n_max && *n_max < 1) usage("--cutoff must be >= 1");
    std::vector<Task> tasks;
    for (std::int64_t p : moduli)
        tasks.push_back([=] { return std::vector<CheckReport>{check_gauss_modulus(p, tol, principal_tol)}; });
    for (std::int64_t p : twist)
        for (int sign : sign_list(cfg))
            tasks.push_back(
                [=] { return std::vector<CheckReport>{check_gauss_twist(p, n_max.value_or(2 * p), sign, twist_tol)}; });
    return tasks;
}

std::vector<Task> plan_funceq(const RunConfig& cfg) {
    const auto ps = prime_list(cfg, {5, 7}, 3);
    std::vector<Complex> s0s{Complex(0.5, 1.0), Complex(0.5, 2.0)};
    if (auto s0 = cfg.complex("s0")) {
        if (s0->real() <= 0.0 || s0->real() >= 1.0) usage("funceq: --s0 must have real part strictly between 0 and 1");
        s0s = {*s0};
    }
    const double tol = tol_or(cfg, "tol", 1e-7);
    std::vector<Task> tasks;
    for (std::int64_t p : ps)
        for (Complex s0 : s0s)
            tasks.push_back([=] { return std::vector<CheckReport>{check_dirichlet_functional_eq(p, s0, tol)}; });
    return tasks;
}

std::vector<Task> plan_conjecture(const RunConfig& cfg) {
    const auto as = index_list(cfg, "a", "a-max", range(1, 30));
    const double tol = tol_or(cfg, "tol", 1e-10);
    std::vector<Task> tasks;
    for (const auto& alpha : alpha_list(cfg, true))
        for (std::int64_t a : as)
            tasks.push_back([=] { return std::vector<CheckReport>{check_conjecture_factor(a, alpha, tol)}; });
    return tasks;
}

std::vector<Task> plan_properties(const RunConfig& cfg) {
    const auto ps = prime_list(cfg, {3, 5, 7, 11, 13}, 3);
    const auto tol = cfg.real("tol");
    auto pick = [&](double fallback) { return tol.value_or(fallback); };
    const double t_orth = pick(1e-10), t_hur = pick(1e-9), t_rec = pick(1e-12), t_ram = pick(1e-9), t_sym = pick(1e-9),
                 t_layer = pick(1e-10), t_eis = pick(1e-6);
    std::vector<Task> tasks;
    for (std::int64_t p : ps) {
        tasks.push_back([=] { return std::vector<CheckReport>{check_orthogonality(p, t_orth)}; });
        tasks.push_back([=] { return std::vector<CheckReport>{check_hurwitz_decomposition(p, t_hur)}; });
    }
    for (const auto& alpha : {kAlphaZero, kAlphaTwist}) {
        tasks.push_back([=] { return std::vector<CheckReport>{check_hecke_recurrence(alpha, t_rec)}; });
    }
    tasks.push_back([] { return std::vector<CheckReport>{check_mobius_sum(10000)}; });
    tasks.push_back([=] { return std::vector<CheckReport>{check_ramanujan_bruteforce(200, t_ram)}; });
    tasks.push_back([=] { return std::vector<CheckReport>{check_symbolic_specialization(50, t_sym)}; });
    for (const auto& alpha : {kAlphaZero, kAlphaTwist})
        for (std::int64_t a = 1; a <= 30; ++a)
            tasks.push_back([=] { return std::vector<CheckReport>{check_layer_consistency(a, alpha, 10, t_layer)}; });
    for (std::int64_t p : {5, 7})
        tasks.push_back([=] { return std::vector<CheckReport>{check_eisenstein_character_L(p, 3.0, 20000, t_eis)}; });
    return tasks;
}

using Planner = std::vector<Task> (*)(const RunConfig&);

const std::vector<std::pair<std::string, Planner>>& planners() {
    static const std::vector<std::pair<std::string, Planner>> table{
        {"diagonal", plan_diagonal},         {"offdiag", plan_offdiag},
        {"ramanujan", plan_ramanujan},       {"decomposition", plan_decomposition},
        {"residue", plan_residue},           {"prime-dual", plan_prime_dual},
        {"gauss", plan_gauss},               {"funceq", plan_funceq},
        {"conjecture-factor", plan_conjecture}, {"properties", plan_properties},
    };
    return table;
}

std::string shortest(double x) {
    if (x == 0.0) return "0";
    return fmt::format("{}", x);
}

std::string shortest(Complex z) {
    if (z.imag() == 0.0) return shortest(z.real());
    const std::string im = shortest(std::abs(z.imag())) + "i";
    if (z.real() == 0.0) return (z.imag() < 0 ? "-" : "") + im;
    return shortest(z.real()) + (z.imag() < 0 ? "-" : "+") + im;
}

template <class T>
T required(const std::optional<T>& v, const std::string& fn, const std::string& key) {
    if (!v) usage(fmt::format("eval {}: --{} is required", fn, key));
    return *v;
}

}  // namespace

// --- RunConfig ---

const std::vector<std::string>& RunConfig::known_keys() {
    static const std::vector<std::string> keys{"a",   "a-max",    "p",   "alpha",     "s",         "s0",
                                               "sign", "height",  "cutoff", "a0",     "a1",        "tol",
                                               "series-tol", "sign-tol", "principal-tol", "j", "n", "d",
                                               "m1",  "m2",       "symbolic"};
    return keys;
}

void RunConfig::set(const std::string& key, const std::string& value) {
    const auto& keys = known_keys();
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) usage(fmt::format("unknown parameter '{}'", key));
    values_[key] = trim(value);
}

void RunConfig::load_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos) usage(fmt::format("config line {}: expected 'key = value'", lineno));
        set(trim(t.substr(0, eq)), t.substr(eq + 1));
    }
}

void RunConfig::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) usage(fmt::format("cannot read config file '{}'", path));
    std::stringstream buf;
    buf << in.rdbuf();
    load_text(buf.str());
}

const std::string& RunConfig::raw(const std::string& key) const {
    const auto it = values_.find(key);
    if (it == values_.end()) usage(fmt::format("parameter '{}' is not set", key));
    return it->second;
}

std::optional<std::int64_t> RunConfig::integer(const std::string& key) const {
    if (!has(key)) return std::nullopt;
    const auto& s = raw(key);
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) usage(fmt::format("--{}: '{}' is not an integer", key, s));
    return v;
}

std::optional<double> RunConfig::real(const std::string& key) const {
    if (!has(key)) return std::nullopt;
    const auto v = to_real(raw(key));
    if (!v) usage(fmt::format("--{}: '{}' is not a real number", key, raw(key)));
    return v;
}

std::optional<Complex> RunConfig::complex(const std::string& key) const {
    if (!has(key)) return std::nullopt;
    try {
        return parse_complex(raw(key));
    } catch (const Error&) {
        usage(fmt::format("--{}: '{}' is not a complex number (re,im or x+yi)", key, raw(key)));
    }
}

std::optional<AlphaTriple> RunConfig::alpha(const std::string& key) const {
    if (!has(key)) return std::nullopt;
    return parse_alpha(raw(key));
}

std::optional<int> RunConfig::sign(const std::string& key) const {
    if (!has(key)) return std::nullopt;
    const auto& s = raw(key);
    if (s == "+" || s == "+1" || s == "1") return 1;
    if (s == "-" || s == "-1") return -1;
    if (s == "both" || s == "+-" || s == "±") return std::nullopt;
    usage(fmt::format("--{}: expected +, - or both, got '{}'", key, s));
}

bool RunConfig::flag(const std::string& key) const {
    if (!has(key)) return false;
    const auto& s = raw(key);
    if (s.empty() || s == "1" || s == "true" || s == "yes" || s == "on") return true;
    if (s == "0" || s == "false" || s == "no" || s == "off") return false;
    usage(fmt::format("--{}: expected a boolean, got '{}'", key, s));
}

Complex parse_complex(const std::string& text) {
    const auto parts = split(text, ',');
    if (parts.size() == 2) {
        const auto re = to_real(parts[0]), im = to_real(parts[1]);
        if (re && im) return {*re, *im};
    } else if (parts.size() == 1) {
        if (auto z = to_complex_token(parts[0])) return *z;
    }
    usage(fmt::format("'{}' is not a complex number (re,im or x+yi)", text));
}

AlphaTriple parse_alpha(const std::string& text) {
    const auto parts = split(text, ',');
    if (parts.size() != 3) usage(fmt::format("alpha '{}' must have three comma-separated entries", text));
    AlphaTriple out;
    for (int i = 0; i < 3; ++i) {
        const auto z = to_complex_token(parts[i]);
        if (!z) usage(fmt::format("alpha entry '{}' is not a number like 0.3, 0.3i or 0.1-0.2i", parts[i]));
        out[i] = *z;
    }
    return out;
}

// --- suites ---

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out{"all"};
        for (const auto& [name, planner] : planners()) out.push_back(name);
        return out;
    }();
    return names;
}

std::vector<CheckReport> run_suite(const std::string& suite, const RunConfig& config) {
    std::vector<Task> tasks;
    bool found = false;
    try {
        for (const auto& [name, planner] : planners()) {
            if (suite != "all" && suite != name) continue;
            found = true;
            auto planned = planner(config);
            tasks.insert(tasks.end(), std::make_move_iterator(planned.begin()), std::make_move_iterator(planned.end()));
        }
    } catch (const Error& e) {
        if (e.code() == ErrorCode::usage) throw;
        usage(e.what());
    }
    if (!found) usage(fmt::format("unknown suite '{}'", suite));

    std::vector<CheckReport> reports;
    for (const auto& task : tasks) {
        auto out = task();
        reports.insert(reports.end(), std::make_move_iterator(out.begin()), std::make_move_iterator(out.end()));
    }
    std::stable_sort(reports.begin(), reports.end(),
                     [](const CheckReport& x, const CheckReport& y) { return x.sort_key() < y.sort_key(); });
    return reports;
}

// --- eval ---

const std::vector<std::string>& eval_function_names() {
    static const std::vector<std::string> names{"hurwitz",    "dirichlet-l", "gauss-sum", "ramanujan",
                                                "hecke-coeff", "tau-alpha",   "gamma-r"};
    return names;
}

std::string eval_function(const std::string& fn, const RunConfig& cfg) {
    if (fn == "hurwitz") {
        const Complex s = required(cfg.complex("s"), fn, "s");
        const double a = required(cfg.real("a"), fn, "a");
        return shortest(hurwitz_zeta(s, a));
    }
    if (fn == "dirichlet-l" || fn == "gauss-sum") {
        const std::int64_t p = required(cfg.integer("p"), fn, "p");
        const std::int64_t j = required(cfg.integer("j"), fn, "j");
        const DirichletCharacter chi(p, j);
        if (fn == "gauss-sum") return shortest(gauss_sum(chi));
        return shortest(dirichlet_L(required(cfg.complex("s"), fn, "s"), chi));
    }
    if (fn == "ramanujan") {
        const std::int64_t n = required(cfg.integer("n"), fn, "n");
        const std::int64_t d = required(cfg.integer("d"), fn, "d");
        return std::to_string(arith::ramanujan_sum(n, d));
    }
    if (fn == "hecke-coeff") {
        const std::int64_t m1 = required(cfg.integer("m1"), fn, "m1");
        const std::int64_t m2 = required(cfg.integer("m2"), fn, "m2");
        if (cfg.flag("symbolic")) return fourier_coefficient(SymbolicProvider{}, m1, m2).str();
        const auto prov = EisensteinProvider(cfg.alpha("alpha").value_or(kAlphaZero));
        return shortest(fourier_coefficient(prov, m1, m2));
    }
    if (fn == "tau-alpha") {
        const AlphaTriple alpha = required(cfg.alpha("alpha"), fn, "alpha");
        return shortest(tau_alpha(alpha, required(cfg.integer("n"), fn, "n")));
    }
    if (fn == "gamma-r") return shortest(gamma_R(required(cfg.complex("s"), fn, "s")));
    usage(fmt::format("unknown function '{}'", fn));
}

}  // namespace gl3recip
