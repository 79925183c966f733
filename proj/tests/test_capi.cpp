#include <doctest.h>

#include "gl3recip/gl3recip.h"

#include <json.hpp>

#include <memory>
#include <string>

namespace {

struct Config {
    g3r_config* ptr = nullptr;
    Config() { REQUIRE(g3r_config_new(&ptr) == G3R_OK); }
    ~Config() { g3r_config_free(ptr); }
};

struct Result {
    g3r_result* ptr = nullptr;
    ~Result() { g3r_result_free(ptr); }
};

std::string eval(const char* fn, std::initializer_list<std::pair<const char*, const char*>> args, g3r_status* st) {
    Config cfg;
    for (const auto& [k, v] : args) REQUIRE(g3r_config_set(cfg.ptr, k, v) == G3R_OK);
    char* out = nullptr;
    *st = g3r_eval(cfg.ptr, fn, &out);
    std::string value = out ? out : "";
    g3r_string_free(out);
    return value;
}

}  // namespace

TEST_CASE("configuration keys are validated") {
    Config cfg;
    CHECK(g3r_config_set(cfg.ptr, "p", "5") == G3R_OK);
    CHECK(std::string(g3r_last_error()).empty());
    CHECK(g3r_config_set(cfg.ptr, "bogus", "1") == G3R_E_USAGE);
    CHECK(std::string(g3r_last_error()).find("bogus") != std::string::npos);
    CHECK(g3r_config_set(nullptr, "p", "5") == G3R_E_INVALID);
    CHECK(g3r_config_load_file(cfg.ptr, "/nonexistent/config") == G3R_E_USAGE);
    CHECK(std::string(g3r_status_name(G3R_E_DOMAIN)) == "domain");
    CHECK(g3r_suite_count() == 11);
    CHECK(std::string(g3r_suite_name(0)) == "all");
    CHECK(g3r_suite_name(99) == nullptr);
}

TEST_CASE("verify through the C interface") {
    Config cfg;
    REQUIRE(g3r_config_set(cfg.ptr, "p", "7") == G3R_OK);
    Result res;
    REQUIRE(g3r_verify(cfg.ptr, "funceq", &res.ptr) == G3R_OK);
    CHECK(g3r_result_count(res.ptr) == 2);
    CHECK(g3r_result_passed(res.ptr) == 2);
    CHECK(g3r_result_all_pass(res.ptr) == 1);
    CHECK(std::string(g3r_result_summary(res.ptr)) == "PASS 2/2");
    const auto json = nlohmann::json::parse(g3r_result_json(res.ptr));
    REQUIRE(json.is_array());
    CHECK(json[0]["identity"] == "functional-equation");
    const std::string text = g3r_result_text(res.ptr);
    CHECK(text.substr(text.size() - 9) == "PASS 2/2\n");
}

TEST_CASE("verify reports failures and usage errors") {
    {
        Config cfg;
        REQUIRE(g3r_config_set(cfg.ptr, "tol", "1e-30") == G3R_OK);
        REQUIRE(g3r_config_set(cfg.ptr, "p", "5") == G3R_OK);
        Result res;
        REQUIRE(g3r_verify(cfg.ptr, "funceq", &res.ptr) == G3R_OK);
        CHECK(g3r_result_all_pass(res.ptr) == 0);
        CHECK(std::string(g3r_result_summary(res.ptr)).rfind("FAIL", 0) == 0);
    }
    {
        Config cfg;
        Result res;
        CHECK(g3r_verify(cfg.ptr, "no-such-suite", &res.ptr) == G3R_E_USAGE);
        CHECK(res.ptr == nullptr);
    }
    {
        Config cfg;
        REQUIRE(g3r_config_set(cfg.ptr, "s", "1.2") == G3R_OK);
        Result res;
        CHECK(g3r_verify(cfg.ptr, "residue", &res.ptr) == G3R_E_USAGE);
    }
    {
        Config cfg;
        REQUIRE(g3r_config_set(cfg.ptr, "p", "9") == G3R_OK);
        Result res;
        CHECK(g3r_verify(cfg.ptr, "prime-dual", &res.ptr) == G3R_E_USAGE);
    }
    {
        Config cfg;
        REQUIRE(g3r_config_set(cfg.ptr, "a", "six") == G3R_OK);
        Result res;
        CHECK(g3r_verify(cfg.ptr, "diagonal", &res.ptr) == G3R_E_USAGE);
    }
}

TEST_CASE("eval through the C interface") {
    g3r_status st;
    CHECK(eval("hurwitz", {{"s", "2"}, {"a", "0.5"}}, &st) == "4.934802200544679");
    CHECK(st == G3R_OK);
    CHECK(eval("hecke-coeff", {{"m1", "2"}, {"m2", "2"}, {"symbolic", "true"}}, &st) == "A2*B2 - 1");
    CHECK(eval("hecke-coeff", {{"m1", "2"}, {"m2", "2"}}, &st) == "8");
    CHECK(eval("ramanujan", {{"n", "2"}, {"d", "4"}}, &st) == "-2");
    CHECK(eval("tau-alpha", {{"alpha", "0,0,0"}, {"n", "12"}}, &st) == "18");
    // Gamma_R(2) = pi^(-1) Gamma(1)
    CHECK(std::stod(eval("gamma-r", {{"s", "2"}}, &st)) == doctest::Approx(0.3183098861837907).epsilon(1e-15));
    eval("hurwitz", {{"s", "1"}, {"a", "0.5"}}, &st);
    CHECK(st == G3R_E_DOMAIN);
    eval("gauss-sum", {{"p", "6"}, {"j", "1"}}, &st);
    CHECK(st == G3R_E_DOMAIN);
    eval("hurwitz", {{"s", "2"}}, &st);
    CHECK(st == G3R_E_USAGE);
    eval("not-a-function", {}, &st);
    CHECK(st == G3R_E_USAGE);
}
