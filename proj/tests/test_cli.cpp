#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

namespace {

struct Run {
    int exit_code;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

const std::filesystem::path& scratch() {
    static const auto dir = [] {
        auto d = std::filesystem::temp_directory_path() / ("gl3recip_cli_test_" + std::to_string(::getpid()));
        std::filesystem::create_directories(d);
        return d;
    }();
    return dir;
}

Run run(const std::string& args) {
    const auto err_path = (scratch() / "stderr.txt").string();
    const std::string cmd = std::string(GL3RECIP_CLI) + " " + args + " 2>" + err_path;
    FILE* pipe = ::popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    for (std::size_t n; (n = std::fread(buf, 1, sizeof buf, pipe)) > 0;) out.append(buf, n);
    const int status = ::pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out, slurp(err_path)};
}

std::string last_line(const std::string& s) {
    auto end = s.find_last_not_of('\n');
    if (end == std::string::npos) return "";
    auto start = s.find_last_of('\n', end);
    return s.substr(start == std::string::npos ? 0 : start + 1, end - (start == std::string::npos ? 0 : start + 1) + 1);
}

void check_report_schema(const nlohmann::json& report) {
    REQUIRE(report.is_object());
    CHECK(report.size() == 7);
    CHECK(report["identity"].is_string());
    CHECK(report["params"].is_object());
    CHECK((report["mode"] == "symbolic" || report["mode"] == "numeric"));
    CHECK(report["max_error"].is_number());
    CHECK(report["pass"].is_boolean());
    CHECK(report["substitution"].is_string());
    REQUIRE(report["items"].is_array());
    for (const auto& item : report["items"]) {
        CHECK(item.size() == 3);
        CHECK(item["key"].is_string());
        CHECK((item["error"].is_number() || item["error"].is_null()));
        CHECK(item["exact"].is_boolean());
    }
}

}  // namespace

TEST_CASE("verify exit codes") {
    const auto ok = run("verify offdiag --a-max 12 --height 10");
    CHECK(ok.exit_code == 0);
    CHECK(last_line(ok.out) == "PASS 12/12");

    const auto injected = run("verify funceq --tol 1e-30");
    CHECK(injected.exit_code == 1);
    CHECK(last_line(injected.out).rfind("FAIL 0/", 0) == 0);

    CHECK(run("verify no-such-suite").exit_code == 2);
    CHECK(run("verify diagonal --bogus 3").exit_code == 2);
    CHECK(run("verify diagonal --a x").exit_code == 2);
    CHECK(run("").exit_code == 2);
    const auto region = run("verify residue --s 1.2");
    CHECK(region.exit_code == 2);
    CHECK(region.err.find("convergence margin") != std::string::npos);
    CHECK(run("verify prime-dual --p 9").exit_code == 2);
    CHECK(run("verify offdiag --a 6 --cutoff 10").exit_code == 2);
    CHECK(run("--help").exit_code == 0);
}

TEST_CASE("JSON output is schema-conformant and byte-stable") {
    const std::string args = "verify prime-dual --p 5 --s 2.2 --s0 2.1 --json";
    const auto first = run(args);
    const auto second = run(args);
    REQUIRE(first.exit_code == 0);
    CHECK(first.out == second.out);
    CHECK(last_line(first.err) == "PASS 4/4");
    const auto doc = nlohmann::json::parse(first.out);
    REQUIRE(doc.is_array());
    REQUIRE(doc.size() == 4);
    for (const auto& report : doc) check_report_schema(report);

    const auto symbolic = nlohmann::json::parse(run("verify diagonal --a 12 --height 20 --json").out);
    REQUIRE(symbolic.size() == 1);
    check_report_schema(symbolic[0]);
    CHECK(symbolic[0]["mode"] == "symbolic");
    CHECK(symbolic[0]["items"][0]["error"].is_null());
    CHECK(symbolic[0]["items"][0]["exact"] == true);
}

TEST_CASE("config file and report path") {
    const auto cfg = (scratch() / "run.conf").string();
    {
        std::ofstream out(cfg);
        out << "# failing on purpose\np = 5\ntol = 1e-30\n";
    }
    CHECK(run("--config " + cfg + " verify funceq").exit_code == 1);
    CHECK(run("--config " + cfg + " verify funceq --tol 1e-7").exit_code == 0);

    const auto report = (scratch() / "report.txt").string();
    const auto r = run("verify gauss --p 7 --out " + report);
    CHECK(r.exit_code == 0);
    CHECK(last_line(r.out) == "PASS 3/3");
    CHECK(last_line(slurp(report)) == "PASS 3/3");
}

TEST_CASE("eval") {
    auto value = [](const std::string& args) {
        const auto r = run("eval " + args);
        CHECK(r.exit_code == 0);
        return last_line(r.out);
    };
    CHECK(value("hurwitz --s 2 --a 0.5") == "4.934802200544679");
    CHECK(value("hecke-coeff --m1 2 --m2 2 --symbolic") == "A2*B2 - 1");
    CHECK(value("ramanujan --n 2 --d 4") == "-2");
    CHECK(value("tau-alpha --alpha 0,0,0 --n 8") == "10");
    const auto pole = run("eval hurwitz --s 1 --a 0.5");
    CHECK(pole.exit_code == 1);
    CHECK(pole.err.find("pole") != std::string::npos);
    CHECK(run("eval gauss-sum --p 9 --j 1").exit_code == 1);
    CHECK(run("eval hurwitz --s 2").exit_code == 2);
}
