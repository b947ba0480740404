#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "sasaki/rational.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args, const std::string& stderr_path = "") {
    std::string cmd = std::string(SASAKI_CLI_PATH) + " " + args;
    cmd += stderr_path.empty() ? " 2>/dev/null" : " 2>" + stderr_path;
    RunResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf;
    while (size_t n = fread(buf.data(), 1, buf.size(), pipe)) res.out.append(buf.data(), n);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

fs::path write_config(const std::string& name, const std::string& text) {
    const fs::path path = fs::temp_directory_path() / ("sasaki_cli_" + name + ".json");
    std::ofstream out(path);
    out << text;
    return path;
}

const char* kProductFixture = R"({"factors":[],"weight":{"a":"0","b":"1"}})";

std::string round_trip_rational(const std::string& s) {
    return sasaki::Rational::from_string(s).to_string();
}

double rational_to_double(const std::string& s) {
    return sasaki::Rational::from_string(s).to_double();
}

} // namespace

TEST_CASE("exists: positive verdict exits zero") {
    const auto cfg = write_config("fs", kProductFixture);
    const auto res = run("exists " + cfg.string());
    CHECK(res.exit_code == 0);
    const json j = json::parse(res.out);
    CHECK(j["exists"] == true);
    CHECK(j["double_root_flag"] == false);
}

TEST_CASE("exists: validation failure exits one and names the constraint") {
    const auto cfg = write_config(
        "bad", R"({"factors":[{"dim":1,"scal":"0","p":1,"c":"1"}],"weight":{"a":"0","b":"1"}})");
    const auto errfile = (fs::temp_directory_path() / "sasaki_cli_err.txt").string();
    const auto res = run("exists " + cfg.string(), errfile);
    CHECK(res.exit_code == 1);
    std::ifstream err(errfile);
    std::string line;
    std::getline(err, line);
    const json j = json::parse(line);
    CHECK(j["error"].get<std::string>().find("c_j > |p_j|") != std::string::npos);
}

TEST_CASE("malformed JSON exits one without crashing") {
    const auto cfg = write_config("broken", "{ not json");
    const auto res = run("exists " + cfg.string());
    CHECK(res.exit_code == 1);
    const auto res2 = run("solve /nonexistent/path.json");
    CHECK(res2.exit_code == 1);
    const auto res3 = run("bogus-subcommand");
    CHECK(res3.exit_code == 1);
    const auto cfg2 = write_config(
        "badlit", R"({"factors":[],"weight":{"a":"1e5","b":"1"}})");
    const auto res4 = run("exists " + cfg2.string());
    CHECK(res4.exit_code == 1);
    const auto res5 = run("csc " + write_config("cscarg", kProductFixture).string() + " --b 1e3");
    CHECK(res5.exit_code == 1);
}

TEST_CASE("solve emits the solution and round-trips exactly") {
    const auto cfg = write_config("fs2", kProductFixture);
    const auto res = run("solve " + cfg.string());
    REQUIRE(res.exit_code == 0);
    const json j = json::parse(res.out);
    CHECK(j["F"] == json::array({"1", "0", "-1"}));
    CHECK(j["A"] == "0");
    CHECK(j["B"] == "2");
    CHECK(j["mode"] == "doubleint");
    CHECK(j["exists"] == true);
    CHECK(j["interior_roots"].empty());

    // re-parse and re-serialize: identical strings
    for (const auto& coeff : j["F"]) {
        const std::string s = coeff.get<std::string>();
        CHECK(round_trip_rational(s) == s);
    }
    CHECK(round_trip_rational(j["A"].get<std::string>()) == "0");
    const auto again = run("solve " + cfg.string());
    CHECK(json::parse(again.out) == j);
}

TEST_CASE("exists exit code distinguishes the negative verdict") {
    const auto cfg = write_config(
        "noexist",
        R"({"factors":[{"dim":1,"scal":"-8","p":1,"c":"9/8"}],"weight":{"a":"0","b":"1"}})");
    const auto res = run("exists " + cfg.string());
    CHECK(res.exit_code == 3);
    const json j = json::parse(res.out);
    CHECK(j["exists"] == false);
    CHECK(j.contains("witness"));
}

TEST_CASE("scan rows ascend in a and track the existence transition") {
    const auto cfg = write_config(
        "transition",
        R"({"factors":[{"dim":1,"scal":"-8","p":1,"c":"9/8"}],"weight":{"a":"0","b":"1"}})");
    const auto csv = (fs::temp_directory_path() / "sasaki_transition.csv").string();
    const auto res = run("scan " + cfg.string() + " --grid 15 --csv " + csv);
    REQUIRE(res.exit_code == 0);
    std::ifstream in(csv);
    std::string line;
    std::getline(in, line); // header
    double prev = -2.0;
    bool saw_false = false, saw_true = false;
    while (std::getline(in, line)) {
        const auto c1 = line.find(',');
        const std::string a_str = line.substr(0, c1);
        const double a = rational_to_double(a_str);
        CHECK(a > prev);
        prev = a;
        if (line.find(",true,") != std::string::npos) saw_true = true;
        if (line.find(",false,") != std::string::npos) saw_false = true;
    }
    CHECK(saw_true);
    CHECK(saw_false);
}

TEST_CASE("solve on the extended ray reports the eigenbasis mode") {
    const auto cfg = write_config(
        "ext", R"({"factors":[],"weight":{"a":"1","b":"1"},"extended":true})");
    const auto res = run("solve " + cfg.string());
    REQUIRE(res.exit_code == 0);
    const json j = json::parse(res.out);
    CHECK(j["mode"] == "eigen");
    CHECK(j["A"] == "-4");
    CHECK(j["B"] == "-4");
}

TEST_CASE("scan grid contract and CSV shape") {
    const auto cfg = write_config("scan", kProductFixture);
    const auto res = run("scan " + cfg.string() + " --grid 3");
    REQUIRE(res.exit_code == 0);
    std::vector<std::string> lines;
    std::string cur;
    for (char c : res.out) {
        if (c == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    REQUIRE(lines.size() == 4);
    CHECK(lines[0] == "a,b,exists,A,B,min_theta,csc");
    CHECK(lines[1].rfind("-1/2,1,true,", 0) == 0);
    CHECK(lines[2].rfind("0,1,true,", 0) == 0);
    CHECK(lines[3].rfind("1/2,1,true,", 0) == 0);
}

TEST_CASE("scan writes CSV and SVG files") {
    const auto cfg = write_config("scanio", kProductFixture);
    const auto csv = (fs::temp_directory_path() / "sasaki_scan.csv").string();
    const auto svg = (fs::temp_directory_path() / "sasaki_scan.svg").string();
    const auto res = run("scan " + cfg.string() + " --grid 5 --csv " + csv + " --svg " + svg);
    REQUIRE(res.exit_code == 0);
    std::ifstream csv_in(csv);
    std::string header;
    std::getline(csv_in, header);
    CHECK(header == "a,b,exists,A,B,min_theta,csc");
    std::ifstream svg_in(svg);
    std::string svg_text((std::istreambuf_iterator<char>(svg_in)),
                         std::istreambuf_iterator<char>());
    CHECK(svg_text.find("<svg") != std::string::npos);
    CHECK(svg_text.find("<polyline") != std::string::npos);
    CHECK(svg_text.find("<rect") != std::string::npos); // existence band
}

TEST_CASE("futaki subcommand classifies the scalar-flat fixture") {
    const auto cfg = write_config("fut", kProductFixture);
    const auto res = run("futaki " + cfg.string() + " --ellz 1,0");
    REQUIRE(res.exit_code == 0);
    const json j = json::parse(res.out);
    CHECK(j["A"] == "0");
    CHECK(j["B"] == "2");
    CHECK(j["csc_type"] == "scalar-flat-cone");
    CHECK(j["futaki"]["sign"] == "0");
    CHECK(j["cK"]["sign"] == "+");
}

TEST_CASE("csc subcommand finds the symmetric ray of the product fixture") {
    const auto cfg = write_config("csc", kProductFixture);
    const auto res = run("csc " + cfg.string() + " --b 1");
    REQUIRE(res.exit_code == 0);
    const json j = json::parse(res.out);
    CHECK(j["identically_zero"] == false);
    REQUIRE(j["csc_rays"].size() == 1);
    CHECK(j["csc_rays"][0]["a"] == "0");
    CHECK(j["csc_rays"][0]["theta_positive"] == true);
}

TEST_CASE("perturb subcommand emits the pair") {
    const auto cfg = write_config("pert", kProductFixture);
    const auto res = run("perturb " + cfg.string() + " --t 1/10");
    REQUIRE(res.exit_code == 0);
    const json j = json::parse(res.out);
    CHECK(j["identity_holds"] == true);
    CHECK(j["A"] == "0");
    CHECK(j["B"] == "2");
}
