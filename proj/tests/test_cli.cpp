#include "doctest.h"

#include "json.hpp"

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
    int status = -1;
    std::string out, err;
};

fs::path scratch() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / ("webdimer_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

Run run(const std::string& args) {
    fs::path errf = scratch() / "stderr.txt";
    std::string cmd = std::string(WEBDIMER_CLI) + " " + args + " 2>" + errf.string();
    Run r;
    FILE* p = ::popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::array<char, 4096> buf;
    size_t got;
    while ((got = std::fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
    int st = ::pclose(p);
    r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    std::ifstream in(errf);
    std::stringstream ss;
    ss << in.rdbuf();
    r.err = ss.str();
    return r;
}

json first_line_json(const std::string& s) { return json::parse(s.substr(0, s.find('\n'))); }

}  // namespace

TEST_CASE("count trees") {
    auto r = run("count trees --r 4");
    CHECK(r.status == 0);
    auto j = json::parse(r.out);
    CHECK(j["enumerated"] == 52);
    CHECK(j["closed_form"] == 52);
}

TEST_CASE("usage errors exit 2 with a JSON message and usage text") {
    auto r = run("basis sl3 -n 6 --no-such-flag");
    CHECK(r.status == 2);
    auto e = first_line_json(r.err);
    CHECK(e["error"] == "usage");
    CHECK(r.err.find("Usage:") != std::string::npos);

    r = run("verify --suite nope");
    CHECK(r.status == 2);
    CHECK(first_line_json(r.err)["error"] == "usage");

    r = run("pair --web /nonexistent.json --monomials \"1,2;3,4\"");
    CHECK(r.status == 2);
    CHECK(first_line_json(r.err)["error"] == "io");

    r = run("basis sl2 -n 5");
    CHECK(r.status == 2);
    CHECK(first_line_json(r.err).contains("message"));

    r = run("measure --rectangle 3,6 --network x.json");
    CHECK(r.status == 2);
}

TEST_CASE("verify duality-3-3 passes") {
    auto r = run("--format table verify --suite duality-3-3");
    CHECK(r.status == 0);
    CHECK(r.out.find("PASS") != std::string::npos);
    CHECK(r.out.find("42x42") != std::string::npos);
}

TEST_CASE("output is reproducible for a fixed seed") {
    auto a = run("--seed 7 measure --rectangle 3,6");
    auto b = run("--seed 7 measure --rectangle 3,6");
    auto c = run("--seed 8 measure --rectangle 3,6");
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    CHECK(a.out != c.out);
    CHECK(json::parse(a.out)["three_term_violations"] == 0);
}

TEST_CASE("basis files feed the duality command") {
    fs::path d2 = scratch() / "b2", d3 = scratch() / "b3";
    CHECK(run("basis sl2 -n 6 --out " + d2.string()).status == 0);
    CHECK(run("basis sl3 -n 6 --out " + d3.string()).status == 0);
    CHECK(fs::exists(d3 / "121323.json"));
    auto r = run("duality --basisA " + d2.string() + " --basisB " + d3.string() + " --report");
    CHECK(r.status == 0);
    auto j = json::parse(r.out);
    CHECK(j["dual_up_to_sign"] == true);
    CHECK(j["diagonal"].size() == 5);

    auto p = run("pair --web " + (d3 / "112233.json").string() + " --monomials \"1,2;3,4;5,6\"");
    CHECK(p.status == 0);
    CHECK(json::parse(p.out)["pairing"] == "1");

    auto csv = run("--format csv basis sl3 -n 6");
    CHECK(csv.out.rfind("index,word,sign,vertices,forks\n", 0) == 0);
}

TEST_CASE("twist commands") {
    fs::path f = scratch() / "f.json";
    std::ofstream(f) << R"([{"coeff":"1","mono":{"1,3":1,"2,4":1}},{"coeff":"2","mono":{"1,2":1,"3,4":1}}])";
    auto r = run("twist-expand --poly " + f.string() + " --rectangle 2,4 --check 4");
    CHECK(r.status == 0);
    auto j = json::parse(r.out);
    CHECK(j["check"]["agree"] == 4);

    fs::path m = scratch() / "m.json";
    std::ofstream(m) << R"([["1","2","3","5"],["0","1","4","-2"]])";
    auto t = run("twist-matrix --matrix " + m.string());
    CHECK(t.status == 0);
    CHECK(json::parse(t.out)["cyclic_form_agrees"] == true);

    std::ofstream(m) << R"([["1","0","0"],["0","1","0"]])";
    t = run("twist-matrix --matrix " + m.string());
    CHECK(t.status == 1);
    CHECK(first_line_json(t.err)["error"] == "rank_loss");
}
