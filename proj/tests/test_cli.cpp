#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "dp4a13/cli.hpp"

using dp4a13::run_cli;
using nlohmann::json;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

int count_lines(const std::string& s) {
    int n = 0;
    for (char c : s)
        if (c == '\n') ++n;
    return n;
}

} // namespace

TEST_CASE("count with both methods agrees") {
    auto r = run({"count", "--case", "4", "--bound", "200", "--method", "both"});
    CHECK(r.code == 0);
    CHECK(r.out.find("case,bound,method") != std::string::npos);
    auto j = run({"count", "--case", "4", "--bound", "200", "--method", "both", "--format",
                  "json"});
    CHECK(j.code == 0);
    auto parsed = json::parse(j.out);
    CHECK(parsed["agree"] == true);
    CHECK(parsed["count_torsor"] == parsed["count_direct"]);
}

TEST_CASE("counts match the symmetry between cases 5 and 6") {
    auto five = run({"count", "--case", "5", "--bound", "100", "--format", "json"});
    auto six = run({"count", "--case", "6", "--bound", "100", "--format", "json"});
    CHECK(json::parse(five.out)["count"] == json::parse(six.out)["count"]);
}

TEST_CASE("predict emits the expected constants") {
    auto r4 = run({"predict", "--case", "4", "--bound", "1000", "--format", "json"});
    CHECK(r4.code == 0);
    auto j4 = json::parse(r4.out);
    CHECK(j4["c_inf"] == "2");
    CHECK(j4["b"] == 3);

    auto j1 = json::parse(run({"predict", "--case", "1", "--format", "json"}).out);
    CHECK(j1["c_inf"] == "13/4320");
    CHECK(j1["b"] == 6);

    auto j3 = json::parse(run({"predict", "--case", "3", "--format", "json"}).out);
    CHECK(j3["c_inf"] == "1/8");
    CHECK(j3["b"] == 4);
    CHECK(j3["tail_bound"].get<double>() > 0.0);
}

TEST_CASE("classify lists the six admissible boundaries") {
    auto r = run({"classify"});
    CHECK(r.code == 0);
    CHECK(count_lines(r.out) == 8); // comment + header + six rows
    CHECK(r.out.find("{}") != std::string::npos);
    CHECK(r.out.find("{E7}") != std::string::npos);
    CHECK(r.out.find("{E3,E4,E5,E6,E7}") != std::string::npos);
    CHECK(r.out.find("{E3,E4,E6,E7}") == std::string::npos);
}

TEST_CASE("fp census all match") {
    auto r = run({"fp", "2..13"});
    CHECK(r.code == 0);
    CHECK(count_lines(r.out) == 2 + 36);
    CHECK(r.out.find(",0\n") == std::string::npos); // no failed match flag
    auto j = json::parse(run({"fp", "5", "--case", "3", "--format", "json"}).out);
    CHECK(j.size() == 1);
    CHECK(j[0]["match"] == true);
}

TEST_CASE("compare reports finite positive ratios") {
    auto r = run({"compare", "--case", "2", "--bound", "2000", "--format", "json"});
    CHECK(r.code == 0);
    auto arr = json::parse(r.out);
    CHECK(arr.size() == 2); // B = 1000, 2000
    for (const auto& row : arr) {
        CHECK(row["ratio"].get<double>() > 0.0);
        CHECK(std::isfinite(row["ratio"].get<double>()));
    }
}

TEST_CASE("points streams") {
    auto surf = run({"points", "--case", "1", "--bound", "90"});
    CHECK(surf.code == 0);
    CHECK(count_lines(surf.out) > 2);
    CHECK(surf.out.find("case,x0,x1,x2,x3,x4,height") != std::string::npos);

    auto chart = run({"points", "--case", "1", "--bound", "90", "--chart", "f"});
    CHECK(chart.code == 0);
    CHECK(chart.out.find("case,x,y,height") != std::string::npos);
    CHECK(count_lines(chart.out) > 2);

    auto direct = run({"points", "--case", "2", "--bound", "40", "--method", "direct"});
    auto torsor = run({"points", "--case", "2", "--bound", "40", "--method", "torsor"});
    CHECK(direct.out == torsor.out);

    auto raw = run({"points", "--case", "5", "--bound", "20", "--chart", "torsor"});
    CHECK(raw.code == 0);
    CHECK(raw.out.find("eta9") != std::string::npos);
}

TEST_CASE("constants table") {
    auto r = run({"constants"});
    CHECK(r.code == 0);
    CHECK(count_lines(r.out) == 2 + 15); // one row per (case, face)
    CHECK(r.out.find("13/34560") != std::string::npos);
    CHECK(r.out.find("7/24") != std::string::npos);
}

TEST_CASE("deterministic output across worker counts") {
    auto w1 = run({"count", "--case", "5", "--bound", "300", "--workers", "1", "--format",
                   "json"});
    auto w4 = run({"count", "--case", "5", "--bound", "300", "--workers", "4", "--format",
                   "json"});
    CHECK(json::parse(w1.out)["count"] == json::parse(w4.out)["count"]);
}

TEST_CASE("bad arguments exit nonzero") {
    CHECK(run({"count", "--case", "7", "--bound", "10"}).code != 0);
    CHECK(run({"count", "--bound", "10"}).code != 0);
    CHECK(run({"nonsense"}).code != 0);
    CHECK(run({"count", "--case", "1", "--bound", "0"}).code != 0);
}

TEST_CASE("help exits cleanly") {
    CHECK(run({"--help"}).code == 0);
}
