#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <numbers>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "liscount/cli.hpp"

using namespace liscount;
using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return Result{code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("exact subcommand") {
    auto both = invoke({"exact", "--d", "2", "--r", "1", "--n", "3", "--method", "both"});
    CHECK(both.code == 0);
    CHECK(both.out.find("rsk 5") != std::string::npos);
    CHECK(both.out.find("brute 5") != std::string::npos);
    CHECK(both.out.find("methods agree") != std::string::npos);

    // Catalan numbers: r = 1, d = 2 counts ballot-style words.
    auto rsk = invoke({"exact", "--d", "2", "--r", "1", "--n", "4"});
    CHECK(rsk.code == 0);
    CHECK(rsk.out == "14\n");

    auto js = invoke({"exact", "--d", "2", "--r", "1", "--n", "5", "--format", "json"});
    CHECK(js.code == 0);
    const json j = json::parse(js.out);
    CHECK(j["count"] == "42");
    CHECK(j["method"] == "rsk");
    CHECK(js.out.back() == '\n');
}

TEST_CASE("kostka subcommand: all four methods") {
    CHECK(invoke({"kostka", "--shape", "2,1", "--r", "1", "--n", "3", "--method", "dp"}).out == "2\n");
    CHECK(invoke({"kostka", "--shape", "2,1", "--r", "1", "--method", "jt"}).out == "2\n");  // n inferred

    // K for shape (4,2) and content 2,2,2 is 3: fillings 1122/33, 1123/23, 1133/22.
    auto full = invoke({"kostka", "--shape", "4,2", "--r", "2", "--n", "3",
                        "--method", "contour-full", "--format", "json"});
    CHECK(full.code == 0);
    const json j = json::parse(full.out);
    CHECK(j["nearest_integer"] == 3.0);
    CHECK(std::abs(j["value"].get<double>() - 3.0) < 1e-8);
    CHECK(std::abs(j["imag_residue"].get<double>()) < 1e-8);
    CHECK(j["distance"].get<double>() < 1e-8);

    auto red = invoke({"kostka", "--shape", "4,2", "--r", "2", "--n", "3",
                       "--method", "contour-reduced", "--format", "text"});
    CHECK(red.code == 0);
    CHECK(red.out.find("nearest_integer 3") != std::string::npos);
    CHECK(red.out.find("points_per_dim") != std::string::npos);
}

TEST_CASE("syt and saddle subcommands") {
    CHECK(invoke({"syt", "--shape", "4,3,1"}).out == "70\n");

    auto sp = invoke({"saddle", "--shape", "2,1", "--n", "3", "--r", "1", "--format", "json"});
    CHECK(sp.code == 0);
    const json j = json::parse(sp.out);
    CHECK(std::abs(j["x0"][0].get<double>() - 2.0) < 1e-9);
    CHECK(j["x0"][1] == 1.0);
    CHECK(j["outside_ball"] == false);
    CHECK(j["residual"].get<double>() <= 1e-12);
}

TEST_CASE("asym subcommand matches the formula") {
    auto res = invoke({"asym", "--d", "2", "--r", "1", "--n", "100", "--format", "json"});
    CHECK(res.code == 0);
    const json j = json::parse(res.out);
    const double want = 100 * std::log(4.0) - 1.5 * std::log(100.0) - 0.5 * std::log(std::numbers::pi);
    CHECK(std::abs(j["log_asym"].get<double>() - want) < 1e-9);
    CHECK(j["base"] == "4");
}

TEST_CASE("converge subcommand: csv schema and 12-digit round trip") {
    auto res = invoke({"converge", "--d", "2", "--r", "1", "--n-list", "10,25", "--format", "csv"});
    CHECK(res.code == 0);
    std::istringstream lines(res.out);
    std::string header, row1, row2;
    std::getline(lines, header);
    std::getline(lines, row1);
    std::getline(lines, row2);
    CHECK(header == "n,log_exact,log_asym,ratio");
    CHECK(row1.substr(0, 3) == "10,");
    // Round trip: parse the printed ratio, reprint at 12 significant digits.
    const auto last_comma = row2.find_last_of(',');
    const std::string printed = row2.substr(last_comma + 1);
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", std::strtod(printed.c_str(), nullptr));
    CHECK(printed == buf);

    auto js = invoke({"converge", "--d", "2", "--r", "2", "--n-list", "5", "--format", "json"});
    const json arr = json::parse(js.out);
    REQUIRE(arr.is_array());
    CHECK(arr[0]["n"] == 5);
    CHECK(arr[0]["ratio"].get<double>() ==
          doctest::Approx(std::exp(arr[0]["log_exact"].get<double>() - arr[0]["log_asym"].get<double>())));
}

TEST_CASE("profile subcommand") {
    auto csv = invoke({"profile", "--d", "2", "--r", "1", "--n", "30", "--format", "csv"});
    CHECK(csv.code == 0);
    CHECK(csv.out.substr(0, 17) == "lo,hi,mass,share\n");

    auto js = invoke({"profile", "--d", "2", "--r", "1", "--n", "30", "--bins", "10", "--format", "json"});
    const json j = json::parse(js.out);
    CHECK(j["bins"].size() == 10);
    double total_share = 0;
    for (const auto& b : j["bins"]) total_share += b["share"].get<double>();
    CHECK(total_share == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("regev subcommand") {
    auto res = invoke({"regev", "--d", "2", "--quad-points", "3001", "--format", "json"});
    CHECK(res.code == 0);
    const json j = json::parse(res.out);
    CHECK(j["rel_error"].get<double>() < 1e-3);
}

TEST_CASE("usage and runtime errors exit 1") {
    CHECK(invoke({"nonsense"}).code == 1);
    CHECK(invoke({"exact", "--d", "2"}).code == 1);  // missing required flags
    auto bad_shape = invoke({"kostka", "--shape", "1,2", "--r", "1", "--n", "1"});
    CHECK(bad_shape.code == 1);
    CHECK_FALSE(bad_shape.err.empty());
    CHECK(invoke({"exact", "--d", "2", "--r", "1", "--n", "3", "--method", "bogus"}).code == 1);
    CHECK(invoke({"exact", "--d", "2", "--r", "2", "--n", "30", "--method", "brute"}).code == 1);  // cap
    CHECK(invoke({"regev", "--d", "5"}).code == 1);
}

TEST_CASE("help exits 0") {
    auto res = invoke({"--help"});
    CHECK(res.code == 0);
    CHECK(res.out.find("exact") != std::string::npos);
}

TEST_CASE("outputs are byte-identical across thread counts") {
    const std::vector<std::vector<std::string>> cases = {
        {"exact", "--d", "2", "--r", "2", "--n", "6", "--format", "json"},
        {"kostka", "--shape", "4,3,2", "--r", "3", "--n", "3", "--method", "contour-full", "--format", "json"},
        {"kostka", "--shape", "4,3,2", "--r", "3", "--n", "3", "--method", "contour-reduced", "--format", "json"},
        {"converge", "--d", "2", "--r", "2", "--n-list", "5,10,15", "--format", "csv"},
        {"profile", "--d", "2", "--r", "1", "--n", "40", "--format", "csv"},
    };
    for (const auto& base : cases) {
        auto one = base, many = base;
        one.insert(one.end(), {"--threads", "1"});
        many.insert(many.end(), {"--threads", "4"});
        const auto a = invoke(one);
        const auto b = invoke(many);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("verify quick suite passes") {
    auto res = invoke({"verify", "--suite", "quick"});
    CHECK(res.code == 0);
    CHECK(res.out.find("verification passed") != std::string::npos);
    CHECK(res.out.find("FAIL") == std::string::npos);
}
