#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wps/serialize.hpp"

#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

using namespace wps;

namespace {

std::string cli_path() {
    const char* path = std::getenv("WPS_CLI");
    REQUIRE_MESSAGE(path != nullptr, "WPS_CLI must point at the built binary");
    return path;
}

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args, const std::string& stdin_json = "") {
    std::string command;
    if (!stdin_json.empty()) command += "printf '%s' '" + stdin_json + "' | ";
    command += cli_path() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buffer;
    std::size_t got;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) out.append(buffer.data(), got);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string strip_newline(std::string s) {
    if (!s.empty() && s.back() == '\n') s.pop_back();
    return s;
}

}  // namespace

TEST_CASE("constants subcommand") {
    RunResult r = run("constants --chi 1,2,3");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"2\":\"6\"") != std::string::npos);
    CHECK(r.out.find("\"agreement\":true") != std::string::npos);
    StructureConstantsReport report = structure_constants_from_json(strip_newline(r.out));
    CHECK(report.agreed.k.at(2) == 6);
    CHECK(to_json(report) == strip_newline(r.out));

    CHECK(run("constants --chi 1,2,3,4 --m 3").out.find("\"3\":\"72\"") != std::string::npos);
}

TEST_CASE("user errors exit with code 2") {
    CHECK(run("constants --chi 0,1").exit_code == 2);
    CHECK(run("constants --chi 1,2,x").exit_code == 2);
    CHECK(run("constants").exit_code == 2);
    CHECK(run("nonsense").exit_code == 2);
    CHECK(run("constants --chi 1,2,3 --m 9").exit_code == 2);
    CHECK(run("recover", "{\"chi\": [1,2]}").exit_code == 2);
    CHECK(run("recover", "not json at all").exit_code == 2);
}

TEST_CASE("worked example replays cleanly") {
    RunResult r = run("example");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"failures\":0") != std::string::npos);
}

TEST_CASE("fan output feeds recover") {
    RunResult fan = run("fan --chi 1,2,3,4");
    REQUIRE(fan.exit_code == 0);
    RunResult rec = run("recover", strip_newline(fan.out));
    CHECK(rec.exit_code == 0);
    CHECK(strip_newline(rec.out) == "{\"weights\":[1,2,3,4]}");
    CHECK(weights_from_json(strip_newline(rec.out)) == WeightVector{1, 2, 3, 4});
}

TEST_CASE("output is byte-stable and round-trips through the parsers") {
    for (const std::string args :
         {"fan --chi 2,3,4", "generators --chi 1,2,3", "presentation --chi 1,2,3,4",
          "constants --chi 2,3,5,7", "chern --chi 1,2,3,4", "example"}) {
        RunResult first = run(args);
        RunResult second = run(args);
        CHECK(first.exit_code == 0);
        CHECK(first.out == second.out);
    }

    std::string fan_doc = strip_newline(run("fan --chi 2,3,4").out);
    CHECK(to_json(fan_from_json(fan_doc)) == fan_doc);

    std::string pres_doc = strip_newline(run("presentation --chi 1,2,3,4").out);
    CHECK(to_json(presentation_from_json(pres_doc)) == pres_doc);

    std::string chern_doc = strip_newline(run("chern --chi 1,2,3,4").out);
    CHECK(to_json(chern_report_from_json(chern_doc)) == chern_doc);
}

TEST_CASE("generators document carries valid piecewise data") {
    std::string doc = strip_newline(run("generators --chi 1,2,3,4").out);
    auto j = nlohmann::json::parse(doc);
    Fan fan = fan_from_json(j.at("fan").dump());
    CHECK(fan.chi == WeightVector{1, 2, 3, 4});
    REQUIRE(j.at("courant").size() == 4);
    for (std::size_t i = 0; i < 4; ++i) {
        std::vector<Polynomial> comps;
        for (const auto& c : j.at("courant").at(i)) comps.push_back(polynomial_from_json(c.dump()));
        PiecewisePolynomial a(fan, comps);  // validates compatibility
        CHECK(a == courant(fan, i));
    }
    for (const auto& entry : j.at("a_subsets")) {
        auto subset = entry.at("subset").get<std::vector<std::size_t>>();
        CHECK(Int(entry.at("divisor").get<std::string>()) ==
              divisor_coefficient(fan.chi_normalized, subset));
    }
}

TEST_CASE("single a_I via --subset") {
    RunResult r = run("generators --chi 1,2,3,4 --subset 2,3");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("a_subsets").at(0).at("divisor").get<std::string>() == "6");
}

TEST_CASE("text format is available everywhere") {
    for (const std::string args :
         {"fan --chi 1,2,3,4", "generators --chi 1,2,3", "presentation --chi 1,2",
          "constants --chi 1,2,3", "chern --chi 2,3", "example"}) {
        RunResult r = run(args + " --format text");
        CHECK(r.exit_code == 0);
        REQUIRE(!r.out.empty());
        CHECK(r.out.front() != '{');  // not a JSON document
    }
}
