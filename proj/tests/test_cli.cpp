#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "legendrian/curve_json.hpp"
#include "legendrian/expr_parser.hpp"
#include "legendrian/mesh_export.hpp"

using namespace legendrian;

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

std::string tmp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("legcurve_test_" + name)).string();
}

RunResult run(const std::string& args) {
    std::string out_file = tmp_path("stdout.txt");
    std::string cmd = std::string(LEGCURVE_BINARY) + " " + args + " > " + out_file + " 2>&1";
    int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out_file);
    std::stringstream ss;
    ss << in.rdbuf();
    r.output = ss.str();
    return r;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("bryant then verify exits 0") {
    std::string curve = tmp_path("b.json");
    RunResult mk = run("bryant --f \"z^2\" --g \"(z+1/2)^2\" -o " + curve);
    REQUIRE(mk.exit_code == 0);
    RunResult v = run("verify " + curve);
    CHECK(v.exit_code == 0);
    CHECK(v.output.find("true") != std::string::npos);
}

TEST_CASE("verify refutes a non-Legendrian curve with exit 1") {
    // Handcraft a rational normal curve json through the library.
    PolyTuple4 rnc{Polynomial::one(), parse_expression("z").num(), parse_expression("z^2").num(),
                   parse_expression("z^3").num()};
    std::string path = tmp_path("rnc.json");
    save_curve(ProjectiveCurve(std::move(rnc)), path);
    RunResult v = run("verify " + path);
    CHECK(v.exit_code == 1);
    CHECK(v.output.find("witness") != std::string::npos);
}

TEST_CASE("fcurve reports the residue obstruction with exit 1") {
    RunResult r = run("fcurve --h \"1/z\" --g \"z\"");
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("ExactnessViolation") != std::string::npos);
    CHECK(r.output.find("pole 0") != std::string::npos);
    CHECK(r.output.find("residue 1") != std::string::npos);
}

TEST_CASE("fcurve accepts an exact pair and a constant") {
    std::string curve = tmp_path("f.json");
    RunResult mk = run("fcurve --h \"-2*z\" --g \"z\" --c \"1/3\" -o " + curve);
    REQUIRE(mk.exit_code == 0);
    CHECK(run("verify " + curve).exit_code == 0);
}

TEST_CASE("invert on an exceptional line exits 1 with NotRepresentable") {
    std::string curve = tmp_path("exc.json");
    REQUIRE(run("exceptional --a \"1\" --b \"2\" -o " + curve).exit_code == 0);
    RunResult r = run("invert " + curve);
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("NotRepresentable") != std::string::npos);
}

TEST_CASE("invert recovers the pair of a Bryant curve") {
    std::string curve = tmp_path("b2.json");
    REQUIRE(run("bryant --f \"z^2\" --g \"z^3\" -o " + curve).exit_code == 0);
    RunResult r = run("invert " + curve);
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(parse_expression(j["f"].get<std::string>()) == parse_expression("z^2"));
    CHECK(parse_expression(j["g"].get<std::string>()) == parse_expression("z^3"));
}

TEST_CASE("residues subcommand splits pass from fail by exit code") {
    CHECK(run("residues --h \"1/z\" --g \"z^2\"").exit_code == 0);
    RunResult bad = run("residues --h \"1/z + z\" --g \"1/z\"");
    CHECK(bad.exit_code == 1);
    CHECK(nlohmann::json::parse(bad.output)["pass"] == false);
}

TEST_CASE("chart transform preserves the verified property") {
    std::string curve = tmp_path("b3.json");
    std::string moved = tmp_path("b3_chart.json");
    REQUIRE(run("bryant --f \"1/z\" --g \"z\" -o " + curve).exit_code == 0);
    REQUIRE(run("chart --a1 \"1/2\" --a2 \"-1\" --a3 \"1/3\" --apply " + curve + " -o " + moved)
                .exit_code == 0);
    CHECK(run("verify " + moved).exit_code == 0);
}

TEST_CASE("curve json round-trips bit-exactly through files") {
    std::string curve = tmp_path("round.json");
    REQUIRE(run("bryant --f \"z^2 + i*z\" --g \"z^3 - 1/7\" -o " + curve).exit_code == 0);
    std::string text = slurp(curve);
    ProjectiveCurve loaded = curve_from_json(text);
    CHECK(curve_to_json(loaded) == text);
}

TEST_CASE("analyze emits the diagnostic report") {
    std::string curve = tmp_path("b4.json");
    REQUIRE(run("bryant --f \"1/z^2\" --g \"z\" -o " + curve).exit_code == 0);
    RunResult r = run("analyze " + curve);
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    bool found_non_simple = false;
    for (const auto& dp : j["data_poles"])
        if (dp["simple"] == false) found_non_simple = true;
    CHECK(found_non_simple);
}

TEST_CASE("project writes json and obj meshes") {
    std::string curve = tmp_path("b5.json");
    std::string mesh_json = tmp_path("mesh.json");
    std::string mesh_obj = tmp_path("mesh.obj");
    REQUIRE(run("bryant --f \"1\" --g \"z\" -o " + curve).exit_code == 0);
    REQUIRE(run("project " + curve + " --domain rect:0,1,0,1 --h 0.1 -o " + mesh_json).exit_code ==
            0);
    auto j = nlohmann::json::parse(slurp(mesh_json));
    CHECK(j["vertices_r5"].size() == 121);
    CHECK(j["faces"].size() == 100);

    REQUIRE(run("project " + curve + " --domain rect:0,1,0,1 --h 0.1 -o " + mesh_obj).exit_code ==
            0);
    std::string obj = slurp(mesh_obj);
    int vcount = 0, fcount = 0;
    std::stringstream ss(obj);
    std::string word_line;
    while (std::getline(ss, word_line)) {
        if (word_line.rfind("v ", 0) == 0) ++vcount;
        if (word_line.rfind("f ", 0) == 0) ++fcount;
    }
    CHECK(vcount == 121);
    CHECK(fcount == 200);
}

TEST_CASE("report runs the certificates over a refinement ladder") {
    std::string curve = tmp_path("b6.json");
    REQUIRE(run("bryant --f \"z^2\" --g \"z^3\" -o " + curve).exit_code == 0);
    RunResult r =
        run("report " + curve + " --domain rect:0.5,0.75,0.5,0.75 --h 0.005 --refine 2");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    REQUIRE(j["reports"].size() == 2);
    CHECK(j["reports"][0]["isometry_ratio_mean"].get<double>() == doctest::Approx(4.0).epsilon(1e-6));
    CHECK(j.contains("observed_orders"));
}

TEST_CASE("radius reports a refinement sequence") {
    std::string curve = tmp_path("line.json");
    REQUIRE(run("exceptional --a \"0\" --b \"0\" -o " + curve).exit_code == 0);
    RunResult r = run("radius " + curve +
                      " --domain rect:-1,1,-0.2,0.2 --h 0.008 --center 0,0 --levels 2");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    REQUIRE(j["levels"].size() == 2);
    double estimate = j["estimate"].get<double>();
    CHECK(estimate == doctest::Approx(2.0 * std::atan(0.2)).epsilon(1e-3));
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run("bryant --f \"z\"").exit_code == 2);   // missing --g
    CHECK(run("nonsense").exit_code == 2);
    CHECK(run("").exit_code == 2);
}

TEST_CASE("precision mode switches the numeric pipeline") {
    std::string curve = tmp_path("b7.json");
    REQUIRE(run("bryant --f \"1\" --g \"z\" -o " + curve).exit_code == 0);
    RunResult r = run("report " + curve + " --domain rect:0,0.5,0,0.5 --h 0.01");
    REQUIRE(r.exit_code == 0);
    std::string cmd = "PRECISION_BITS=64 " + std::string(LEGCURVE_BINARY) + " report " + curve +
                      " --domain rect:0,0.5,0,0.5 --h 0.01 > " + tmp_path("p64.txt") + " 2>&1";
    REQUIRE(std::system(cmd.c_str()) == 0);
    auto j = nlohmann::json::parse(slurp(tmp_path("p64.txt")));
    CHECK(j["reports"][0]["isometry_ratio_mean"].get<double>() ==
          doctest::Approx(4.0).epsilon(1e-6));
    std::string bad = "PRECISION_BITS=113 " + std::string(LEGCURVE_BINARY) + " report " + curve +
                      " --domain rect:0,0.5,0,0.5 --h 0.01 > /dev/null 2>&1";
    int status = std::system(bad.c_str());
    CHECK(WEXITSTATUS(status) == 1);
}
