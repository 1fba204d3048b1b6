#include <catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "besant/conic.hpp"
#include "besant/report.hpp"

using json = nlohmann::json;
using Catch::Approx;

namespace {

struct CliResult {
    int exit_code;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(BESANT_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf;
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

const std::string kExampleArgs = "--vertices \"0,0 0,1 2,4 6.8,-2.4\"";
const std::string kTrapArgs = "--vertices \"0,0 0,1 2,2 2,-1\"";

int count_occurrences(const std::string& hay, const std::string& needle) {
    int count = 0;
    for (size_t pos = hay.find(needle); pos != std::string::npos;
         pos = hay.find(needle, pos + needle.size()))
        ++count;
    return count;
}

}  // namespace

TEST_CASE("classify subcommand on the reference example") {
    CliResult res = run_cli("classify " + kExampleArgs);
    REQUIRE(res.exit_code == 0);
    json rep = json::parse(res.out);
    CHECK(rep["flags"]["besant"] == true);
    CHECK(rep["flags"]["cyclic"] == true);
    CHECK(rep["flags"]["orthodiagonal"] == true);
    CHECK(rep["flags"]["trapezoid"] == false);
    CHECK(double(rep["r"]) == Approx(17.0 / 22.0).margin(1e-9));
    CHECK(double(rep["ep"][0]) == Approx(4.0).margin(1e-9));
    CHECK(double(rep["ip"][1]) == Approx(0.8).margin(1e-9));
}

TEST_CASE("classify flags a parallelogram") {
    CliResult res = run_cli("classify --vertices \"0,0 0,1 1,1 1,0\"");
    REQUIRE(res.exit_code == 0);
    json rep = json::parse(res.out);
    CHECK(rep["flags"]["parallelogram"] == true);
    CHECK(rep["flags"]["besant"] == false);
    CHECK(rep["reason"] == "Parallelogram");
}

TEST_CASE("exit codes") {
    CHECK(run_cli("classify --vertices \"0,0 0,1 1,2\"").exit_code == 3);       // arity
    CHECK(run_cli("classify --vertices \"0,0 0,1 x,2 3,3\"").exit_code == 3);   // parse
    CHECK(run_cli("classify --vertices \"0,0 1,1 2,2 0,1\"").exit_code == 2);   // collinear
    CHECK(run_cli("inscribe --r 1.5 " + kExampleArgs).exit_code == 2);          // range
}

TEST_CASE("reports are byte identical across runs") {
    CliResult a = run_cli("classify " + kExampleArgs);
    CliResult b = run_cli("classify " + kExampleArgs);
    CHECK(a.out == b.out);
    CliResult c = run_cli("maxarea " + kTrapArgs);
    CliResult d = run_cli("maxarea " + kTrapArgs);
    CHECK(c.out == d.out);
}

TEST_CASE("besant subcommand reports the trapezoid conic") {
    CliResult res = run_cli("besant " + kTrapArgs);
    REQUIRE(res.exit_code == 0);
    json rep = json::parse(res.out);
    REQUIRE(rep["conic"].is_array());
    // proportional to 3x^2 + 4y^2 - 6x - 4y + 1; normalized by D = -6
    besant::Conic expect = besant::Conic{3, 0, 4, -6, -4, 1}.normalized();
    CHECK(double(rep["conic"][0]) == Approx(expect.A).margin(1e-9));
    CHECK(double(rep["conic"][2]) == Approx(expect.C).margin(1e-9));
    CHECK(double(rep["conic"][3]) == Approx(expect.D).margin(1e-9));
    CHECK(double(rep["conic"][5]) == Approx(expect.F).margin(1e-9));
}

TEST_CASE("besant subcommand reports non-besant input in-band") {
    CliResult res = run_cli("besant --vertices \"0,0 0,1 2,4 6.8,-2\"");
    CHECK(res.exit_code == 0);
    json rep = json::parse(res.out);
    CHECK(rep["flags"]["besant"] == false);
    CHECK(rep["reason"] == "NotCyclic");
}

TEST_CASE("svg output contains the declared elements") {
    std::string path = "/tmp/besant_test_fig.svg";
    CliResult res = run_cli("besant --svg " + path + " " + kExampleArgs);
    REQUIRE(res.exit_code == 0);
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    std::string svg = ss.str();
    CHECK(count_occurrences(svg, "<line ") == 4);
    CHECK(count_occurrences(svg, "<circle ") == 1);
    CHECK(count_occurrences(svg, "class=\"ellipse\"") == 1);
    CHECK(count_occurrences(svg, "<rect ") == 3);
    CHECK(count_occurrences(svg, "<svg ") == 1);
    CHECK(count_occurrences(svg, "</svg>") == 1);
    std::remove(path.c_str());
}

TEST_CASE("inscribe cross-route residual is reported and small") {
    CliResult res = run_cli("inscribe --r 0.5 " + kExampleArgs);
    REQUIRE(res.exit_code == 0);
    json rep = json::parse(res.out);
    CHECK(rep["checks"]["foci_cross_route"]["pass"] == true);
    CHECK(double(rep["checks"]["foci_cross_route"]["residual"]) < 1e-8);

    CliResult at = run_cli("inscribe --r 0.772727272727272727 " + kExampleArgs);
    json rep2 = json::parse(at.out);
    CHECK(double(rep2["foci_by_coefficients"][0][0]) == Approx(4.0).margin(1e-6));
    CHECK(double(rep2["foci_by_coefficients"][1][0]) == Approx(0.4).margin(1e-6));
}

TEST_CASE("maxarea subcommand") {
    CliResult res = run_cli("maxarea " + kExampleArgs);
    REQUIRE(res.exit_code == 0);
    json rep = json::parse(res.out);
    double expected = (-151.0 + std::sqrt(64621.0)) / 123.0;
    CHECK(double(rep["r_star"]) == Approx(expected).margin(1e-6));

    CliResult trap = run_cli("maxarea " + kTrapArgs);
    json rep2 = json::parse(trap.out);
    CHECK(double(rep2["r_star"]) == Approx(0.5).margin(1e-9));
}

TEST_CASE("reported conic round-trips to the reported foci") {
    CliResult res = run_cli("besant " + kExampleArgs);
    json rep = json::parse(res.out);
    auto d = [&](const json& v) { return v.get<double>(); };
    besant::Conic c{d(rep["conic"][0]), d(rep["conic"][1]), d(rep["conic"][2]),
                    d(rep["conic"][3]), d(rep["conic"][4]), d(rep["conic"][5])};
    auto [f1, f2] = besant::foci(c);
    besant::Point ep{d(rep["ep"][0]), d(rep["ep"][1])};
    besant::Point ip{d(rep["ip"][0]), d(rep["ip"][1])};
    double err = std::min(
        std::max(besant::distance(f1, ep), besant::distance(f2, ip)),
        std::max(besant::distance(f1, ip), besant::distance(f2, ep)));
    CHECK(err < 1e-9);
}

TEST_CASE("batch input processes every line in order") {
    std::string path = "/tmp/besant_batch_input.txt";
    {
        std::ofstream out(path);
        out << "0,0 0,1 2,4 6.8,-2.4\n";
        out << "0,0 0,1 2,2 2,-1\n";
    }
    CliResult res = run_cli("classify --input-file " + path);
    CHECK(res.exit_code == 0);
    CHECK(count_occurrences(res.out, "\"flags\"") == 2);
    // first report is the reference example, second the trapezoid
    size_t first = res.out.find("\"besant\": true");
    size_t second = res.out.find("\"trapezoid\": true");
    CHECK(first != std::string::npos);
    CHECK(second != std::string::npos);
    CHECK(first < second);
    std::remove(path.c_str());
}

TEST_CASE("report helpers round to 12 significant digits") {
    CHECK(besant::report::round12(1.0 / 3.0) == Approx(0.333333333333).margin(1e-15));
    CHECK(besant::report::round12(123456789.123456789) == Approx(123456789.123).margin(1e-3));
}
