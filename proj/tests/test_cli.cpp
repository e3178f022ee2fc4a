#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

std::string cli_path()
{
    const char* p = std::getenv("SALBOUNDS_CLI");
    REQUIRE_MESSAGE(p != nullptr, "SALBOUNDS_CLI must point at the built binary");
    return p;
}

int run(const std::string& args, const std::string& out_file)
{
    const std::string cmd = cli_path() + " " + args + " > " + out_file + " 2>&1";
    const int rc = std::system(cmd.c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("usage errors exit with 2")
{
    CHECK(run("bounds", "/tmp/cli_usage.txt") == 2);                       // no parameters
    CHECK(run("bounds --mu 1 --nu 1 --N 3 --m 1 --a 1 --v 1",
              "/tmp/cli_usage.txt") == 2);                                 // conflicting groups
    CHECK(run("bounds --mu 1 --nu -2", "/tmp/cli_usage.txt") == 2);        // bad value
    CHECK(run("frobnicate", "/tmp/cli_usage.txt") == 2);                   // unknown subcommand
    CHECK(run("--help", "/tmp/cli_usage.txt") == 0);
}

TEST_CASE("bounds row at nu = 1 matches the table")
{
    REQUIRE(run("bounds --mu 1 --nu 1", "/tmp/cli_bounds.txt") == 0);
    const std::string out = slurp("/tmp/cli_bounds.txt");
    CHECK(out.find("e_k  = 0.980383") != std::string::npos);
    CHECK(out.find("e_g  = 1.00226") != std::string::npos);
    CHECK(out.find("e_2g = 0.917723") != std::string::npos);
}

TEST_CASE("bounds --json reports absences with reasons")
{
    REQUIRE(run("bounds --mu 1 --nu 0.6 --json", "/tmp/cli_bounds.json") == 0);
    const std::string out = slurp("/tmp/cli_bounds.json");
    CHECK(out.find("\"e_g\": null") != std::string::npos);
    CHECK(out.find("no-stationary-minimum") != std::string::npos);
    CHECK(out.find("\"e_2g\":") != std::string::npos);
}

TEST_CASE("physical parameters collapse to scaled ones")
{
    REQUIRE(run("bounds --N 2 --m 1 --a 1 --v 2", "/tmp/cli_phys.csv") == 0);
    REQUIRE(run("bounds --mu 1 --nu 1 --lambda 0.5", "/tmp/cli_scaled.csv") == 0);
    const std::string phys = slurp("/tmp/cli_phys.csv");
    const std::string scaled = slurp("/tmp/cli_scaled.csv");
    // same bound values in both outputs
    CHECK(phys.find("0.980383") != std::string::npos);
    CHECK(scaled.find("0.980383") != std::string::npos);
}

TEST_CASE("sweep is deterministic across runs and worker counts")
{
    const std::string args = "sweep --mu 1 --nu-min 2 --nu-max 3 --steps 3";
    REQUIRE(run(args + " --jobs 1 --out /tmp/cli_sweep1.csv", "/tmp/cli_sweep.log") == 0);
    REQUIRE(run(args + " --jobs 1 --out /tmp/cli_sweep2.csv", "/tmp/cli_sweep.log") == 0);
    REQUIRE(run(args + " --jobs 4 --out /tmp/cli_sweep4.csv", "/tmp/cli_sweep.log") == 0);
    const std::string a = slurp("/tmp/cli_sweep1.csv");
    CHECK(a == slurp("/tmp/cli_sweep2.csv"));
    CHECK(a == slurp("/tmp/cli_sweep4.csv"));
    CHECK(a.find("nu,e_k,e_g,e_2g") != std::string::npos);
    // three data rows
    int rows = 0;
    for (char c : a)
        if (c == '\n') ++rows;
    CHECK(rows == 4);
}

TEST_CASE("curves emits F values on or below zero")
{
    REQUIRE(run("curves --nu-list 1 --e-min 0.9 --e-max 1.0 --steps 5",
                "/tmp/cli_curves.csv") == 0);
    std::ifstream in("/tmp/cli_curves.csv");
    std::string line;
    std::getline(in, line);
    CHECK(line == "kind,param,e,value,exists");
    int f_rows = 0;
    while (std::getline(in, line)) {
        if (line.rfind("F,", 0) != 0) continue;
        ++f_rows;
        const auto p1 = line.find(',', 2);
        const auto p2 = line.find(',', p1 + 1);
        const auto p3 = line.find(',', p2 + 1);
        const double F = std::stod(line.substr(p2 + 1, p3 - p2 - 1));
        CHECK(F <= 0.0);
    }
    CHECK(f_rows == 5);
}

TEST_CASE("jacobi-check passes and reports")
{
    REQUIRE(run("jacobi-check --n-max 8", "/tmp/cli_jacobi.csv") == 0);
    const std::string out = slurp("/tmp/cli_jacobi.csv");
    CHECK(out.find("PASS") != std::string::npos);
    CHECK(out.find("FAIL") == std::string::npos);
}

TEST_CASE("missing output directory is a numerical-environment error")
{
    CHECK(run("bounds --mu 1 --nu 0.6 --out /nonexistent-dir/x.csv",
              "/tmp/cli_badout.txt") == 3);
}
