#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "exhaustion/cli.hpp"
#include "exhaustion/report.hpp"

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "exhaust");
    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = exhaustion::cli::run(static_cast<int>(argv.size()),
                                          argv.data(), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("integrate: converged run exits 0 and emits parseable json") {
    const auto r = run_cli({"integrate", "--fn", "x^2", "--a", "0", "--b", "1",
                            "--tol", "1e-6"});
    CHECK(r.code == 0);
    const auto report = exhaustion::report_from_json(r.out);
    CHECK(report.result.converged);
    CHECK(std::abs(report.result.value - 1.0 / 3.0) < 1e-5);
    CHECK(report.per_level.size() ==
          static_cast<std::size_t>(report.result.levels_used));
}

TEST_CASE("integrate: unreachable tolerance exits 2") {
    const auto r = run_cli({"integrate", "--fn", "exp(x)", "--a", "0", "--b",
                            "1", "--tol", "1e-12", "--max-level", "8"});
    CHECK(r.code == 2);
}

TEST_CASE("integrate: parse failure exits 3 with offset diagnostics") {
    const auto r = run_cli({"integrate", "--fn", "sin(", "--a", "0", "--b", "1"});
    CHECK(r.code == 3);
    CHECK(r.err.find("offset 4") != std::string::npos);
}

TEST_CASE("integrate: non-finite sample exits 4 and names the node") {
    const auto r = run_cli({"integrate", "--fn", "ln(x)", "--a", "-1", "--b", "1"});
    CHECK(r.code == 4);
    CHECK(r.err.find("x = 0") != std::string::npos);
}

TEST_CASE("integrate: csv format starts with the table header") {
    const auto r = run_cli({"integrate", "--fn", "1", "--a", "0", "--b", "1",
                            "--max-level", "3", "--min-level", "3", "--format",
                            "csv"});
    CHECK(r.out.rfind("level,A_n,partial,error_ratio\n1,0.5,0.5,0.5\n", 0) == 0);
}

TEST_CASE("identical invocations produce byte-identical reports") {
    const std::vector<std::string> args{"integrate", "--fn", "sin(x)/x",
                                        "--a", "0", "--b", "1",
                                        "--tol", "1e-7"};
    const auto r1 = run_cli(args);
    const auto r2 = run_cli(args);
    CHECK(r1.code == r2.code);
    CHECK(r1.out == r2.out);
}

TEST_CASE("improper subcommand converges on the exponential") {
    const auto r = run_cli({"improper", "--fn", "exp(-x)", "--block", "1.0",
                            "--tail-tol", "1e-9", "--tol", "1e-6"});
    CHECK(r.code == 0);
    const auto report = exhaustion::report_from_json(r.out);
    CHECK(std::abs(report.result.value - 1.0) < 1e-4);
}

TEST_CASE("series subcommand evaluates and validates") {
    const auto r = run_cli({"series", "--id", "ln", "--x", "2", "--levels", "20"});
    CHECK(r.code == 0);
    CHECK(std::abs(std::stod(r.out) - 0.6931471805599453) < 1e-5);

    const auto missing = run_cli({"series", "--id", "gaussian", "--x", "1"});
    CHECK(missing.code == 3);

    const auto bad_domain =
        run_cli({"series", "--id", "ln", "--x", "-3", "--levels", "10"});
    CHECK(bad_domain.code == 3);

    const auto unknown = run_cli({"series", "--id", "nope", "--x", "1"});
    CHECK(unknown.code == 3);
}

TEST_CASE("diffract emits the field slice header and grid") {
    const auto r = run_cli({"diffract", "--aperture", "unit", "--k", "1",
                            "--slice", "z=5", "--extent", "1", "--samples", "3",
                            "--levels", "4"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("x,y,z,re_phi,im_phi,abs_phi\n", 0) == 0);
    // header + 3x3 grid
    int lines = 0;
    for (char c : r.out) lines += (c == '\n');
    CHECK(lines == 10);

    const auto bad = run_cli({"diffract", "--k", "1", "--slice", "y=5"});
    CHECK(bad.code == 3);
}

TEST_CASE("diffract --spectrum emits component rows") {
    const auto r = run_cli({"diffract", "--aperture", "unit", "--k", "2",
                            "--slice", "z=5", "--levels", "2", "--spectrum"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("n,m,p,q,kx,ky,weight,kz,group_speed_z,evanescent\n", 0) ==
          0);
    int lines = 0;
    for (char c : r.out) lines += (c == '\n');
    CHECK(lines == 1 + 16);  // (1 + 3)^2 components through level 2
}

TEST_CASE("bench emits the matched-budget table") {
    const auto r = run_cli({"bench", "--suite", "default", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("function,method,eval_count,abs_error\n", 0) == 0);
    CHECK(r.out.find("exp,exhaustion,15,") != std::string::npos);
    CHECK(r.out.find("lorentzian,simpson,262143,") != std::string::npos);
}

TEST_CASE("EXH_THREADS changes scheduling, never bytes") {
    const std::vector<std::string> args{"integrate", "--fn", "exp(x)",
                                        "--a", "0", "--b", "1",
                                        "--max-level", "17", "--min-level", "17"};
    const auto serial = run_cli(args);
    setenv("EXH_THREADS", "3", 1);
    const auto pooled = run_cli(args);
    unsetenv("EXH_THREADS");
    CHECK(serial.code == pooled.code);
    CHECK(serial.out == pooled.out);
}

TEST_CASE("help and usage errors") {
    const auto help = run_cli({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("integrate") != std::string::npos);

    const auto none = run_cli({});
    CHECK(none.code == 3);

    const auto unknown = run_cli({"frobnicate"});
    CHECK(unknown.code == 3);
}
