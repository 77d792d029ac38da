#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cimeans/errors.hpp"
#include "cimeans/harness.hpp"
#include "cimeans/report.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

using namespace cimeans;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

/// Runs the installed binary with stdout/stderr captured to scratch files.
RunResult run_cli(const std::string& args) {
    const std::string dir = "cli_scratch";
    std::filesystem::create_directories(dir);
    const std::string out_path = dir + "/stdout.txt";
    const std::string err_path = dir + "/stderr.txt";
    const std::string cmd =
        std::string(CIMEANS_BIN) + " " + args + " > " + out_path + " 2> " + err_path;
    const int raw = std::system(cmd.c_str());
    RunResult res;
    res.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    res.out = slurp(out_path);
    res.err = slurp(err_path);
    return res;
}

InequalityReport sample_report() {
    InequalityReport rep;
    rep.tc.theorem = TheoremId::T2Central;
    rep.tc.n = 1;
    rep.tc.r = 1.0;
    rep.tc.s = 2.0;
    rep.tc.alpha = 2.0;
    rep.tc.gamma = 1.0;
    rep.tc.R = 0.0;
    rep.tc.f_label = "indicator:a=0:b=1";
    rep.lhs = 2.0 / 3.0;
    rep.rhs = 2.0;
    rep.constant = 4.0 / 9.0;
    rep.ratio = 0.75;
    rep.verdict = Verdict::Pass;
    return rep;
}

} // namespace

TEST_CASE("numbers format compactly and deterministically") {
    CHECK(format_number(768.0) == "768");
    CHECK(format_number(0.75) == "0.75");
    CHECK(format_number(2359296.0) == "2359296");
    CHECK(format_number(1.0 / 3.0) == "0.3333333333");
}

TEST_CASE("csv output carries the fixed header and one row per report") {
    const std::string csv = reports_to_csv({sample_report()});
    std::istringstream lines(csv);
    std::string header, row, extra;
    REQUIRE(std::getline(lines, header));
    REQUIRE(std::getline(lines, row));
    CHECK_FALSE(std::getline(lines, extra));
    CHECK(header == "theorem,n,r,s,alpha,gamma,R,f_label,b_label,lhs,rhs,constant,ratio,verdict");
    CHECK(row == "T2-central,1,1,2,2,1,0,indicator:a=0:b=1,,0.6666666667,2,0.4444444444,0.75,pass");
}

TEST_CASE("summary json reports zero counts for an all-skipped sweep") {
    SweepResult res;
    TheoremSummary row;
    row.theorem = "T1-central";
    row.skipped = 3;
    res.summary.push_back(row);
    const std::string json = summary_to_json(res);
    CHECK(json.find("\"cases\": 0") != std::string::npos);
    CHECK(json.find("\"passes\": 0") != std::string::npos);
    CHECK(json.find("\"skipped\": 3") != std::string::npos);
    CHECK(json.find("\"max_ratio\": 0.0") != std::string::npos);
}

TEST_CASE("output paths prefer the flag, then the environment, then cwd") {
    CHECK(resolve_output_path("/abs/report.csv", "elsewhere") == "/abs/report.csv");
    CHECK(resolve_output_path("report.csv", "outdir") == "outdir/report.csv");
    setenv("CIMEANS_OUTPUT_DIR", "envdir", 1);
    CHECK(resolve_output_path("report.csv", "outdir") == "outdir/report.csv");
    CHECK(resolve_output_path("report.csv") == "envdir/report.csv");
    unsetenv("CIMEANS_OUTPUT_DIR");
    CHECK(resolve_output_path("report.csv") == "report.csv");
}

TEST_CASE("unwritable report paths are rejected") {
    CHECK_THROWS_AS(write_text_file("no_such_dir/report.csv", "x"), InvalidParameterError);
}

TEST_CASE("constants subcommand prints the catalogued value") {
    const RunResult res = run_cli("constants --c1 --n 1 --alpha 2 --r 1");
    CHECK(res.exit_code == 0);
    CHECK(res.out == "768\n");
}

TEST_CASE("eval-mean prints the closed-form power mean") {
    const RunResult res = run_cli("eval-mean --f power:beta=1 --n 1 --r 2 --alpha 1 --R 1");
    CHECK(res.exit_code == 0);
    CHECK(res.out == "0.5773503\n");
}

TEST_CASE("check rejects a companion case with alpha above one") {
    const RunResult res = run_cli("check --theorem 3 --companion --alpha 2 --n 1 --r 1 --s 2 "
                                  "--gamma 1 --R 2 --f indicator:a=0:b=1 "
                                  "--b sinlog:amplitude=1:phase=0");
    CHECK(res.exit_code == 2);
    CHECK(res.err.find("alpha < 1 required") != std::string::npos);
}

TEST_CASE("check emits one csv row for a passing case") {
    const RunResult res = run_cli("check --theorem 2 --n 1 --r 1 --s 2 --alpha 2 --gamma 1 "
                                  "--f indicator:a=0:b=1");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("T2-central,1,1,2,2,1,0,indicator:a=0:b=1,") != std::string::npos);
    CHECK(res.out.find(",pass\n") != std::string::npos);
}

TEST_CASE("unknown flags exit with usage code") {
    const RunResult res = run_cli("constants --c9");
    CHECK(res.exit_code == 2);
}

TEST_CASE("constants requires exactly one selector") {
    CHECK(run_cli("constants --n 1 --alpha 2 --r 1").exit_code == 2);
    CHECK(run_cli("constants --c1 --c2 --n 1 --alpha 2 --r 1").exit_code == 2);
}

TEST_CASE("divergent evaluation exits with the numerical code") {
    const RunResult res = run_cli("eval-mean --f const:c=1 --companion --n 1 --r 1 --alpha 2 --R 1");
    CHECK(res.exit_code == 3);
    CHECK(res.err.find("error:") != std::string::npos);
}

TEST_CASE("cmo-norm upper bound covers the grid estimate") {
    const RunResult upper = run_cli("cmo-norm --b sinlog:amplitude=1:phase=0 --n 1 --upper");
    const RunResult lower = run_cli("cmo-norm --b sinlog:amplitude=1:phase=0 --n 1 --p 1");
    REQUIRE(upper.exit_code == 0);
    REQUIRE(lower.exit_code == 0);
    CHECK(std::stod(upper.out) >= std::stod(lower.out));
}

TEST_CASE("proof-path emits the decomposition as a json document") {
    const RunResult res = run_cli("proof-path --f indicator:a=0:b=1 "
                                  "--b sinlog:amplitude=1:phase=0 --n 1 --r 1 --alpha 2 --x 1.7");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("\"I1\"") != std::string::npos);
    CHECK(res.out.find("\"bound_constant\": 24.0") != std::string::npos);
    CHECK(res.out.find("\"shells\"") != std::string::npos);
}

TEST_CASE("sweep writes byte-identical reports on repeated runs") {
    const std::string dir = "cli_scratch/sweep_out";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    const std::string grid = "cli_scratch/grid.txt";
    write_text_file(grid, "n = 1\n"
                          "r = 1\n"
                          "s = 2r 3\n"
                          "alpha = 2\n"
                          "gamma = 1\n"
                          "R = 1 5\n"
                          "negative_r =\n"
                          "theorems = T1-central T2-central T3-central\n"
                          "f = indicator:a=0:b=1 const:c=1\n"
                          "b = sinlog:amplitude=1:phase=0\n");
    const std::string args = "sweep --grid " + grid + " --output-dir " + dir;
    const RunResult first = run_cli(args);
    REQUIRE(first.exit_code == 0);
    const std::string csv1 = slurp(dir + "/sweep.csv");
    const std::string json1 = slurp(dir + "/sweep.json");
    const RunResult second = run_cli(args);
    REQUIRE(second.exit_code == 0);
    CHECK(slurp(dir + "/sweep.csv") == csv1);
    CHECK(slurp(dir + "/sweep.json") == json1);
    CHECK(first.out == second.out);
    CHECK(json1.find("\"failures\": 0") != std::string::npos);
    // Header plus one line per evaluated case, all sorted by case key.
    std::istringstream lines(csv1);
    std::string line;
    std::vector<std::string> rows;
    while (std::getline(lines, line)) rows.push_back(line);
    REQUIRE(rows.size() > 2);
    for (std::size_t i = 2; i < rows.size(); ++i) CHECK(rows[i - 1] < rows[i]);
}

TEST_CASE("sweep honors the output directory environment variable") {
    const std::string dir = "cli_scratch/env_out";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    const std::string grid = "cli_scratch/env_grid.txt";
    write_text_file(grid, "n = 1\nr = 1\ns = 3\nalpha = 2\ngamma = 1\nR = 1\nnegative_r =\n"
                          "theorems = T1-central\nf = const:c=1\n");
    setenv("CIMEANS_OUTPUT_DIR", dir.c_str(), 1);
    const RunResult res = run_cli("sweep --grid " + grid);
    unsetenv("CIMEANS_OUTPUT_DIR");
    REQUIRE(res.exit_code == 0);
    CHECK(std::filesystem::exists(dir + "/sweep.csv"));
    CHECK(std::filesystem::exists(dir + "/sweep.json"));
}

TEST_CASE("sweep with nothing admissible emits a summary-only document") {
    const std::string grid = "cli_scratch/empty_grid.txt";
    std::filesystem::create_directories("cli_scratch");
    write_text_file(grid, "n = 1\nr = 2\ns = r\nalpha = 2\ngamma = 1\nR = 1\nnegative_r =\n"
                          "theorems = T1-central\nf = const:c=1\n");
    const std::string dir = "cli_scratch/empty_out";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    const RunResult res = run_cli("sweep --grid " + grid + " --output-dir " + dir);
    REQUIRE(res.exit_code == 0);
    CHECK(res.out.find("\"cases\": 0") != std::string::npos);
    CHECK(res.out.find("\"skipped\": 1") != std::string::npos);
    const std::string csv = slurp(dir + "/sweep.csv");
    CHECK(csv == "theorem,n,r,s,alpha,gamma,R,f_label,b_label,lhs,rhs,constant,ratio,verdict\n");
}
