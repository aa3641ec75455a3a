#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "mmp/moment_problem.hpp"
#include "mmp/problem_file.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// Runs the CLI with the given argument string; captures exit code, stdout
// and stderr through temp files in the test working directory.
RunResult run_cli(const std::string& args) {
    static int counter = 0;
    const std::string tag = "cli_test_" + std::to_string(counter++);
    const std::string out_path = tag + ".out";
    const std::string err_path = tag + ".err";
    const std::string cmd = std::string(MMP_CLI_PATH) + " " + args + " > " +
                            out_path + " 2> " + err_path;
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out_path);
    r.err = slurp(err_path);
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return r;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
}

std::string switches_file(const std::vector<double>& pts) {
    std::ostringstream os;
    os << "schema_version 1\nkind switches\nvalues";
    for (double p : pts) {
        os << ' ' << mmp::format_double(p);
    }
    os << "\n";
    return os.str();
}

std::string moments_file(const std::vector<double>& m) {
    std::ostringstream os;
    os << "schema_version 1\nkind moments\nvalues";
    for (double v : m) {
        os << ' ' << mmp::format_double(v);
    }
    os << "\n";
    return os.str();
}

mmp::ProblemFile parse_output(const std::string& text) {
    std::istringstream in(text);
    return mmp::read_problem_file(in);
}

}  // namespace

TEST_CASE("cli: help and missing subcommand") {
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
}

TEST_CASE("cli: forward computes moments and reports K, X") {
    write_file("fwd_in.txt", switches_file({0.25, 0.75}));
    const RunResult r = run_cli("forward fwd_in.txt");
    CHECK(r.exit_code == 0);
    const mmp::ProblemFile out = parse_output(r.out);
    CHECK(out.kind == mmp::ProblemKind::moments);
    CHECK(out.values == std::vector<double>{0.5, 0.5});
    CHECK(r.err.find("K=2") != std::string::npos);
    CHECK(r.err.find("X=0.75") != std::string::npos);
    std::remove("fwd_in.txt");
}

TEST_CASE("cli: forward rejects bad inputs with exit 2") {
    write_file("fwd_bad.txt", "schema_version 1\nkind switches\nvalues 0.5 0.2\n");
    CHECK(run_cli("forward fwd_bad.txt").exit_code == 2);
    write_file("fwd_bad.txt", moments_file({0.5, 0.5}));
    CHECK(run_cli("forward fwd_bad.txt").exit_code == 2);
    CHECK(run_cli("forward no_such_file.txt").exit_code == 2);
    std::remove("fwd_bad.txt");
}

TEST_CASE("cli: invert recovers the K=2 fixture") {
    write_file("inv_in.txt", moments_file({0.5, 0.5}));
    const RunResult r = run_cli("invert inv_in.txt");
    CHECK(r.exit_code == 0);
    const mmp::ProblemFile out = parse_output(r.out);
    CHECK(out.kind == mmp::ProblemKind::switches);
    REQUIRE(out.values.size() == 2);
    CHECK(out.values[0] == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(out.values[1] == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(r.err.find("status=ok") != std::string::npos);
    CHECK(r.err.find("residual_inf=") != std::string::npos);
    CHECK(r.err.find("min_gap=") != std::string::npos);
    CHECK(r.err.find("eig_imag_max=") != std::string::npos);
    std::remove("inv_in.txt");
}

TEST_CASE("cli: invert writes the output file when asked") {
    write_file("inv_in2.txt", moments_file({0.5, 0.5}));
    const RunResult r = run_cli("invert inv_in2.txt -o inv_out2.txt");
    CHECK(r.exit_code == 0);
    CHECK(r.out.empty());
    const mmp::ProblemFile out = mmp::load_problem_file("inv_out2.txt");
    CHECK(out.kind == mmp::ProblemKind::switches);
    CHECK(out.values[0] == doctest::Approx(0.25));
    std::remove("inv_in2.txt");
    std::remove("inv_out2.txt");
}

TEST_CASE("cli: invert error exit codes") {
    write_file("inv_odd.txt", "schema_version 1\nkind moments\nvalues 1 2 3\n");
    CHECK(run_cli("invert inv_odd.txt").exit_code == 2);
    std::remove("inv_odd.txt");

    write_file("inv_neg.txt", moments_file({1.0, -1.0}));
    CHECK(run_cli("invert inv_neg.txt").exit_code == 3);
    std::remove("inv_neg.txt");

    const mmp::MomentVector dup = mmp::forward_moments(
        mmp::SwitchConfiguration({0.3, 0.3, 0.6, 0.9}));
    write_file("inv_dup.txt", moments_file(dup.values()));
    CHECK(run_cli("invert inv_dup.txt").exit_code == 4);
    std::remove("inv_dup.txt");
}

TEST_CASE("cli: invert with rescaling records the domain scale") {
    // K=4 fixture scaled to [0, 36]
    const double s = 40.0;
    std::vector<double> scaled{0.5, 0.53, 0.539, 0.5345};
    double sk = 1.0;
    for (double& v : scaled) {
        sk *= s;
        v *= sk;
    }
    write_file("inv_scaled.txt", moments_file(scaled));
    const RunResult r = run_cli("invert inv_scaled.txt --rescale --scale 40");
    CHECK(r.exit_code == 0);
    const mmp::ProblemFile out = parse_output(r.out);
    REQUIRE(out.values.size() == 4);
    CHECK(out.values[0] == doctest::Approx(4.0).epsilon(1e-6));
    CHECK(out.values[3] == doctest::Approx(36.0).epsilon(1e-6));
    REQUIRE(out.domain_scale.has_value());
    CHECK(*out.domain_scale == 40.0);
    std::remove("inv_scaled.txt");
}

TEST_CASE("cli: forward then invert composes to the identity") {
    write_file("comp_in.txt", switches_file({0.1, 0.3, 0.6, 0.9}));
    const RunResult fwd = run_cli("forward comp_in.txt -o comp_m.txt");
    REQUIRE(fwd.exit_code == 0);
    const RunResult inv = run_cli("invert comp_m.txt");
    CHECK(inv.exit_code == 0);
    const mmp::ProblemFile out = parse_output(inv.out);
    const std::vector<double> expect{0.1, 0.3, 0.6, 0.9};
    REQUIRE(out.values.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(out.values[i] == doctest::Approx(expect[i]).epsilon(1e-8));
    }
    std::remove("comp_in.txt");
    std::remove("comp_m.txt");
}

TEST_CASE("cli: roundtrip emits deterministic CSV") {
    const std::string args = "roundtrip --n 1 --trials 5 --gap 0.2 --seed 7";
    const RunResult first = run_cli(args);
    CHECK(first.exit_code == 0);
    CHECK(first.out.rfind("trial,error,status\n", 0) == 0);
    CHECK(first.err.find("failures=0") != std::string::npos);

    // n = 1 inverts in closed form; every error is tiny
    std::istringstream csv(first.out);
    std::string line;
    std::getline(csv, line);  // header
    int rows = 0;
    while (std::getline(csv, line)) {
        const std::size_t c1 = line.find(',');
        const std::size_t c2 = line.find(',', c1 + 1);
        REQUIRE(c1 != std::string::npos);
        REQUIRE(c2 != std::string::npos);
        CHECK(std::stod(line.substr(c1 + 1, c2 - c1 - 1)) <= 1e-10);
        CHECK(line.substr(c2 + 1) == "ok");
        ++rows;
    }
    CHECK(rows == 5);

    const RunResult second = run_cli(args);
    CHECK(second.out == first.out);

    CHECK(run_cli("roundtrip --n 2 --trials 5 --gap 0.3").exit_code == 2);
    CHECK(run_cli("roundtrip --n 0").exit_code == 2);
}

TEST_CASE("cli: probe baseline matches the library computation") {
    write_file("probe_in.txt", switches_file({0.1, 0.3, 0.6, 0.9}));
    const RunResult r = run_cli("probe probe_in.txt --eps 0 --trials 1 --seed 3");
    CHECK(r.exit_code == 0);

    const mmp::SwitchConfiguration u({0.1, 0.3, 0.6, 0.9});
    const mmp::TrialStats expect = mmp::perturbation_probe(u, 0.0, 1, 3);
    std::istringstream csv(r.out);
    std::string line;
    std::getline(csv, line);
    REQUIRE(std::getline(csv, line));
    const std::size_t c1 = line.find(',');
    const std::size_t c2 = line.find(',', c1 + 1);
    CHECK(line.substr(0, c1) == "0");
    CHECK(line.substr(c1 + 1, c2 - c1 - 1) ==
          mmp::format_double(expect.trials[0].error));
    CHECK(line.substr(c2 + 1) == "ok");
    std::remove("probe_in.txt");
}

TEST_CASE("cli: selftest passes on a fresh build") {
    const RunResult r = run_cli("selftest");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("ok   fixture_k2") != std::string::npos);
    CHECK(r.out.find("ok   fixture_k4") != std::string::npos);
    CHECK(r.out.find("0 failed") != std::string::npos);

    const RunResult again = run_cli("selftest");
    CHECK(again.out == r.out);
}
