#include <gtest/gtest.h>
#include <nlohmann/json.hpp>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

struct Run {
    int code = -1;
    std::string out, err;
};

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Run run(const std::string& args) {
    static int counter = 0;
    const auto err = std::filesystem::temp_directory_path() / ("fqt_cli_err_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    const std::string cmd = std::string(FQT_CLI_PATH) + " " + args + " 2>" + err.string();
    Run r;
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    const int status = ::pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.err = slurp(err);
    std::filesystem::remove(err);
    return r;
}

std::string data(const char* name) { return std::string(FQT_DATA_DIR) + "/" + name; }

}  // namespace

TEST(Cli, DnReport) {
    const auto r = run("dn --q 2 --n 3");
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["d_n"], 10);
    EXPECT_EQ(j["lower"], 8);
    EXPECT_EQ(j["upper"], 16);
    EXPECT_EQ(j["ok"], true);
    EXPECT_EQ(j["config"]["command"], "dn");
}

TEST(Cli, VerifyP3OnSampleTable) {
    const auto r = run("verify-p3 --table " + data("square_q2_d3.json"));
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["report"]["pass"], true);
    EXPECT_EQ(j["report"]["irreducibles_checked"], 5);
}

TEST(Cli, CounterexampleCertifies) {
    const auto r = run("build-counterexample --q 2 --D 4 --trace");
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_TRUE(j.contains("table"));
    EXPECT_TRUE(j.contains("trace"));
}

TEST(Cli, VerificationFailureExitsTwo) {
    const auto tmp = std::filesystem::temp_directory_path() / ("fqt_cli_bad_" + std::to_string(::getpid()) + ".json");
    const auto made = run("make-table --q 2 --D 2 --map \"t,0,1\"");
    ASSERT_EQ(made.code, 0) << made.err;
    auto bad = nlohmann::ordered_json::parse(made.out);
    // swap two values so the map stops being congruent
    auto& vals = bad.contains("table") ? bad["table"]["values"] : bad["values"];
    std::swap(vals[2][1], vals[5][1]);
    std::ofstream(tmp) << bad.dump();
    const auto r = run("verify-p3 --table " + tmp.string());
    EXPECT_EQ(r.code, 2) << r.out << r.err;
    std::filesystem::remove(tmp);
}

TEST(Cli, DistinctErrorMessages) {
    const auto unknown = run("frobnicate");
    EXPECT_EQ(unknown.code, 1);
    EXPECT_NE(unknown.err.find("unknown subcommand"), std::string::npos) << unknown.err;

    const auto budget = run("build-counterexample --q 2 --D 8 --budget 16");
    EXPECT_EQ(budget.code, 1);
    EXPECT_NE(budget.err.find("budget exceeded"), std::string::npos) << budget.err;

    const auto parse = run("large-factor --q 2 --A \"t^^2\" --U t --M-floor 2");
    EXPECT_EQ(parse.code, 1);
    EXPECT_NE(parse.err.find("malformed polynomial literal"), std::string::npos) << parse.err;

    const auto field = run("dn --q 6 --n 2");
    EXPECT_EQ(field.code, 1);
    EXPECT_FALSE(field.err.empty());
    EXPECT_EQ(field.err.find("budget exceeded"), std::string::npos);
}

TEST(Cli, ByteIdenticalAcrossRunsAndThreads) {
    for (const std::string& args : std::vector<std::string>{"build-counterexample --q 3 --D 3", "verify-p3 --q 2 --table " + data("square_q2_d3.json"),
                                   "sunit-orbits --q 2 --gens \"t,t+1\" --E 4", "delta-lab --q 3 --U t --n 8 --format csv"}) {
        const auto a = run(args + " --threads 1"), b = run(args + " --threads 1"), c = run(args + " --threads 8");
        ASSERT_EQ(a.code, 0) << args << a.err;
        EXPECT_EQ(a.out, b.out) << args;
        EXPECT_EQ(a.out, c.out) << args;
    }
}

TEST(Cli, OutFileMatchesStdout) {
    const auto tmp = std::filesystem::temp_directory_path() / ("fqt_cli_out_" + std::to_string(::getpid()) + ".json");
    const auto a = run("irreducibles --q 3 --n 2");
    const auto b = run("irreducibles --q 3 --n 2 --out " + tmp.string());
    ASSERT_EQ(a.code, 0);
    ASSERT_EQ(b.code, 0);
    auto ja = nlohmann::json::parse(a.out), jb = nlohmann::json::parse(slurp(tmp));
    ja["config"].erase("out");
    jb["config"].erase("out");
    EXPECT_EQ(ja, jb);
    std::filesystem::remove(tmp);
}

TEST(Cli, PipelineRecoversPolynomialMap) {
    const auto tmp = std::filesystem::temp_directory_path() / ("fqt_cli_cube_" + std::to_string(::getpid()) + ".json");
    const auto made = run("make-table --q 2 --D 5 --map \"0,t,0,1\" --out " + tmp.string());
    ASSERT_EQ(made.code, 0) << made.err;
    const auto r = run("pipeline --table " + tmp.string());
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("X^3 + (t)*X"), std::string::npos);
    std::filesystem::remove(tmp);
}
