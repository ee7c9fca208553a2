#include "cli.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace kshg::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
    int status;
    std::string out;
    std::string err;
};

Result call(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int status = run(std::move(args), out, err);
    return {status, out.str(), err.str()};
}

class Cli : public ::testing::Test {
protected:
    void SetUp() override
    {
        dir_ = fs::temp_directory_path() /
               ("kshg_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    std::string write(const std::string& name, const std::string& text) const
    {
        std::ofstream(path(name)) << text;
        return path(name);
    }

    fs::path dir_;
};

bool contains(const std::string& text, const std::string& needle)
{
    return text.find(needle) != std::string::npos;
}

TEST_F(Cli, GenThenBound)
{
    const auto gen = call({"gen", "linear", "--k", "3", "--weight", "1", "-o", path("g.hg")});
    ASSERT_EQ(gen.status, exit_ok) << gen.err;
    const auto bound = call({"bound", path("g.hg")});
    ASSERT_EQ(bound.status, exit_ok) << bound.err;
    EXPECT_TRUE(contains(bound.out, "classical_bound = 6\n"));
    EXPECT_TRUE(contains(bound.out, "independence = 2\n"));
    EXPECT_TRUE(contains(bound.out, "witness = 1 3\n"));
}

TEST_F(Cli, GenPrintsFileWithoutOutput)
{
    const auto r = call({"gen", "cyclic", "--k", "3", "--weights", "1,2,0"});
    ASSERT_EQ(r.status, exit_ok) << r.err;
    EXPECT_EQ(r.out, "vertices 3\nedge 1 2 1\nedge 2 3 2\nedge 1 3 0\n");
}

TEST_F(Cli, CliftonDemo)
{
    const auto r = call({"demo", "clifton", "--n", "1"});
    ASSERT_EQ(r.status, exit_ok) << r.err;
    EXPECT_TRUE(r.out.ends_with("result = CONTRADICTION\n"));
    EXPECT_TRUE(contains(r.out, "step 6 = "));
    EXPECT_TRUE(contains(r.out, "e1:p0"));

    const auto consistent = call({"demo", "clifton", "--n", "1", "--q", "0"});
    EXPECT_TRUE(consistent.out.ends_with("result = CONSISTENT\n"));
}

TEST_F(Cli, WheelPipeline)
{
    ASSERT_EQ(call({"demo", "wheel7", "-o", path("w.rays")}).status, exit_ok);
    ASSERT_EQ(call({"gen", "wheel7", "--rays", path("w.rays"), "-o", path("w.hg")}).status, exit_ok);
    const auto q = call({"quantum", path("w.hg"), "--rays", path("w.rays")});
    ASSERT_EQ(q.status, exit_ok) << q.err;
    EXPECT_TRUE(contains(q.out, "classification = state-independent\n"));
    EXPECT_TRUE(contains(q.out, "independence = 2\n"));
}

TEST_F(Cli, JsonReportHasSameKeys)
{
    ASSERT_EQ(call({"gen", "complete", "--k", "4", "-o", path("k4.hg")}).status, exit_ok);
    const auto text = call({"bound", path("k4.hg")});
    const auto json = call({"--json", "bound", path("k4.hg")});
    ASSERT_EQ(json.status, exit_ok) << json.err;
    const auto j = nlohmann::json::parse(json.out);
    EXPECT_EQ(j.at("classical_bound").get<long>(), 13);
    EXPECT_EQ(j.at("witness"), nlohmann::json::array({1}));
    std::istringstream lines(text.out);
    std::size_t count = 0;
    for (std::string line; std::getline(lines, line); ++count)
        EXPECT_TRUE(j.contains(line.substr(0, line.find(" = ")))) << line;
    EXPECT_EQ(j.size(), count);
}

TEST_F(Cli, BruteAndMis)
{
    write("l2.hg", "vertices 2\nedge 1 2 2\n");
    const auto brute = call({"brute", path("l2.hg")});
    ASSERT_EQ(brute.status, exit_ok) << brute.err;
    EXPECT_TRUE(contains(brute.out, "brute_force_max = 5\n"));
    const auto mis = call({"mis", path("l2.hg"), "--expanded"});
    EXPECT_TRUE(contains(mis.out, "expanded_independence = 5\n"));
}

TEST_F(Cli, BruteCapacityExitCode)
{
    write("k3.hg", "vertices 3\nedge 1 2 1\nedge 1 3 1\nedge 2 3 1\n");
    ::setenv("KSHG_MAX_BITS", "12", 1);
    const auto r = call({"brute", path("k3.hg")});
    ::unsetenv("KSHG_MAX_BITS");
    EXPECT_EQ(r.status, exit_capacity);
    EXPECT_TRUE(contains(r.err, "independence"));
}

TEST_F(Cli, MisCapacityExitCode)
{
    ASSERT_EQ(call({"gen", "square-lattice", "--mx", "9", "--my", "8", "-o", path("big.hg")}).status, exit_ok);
    EXPECT_EQ(call({"bound", path("big.hg")}).status, exit_capacity);
    EXPECT_EQ(call({"bound", path("big.hg"), "--max-vertices", "100"}).status, exit_ok);
}

TEST_F(Cli, ExpandWithDot)
{
    write("l2.hg", "vertices 2\nedge 1 2 1\n");
    const auto r = call({"expand", path("l2.hg"), "--dot", path("g.dot")});
    ASSERT_EQ(r.status, exit_ok) << r.err;
    EXPECT_TRUE(contains(r.out, "vertices = 8\n"));
    EXPECT_TRUE(contains(r.out, "edges = 11\n"));
    std::ifstream dot(path("g.dot"));
    std::string first;
    std::getline(dot, first);
    EXPECT_EQ(first, "graph expanded {");
}

TEST_F(Cli, WeightsFromRays)
{
    write("t.rays", "1 0 1 0 1 0\n1 0 -1 0 -1 0\n# third\n-1 0 1 0 -1 0\n");
    const auto r = call({"weights", path("t.rays"), "--normalize"});
    ASSERT_EQ(r.status, exit_ok) << r.err;
    EXPECT_EQ(r.out, "vertices 3\nedge 1 2 1\nedge 1 3 1\nedge 2 3 1\n");

    write("p.rays", "1 0 0 0 0 0\n0.5 0 0.8660254037844386 0 0 0\n");
    const auto capped = call({"weights", path("p.rays"), "--cap", "1"});
    EXPECT_EQ(capped.out, "vertices 2\n");
}

TEST_F(Cli, CheckDecomposition)
{
    write("c4.hg", "vertices 4\nedge 1 2 1\nedge 2 3 2\nedge 3 4 1\nedge 1 4 2\n");
    const auto r = call({"check", "decomposition", path("c4.hg"), "--trials", "100", "--seed", "3"});
    ASSERT_EQ(r.status, exit_ok) << r.err;
    EXPECT_TRUE(contains(r.out, "failures = 0\n"));
    EXPECT_TRUE(contains(r.out, "result = PASS\n"));
}

TEST_F(Cli, Verify)
{
    write("l2.hg", "vertices 2\nedge 1 2 1\n");
    const double s = 0.7071067811865476, t = 0.5773502691896258;
    auto ray = [](double a, double b, double c) {
        return std::to_string(a) + " 0 " + std::to_string(b) + " 0 " + std::to_string(c) + " 0\n";
    };
    write("core.rays", ray(t, t, -t) + ray(t, t, t));
    // Expansion order: p0 q0 a+1 a-1 b+1 b-1.
    write("aux.rays", ray(1, 0, 0) + ray(0, 1, 0) + ray(0, s, s) + ray(s, 0, s) + ray(0, -s, s) + ray(-s, 0, s));
    const auto ok = call({"verify", path("l2.hg"), "--rays", path("core.rays"), "--aux", path("aux.rays"), "--tol",
                          "1e-5"});
    ASSERT_EQ(ok.status, exit_ok) << ok.err << ok.out;
    EXPECT_TRUE(contains(ok.out, "result = PASS\n"));

    write("bad.rays", ray(1, 0, 0) + ray(0, 1, 0) + ray(0, s, s) + ray(s, 0, s) + ray(0, s, s) + ray(-s, 0, s));
    const auto bad = call({"verify", path("l2.hg"), "--rays", path("core.rays"), "--aux", path("bad.rays")});
    EXPECT_EQ(bad.status, exit_validation);
    EXPECT_TRUE(contains(bad.out, "orthogonality = fail\n"));
    EXPECT_TRUE(contains(bad.out, "result = FAIL\n"));

    const auto missing = call({"verify", path("l2.hg"), "--rays", path("core.rays"), "--aux", path("core.rays")});
    EXPECT_EQ(missing.status, exit_validation);
    EXPECT_TRUE(contains(missing.err, "missing coordinates"));
}

TEST_F(Cli, ErrorPathsNameTheEntity)
{
    write("dup.hg", "vertices 2\nedge 1 2 1\nedge 1 2 2\n");
    const auto dup = call({"bound", path("dup.hg")});
    EXPECT_EQ(dup.status, exit_validation);
    EXPECT_TRUE(contains(dup.err, "line 3"));

    write("bad.rays", "1 0 1 0\n");
    write("g.hg", "vertices 1\n");
    const auto rays = call({"quantum", path("g.hg"), "--rays", path("bad.rays")});
    EXPECT_EQ(rays.status, exit_validation);
    EXPECT_TRUE(contains(rays.err, "line 1"));

    write("two.hg", "vertices 2\nedge 1 2 0\n");
    write("tetra.rays", "1 0 1 0 1 0\n1 0 -1 0 -1 0\n");
    const auto unreal = call({"quantum", path("two.hg"), "--rays", path("tetra.rays"), "--normalize"});
    EXPECT_EQ(unreal.status, exit_validation);
    EXPECT_TRUE(contains(unreal.err, "(1,2)"));
    const auto allowed =
        call({"quantum", path("two.hg"), "--rays", path("tetra.rays"), "--normalize", "--allow-unrealizable"});
    EXPECT_EQ(allowed.status, exit_ok) << allowed.err;

    const auto missing = call({"bound", path("nope.hg")});
    EXPECT_EQ(missing.status, exit_validation);
    EXPECT_TRUE(contains(missing.err, "nope.hg"));

    const auto torus = call({"gen", "torus-lattice", "--mx", "2", "--my", "3"});
    EXPECT_EQ(torus.status, exit_validation);
    EXPECT_TRUE(contains(torus.err, "torus-lattice"));

    EXPECT_EQ(call({"frobnicate"}).status, exit_validation);
    EXPECT_EQ(call({}).status, exit_validation);
    EXPECT_EQ(call({"--help"}).status, exit_ok);
}

TEST_F(Cli, ReportsAreDeterministic)
{
    for (int round = 0; round < 2; ++round)
        ASSERT_EQ(call({"gen", "fractal-cyclic", "--k", "2", "-o", path("fc.hg")}).status, exit_ok);
    const auto a = call({"check", "decomposition", path("fc.hg"), "--trials", "20", "--seed", "9"});
    const auto b = call({"check", "decomposition", path("fc.hg"), "--trials", "20", "--seed", "9"});
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(call({"bound", path("fc.hg")}).out, call({"bound", path("fc.hg")}).out);
}

} // namespace
} // namespace kshg::cli
