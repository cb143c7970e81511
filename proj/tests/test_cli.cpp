#include <fatpoints/json_io.hpp>
#include <fatpoints/configs.hpp>

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

using namespace fatpoints;
namespace fs = std::filesystem;

namespace {

struct Run {
    int status = -1;
    std::string out;
};

// stdout of the command, stderr folded in when `merge` is set
Run run(const std::string &args, bool merge = false) {
    const std::string cmd = std::string(FATPOINTS_CLI) + " " + args + (merge ? " 2>&1" : " 2>/dev/null");
    Run r;
    FILE *p = popen(cmd.c_str(), "r");
    if (!p)
        return r;
    std::array<char, 4096> buf;
    while (std::size_t n = fread(buf.data(), 1, buf.size(), p))
        r.out.append(buf.data(), n);
    const int st = pclose(p);
    r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

class Cli : public ::testing::Test {
  protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("fatpoints_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string write(const std::string &name, const std::string &text) {
        const auto path = dir_ / name;
        std::ofstream(path) << text;
        return path.string();
    }
    std::string path(const std::string &name) const { return (dir_ / name).string(); }

    fs::path dir_;
};

} // namespace

TEST_F(Cli, GenRoundTrip) {
    const auto r = run("gen example-quartic");
    ASSERT_EQ(r.status, 0);
    EXPECT_EQ(config_from_text(r.out), example_quartic_config());
    const auto f = run("gen fermat --n 3");
    ASSERT_EQ(f.status, 0);
    EXPECT_EQ(config_from_text(f.out), dual_fermat(3));
    const auto w = run("gen w5 --param 3");
    ASSERT_EQ(w.status, 0);
    EXPECT_EQ(config_from_text(w.out), family(Family::w5, {Scalar(rational_field(), 3)}));
}

TEST_F(Cli, AnalyzeLineCounts) {
    const auto ex = write("ex.json", config_to_json(example_quartic_config()).dump());
    const auto a = run("analyze " + ex);
    ASSERT_EQ(a.status, 0);
    const auto j = json::parse(a.out);
    EXPECT_EQ(j["lines"]["histogram"]["4"], 3);
    const auto f3 = write("f3.json", config_to_json(dual_fermat(3)).dump());
    const auto b = json::parse(run("analyze " + f3).out);
    EXPECT_EQ(b["lines"]["histogram"]["3"], 12);
    EXPECT_FALSE(b["lines"]["histogram"].contains("2"));
}

TEST_F(Cli, InputErrorsExitThree) {
    const auto empty = write("empty.json", "{\"field\": {\"type\": \"rational\"}, \"points\": []}");
    const auto r = run("analyze " + empty, true);
    EXPECT_EQ(r.status, 3);
    const auto err = json::parse(r.out);
    EXPECT_EQ(err["error"]["code"], "invalid-config");

    const auto bad = write("bad.json", "{\n  \"field\": {\"type\": \"rational\"}, \"points\": [[1,0,0],,]\n}");
    const auto s = run("analyze " + bad, true);
    EXPECT_EQ(s.status, 3);
    EXPECT_EQ(json::parse(s.out)["error"]["code"], "json-syntax");
    EXPECT_NE(s.out.find("line 2"), std::string::npos);

    EXPECT_EQ(run("analyze " + path("missing.json")).status, 3);
    EXPECT_EQ(run("gen prop33-case3 --param 1 --param 3").status, 3);
}

TEST_F(Cli, Unexpected) {
    const auto ex = write("ex.json", config_to_json(example_quartic_config()).dump());
    const auto r = run("unexpected " + ex + " -d 4");
    ASSERT_EQ(r.status, 0);
    const auto j = json::parse(r.out);
    EXPECT_EQ(j["unexpected"], true);
    EXPECT_EQ(j["genericDim"], 1);
    EXPECT_EQ(j["threshold"], 0);
    const auto c = json::parse(run("unexpected " + ex + " -d 4 --certify").out);
    EXPECT_EQ(c["certified"], true);
    EXPECT_EQ(c["genericDim"], 1);

    const auto f3 = write("f3.json", config_to_json(dual_fermat(3)).dump());
    EXPECT_EQ(json::parse(run("unexpected " + f3 + " -d 4").out)["unexpected"], false);

    EXPECT_EQ(run("unexpected " + ex + " -d 1").status, 2);
    EXPECT_EQ(run("unexpected " + ex + " --samples 0 -d 4").status, 2);
    EXPECT_EQ(run("no-such-command").status, 2);
}

TEST_F(Cli, Splitting) {
    const auto f = run("gen fermat --n 3 -o " + path("f3.json"));
    ASSERT_EQ(f.status, 0);
    const auto j = json::parse(run("splitting " + path("f3.json")).out);
    EXPECT_EQ(j["balanced"], true);
    EXPECT_EQ(j["a"].get<int>() + j["b"].get<int>(), 8);
}

TEST_F(Cli, Equivalence) {
    const auto ex = example_quartic_config();
    Matrix<Scalar> t(3, 3, Scalar(ex.field()));
    const long entries[3][3] = {{2, 1, 0}, {-1, 3, 1}, {0, 1, -4}};
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k)
            t(i, k) = Scalar(ex.field(), entries[i][k]);
    const auto a = write("a.json", config_to_json(ex).dump());
    const auto b = write("b.json", config_to_json(apply_transform(t, ex)).dump());
    const auto r = run("equiv " + a + " " + b);
    ASSERT_EQ(r.status, 0);
    EXPECT_EQ(json::parse(r.out)["equivalent"], true);

    const auto f3 = write("f3.json", config_to_json(dual_fermat(3)).dump());
    const auto n = run("equiv " + a + " " + f3);
    ASSERT_EQ(n.status, 0);
    EXPECT_EQ(json::parse(n.out)["equivalent"], false);
}

TEST_F(Cli, SeedDeterminism) {
    const auto a = run("gen random --points 9 --height 50 --seed 11");
    const auto b = run("gen random --points 9 --height 50 --seed 11");
    const auto c = run("gen random --points 9 --height 50 --seed 12");
    ASSERT_EQ(a.status, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_NE(a.out, c.out);
    EXPECT_EQ(config_from_text(a.out).size(), 9u);

    const auto cfg = write("r.json", a.out);
    EXPECT_EQ(run("unexpected " + cfg + " -d 4 --seed 5").out, run("unexpected " + cfg + " -d 4 --seed 5").out);
}

TEST_F(Cli, Search) {
    const auto r = run("search --grid 2 --points 5 -d 2 --constraint none");
    ASSERT_EQ(r.status, 0);
    const auto j = json::parse(r.out);
    EXPECT_EQ(j["visited"], 126);
    EXPECT_EQ(j["hitCount"], 0);
    EXPECT_EQ(run("search --grid 2 --points 5 -d 2 --constraint sometimes").status, 2);
}

TEST_F(Cli, VerifySuite) {
    const auto r = run("verify --suite paper --grid 3 -o " + path("suite.json"));
    ASSERT_EQ(r.status, 0);
    std::ifstream in(path("suite.json"));
    const auto j = json::parse(in);
    EXPECT_EQ(j["suite"], "paper");
    EXPECT_EQ(j["passed"], true);
    EXPECT_EQ(j["claims"].size(), 12u);
    for (const auto &c : j["claims"])
        EXPECT_EQ(c["status"], "pass") << c["id"];
    EXPECT_EQ(run("verify --suite other").status, 2);
}
