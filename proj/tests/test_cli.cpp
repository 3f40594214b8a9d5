// Runs the built command-line tool and checks exit codes and output.

#include <cstdio>
#include <fstream>
#include <sstream>

#include <sys/wait.h>

#include <gtest/gtest.h>

#include <json.hpp>

namespace
{

struct CliRun {
    int status = -1;
    std::string out;
};

CliRun run(const std::string &args)
{
    const std::string cmd = std::string(WWORDS_CLI) + " " + args + " 2>/dev/null";
    FILE *p = popen(cmd.c_str(), "r");
    CliRun r;
    if (p == nullptr) {
        return r;
    }
    char buf[4096];
    std::size_t n = 0;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) {
        r.out.append(buf, n);
    }
    const int st = pclose(p);
    r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

std::vector<std::string> lines(const std::string &s)
{
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string l;
    while (std::getline(in, l)) {
        out.push_back(l);
    }
    return out;
}

std::string temp_file(const std::string &name, const std::string &content)
{
    const std::string path = std::string(WWORDS_TMP_DIR) + "/" + name;
    std::ofstream(path) << content;
    return path;
}

} // namespace

TEST(Cli, VerifySubsetJsonl)
{
    const CliRun r = run("verify --suite thm_Main_Sum --nmax 8");
    EXPECT_EQ(r.status, 0);
    const auto ls = lines(r.out);
    ASSERT_EQ(ls.size(), 2U);
    const auto j = nlohmann::json::parse(ls[0]);
    EXPECT_EQ(j["name"], "eq_sum1");
    EXPECT_EQ(j["verdict"], "PASS");
    EXPECT_FALSE(j.contains("elapsed_ms"));
}

TEST(Cli, VerifyTextWithTimings)
{
    const CliRun r = run("verify --identity Weighted_MM --N 20 --format text --timings");
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("PASS"), std::string::npos);
    EXPECT_NE(r.out.find(" ms"), std::string::npos);
    EXPECT_NE(r.out.find("1/1 identities passed"), std::string::npos);
}

TEST(Cli, RepeatedRunsAreIdentical)
{
    EXPECT_EQ(run("verify --suite relations --N 20 --nmax 4").out, run("verify --suite relations --N 20 --nmax 4").out);
}

TEST(Cli, FailingIdentityExitsOne)
{
    const auto path = temp_file("wrong.id", "identity wrong\ntheorem t\ntruncation 8\nlhs poch(q, 1, inf, inv)\n"
                                            "rhs poch(q, 2, inf, inv)\nend\n");
    const CliRun r = run("--identities " + path + " verify");
    EXPECT_EQ(r.status, 1);
    EXPECT_EQ(nlohmann::json::parse(r.out)["verdict"], "FAIL");
}

TEST(Cli, UserSystemFile)
{
    const auto sys = temp_file("free.sys", "system Free\ncolors a\nmatrix\n0\nend\n");
    const auto ids = temp_file("free.id", "identity free\ntheorem user\ntruncation 12\nlhs glimit(Free)\n"
                                          "rhs poch(a*q, 1, inf, inv)\nend\n");
    EXPECT_EQ(run("--systems " + sys + " --identities " + ids + " verify").status, 0);
}

TEST(Cli, UsageAndConfigErrorsExitTwo)
{
    EXPECT_EQ(run("").status, 2);
    EXPECT_EQ(run("frobnicate").status, 2);
    EXPECT_EQ(run("verify --N 0").status, 2);
    EXPECT_EQ(run("verify --suite nothing_here").status, 2);
    EXPECT_EQ(run("verify --format xml").status, 2);
    EXPECT_EQ(run("table Weighted_MM --n 3").status, 2);
    EXPECT_EQ(run("table thm_Mod2_MM_refinement --n 18").status, 2);
    EXPECT_EQ(run("enumerate no_family --n 3").status, 2);
    EXPECT_EQ(run("--identities /nonexistent/file verify").status, 2);
    const auto bad = temp_file("bad.id", "identity x\ntheorem t\nlhs poch(\nrhs 1\nend\n");
    EXPECT_EQ(run("--identities " + bad + " list").status, 2);
}

TEST(Cli, TableOutputs)
{
    const CliRun text = run("table thm_Mod2_MM_refinement --n 18 --m 2");
    EXPECT_EQ(text.status, 0);
    EXPECT_EQ(lines(text.out).size(), 18U);
    EXPECT_NE(text.out.find("(15,3)"), std::string::npos);
    const CliRun js = run("table thm_main_comp --n 5 --format json");
    EXPECT_EQ(js.status, 0);
    const auto j = nlohmann::json::parse(js.out);
    EXPECT_EQ(j["columns"][0]["count"], 12);
    EXPECT_EQ(j["columns"][0]["entries"][0], "(5')");
}

TEST(Cli, EnumerateAndList)
{
    const CliRun e = run("enumerate macmahon_gap --n 6 --stats");
    EXPECT_EQ(e.status, 0);
    EXPECT_NE(e.out.find("# count "), std::string::npos);
    EXPECT_NE(e.out.find("size=6"), std::string::npos);
    const CliRun l = run("list");
    EXPECT_EQ(l.status, 0);
    for (const char *s : {"identities", "families", "tables", "systems", "Weighted_R2", "thm_main_comp", "Rprime"}) {
        EXPECT_NE(l.out.find(s), std::string::npos) << s;
    }
}

TEST(Cli, SampleDataFilesVerify)
{
    const std::string dir = WWORDS_DATA_DIR;
    const CliRun r = run("--systems " + dir + "/systems.txt --identities " + dir + "/identities.txt verify");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(lines(r.out).size(), 4U);
}
