#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <string>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

namespace {

struct Result {
    int code = -1;
    std::string out;
};

std::filesystem::path scratch_dir()
{
    auto dir = std::filesystem::temp_directory_path() / ("symfund_cli_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    return dir;
}

// Runs the CLI with a private cache; stderr is discarded.
Result run(const std::string& args, const std::string& cache = "none")
{
    const std::string cmd = std::string("'") + SYMFUND_CLI_PATH + "' --cache '" + cache + "' " + args + " 2>/dev/null";
    Result r;
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (!pipe)
        return r;
    char buf[4096];
    for (std::size_t n; (n = std::fread(buf, 1, sizeof buf, pipe)) > 0;)
        r.out.append(buf, n);
    const int status = ::pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST(Cli, Derive)
{
    EXPECT_EQ(run("derive 's[2,1]'").out, "s[2] + s[1,1] - 1\n");
    EXPECT_EQ(run("derive --s 's[4]'").out, "s[3]*1^s + s[2]*2^s + s[1]*3^s + 4^s\n");
    EXPECT_EQ(run("derive 0").out, "0\n");
    EXPECT_EQ(run("derive 'p[3]/3'").code, 2);
    EXPECT_EQ(run("derive '1/3*p[3]'").out, "1\n");
}

TEST(Cli, Plethysm)
{
    EXPECT_EQ(run("plethysm 2 / 2").out, "s[4] + s[2,2]\n");
    EXPECT_EQ(run("plethysm 2 / 1,1").out, "s[2,2] + s[1,1,1,1]\n");
    EXPECT_EQ(run("plethysm 2/1,1 --no-prune --threads 3").out, "s[2,2] + s[1,1,1,1]\n");
    const auto j = nlohmann::json::parse(run("plethysm 1,1 / 1,1 --format json").out);
    ASSERT_EQ(j["terms"].size(), 1u);
    EXPECT_EQ(j["terms"][0]["partition"], nlohmann::json::array({2, 1, 1}));
    EXPECT_EQ(j["terms"][0]["num"], "1");
    EXPECT_EQ(j["terms"][0]["den"], "1");
    EXPECT_EQ(run("plethysm 2 / 2 --format latex").out, "s_{4} + s_{2,2}\n");
}

TEST(Cli, Verify)
{
    const auto r = run("plethysm 3 / 2 --verify");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "s[6] + s[4,2] + s[2,2,2]\noracle: agree\n");
    const auto j = nlohmann::json::parse(run("product 2,1 / 2 --verify --format json").out);
    EXPECT_EQ(j["verified"], true);
}

TEST(Cli, VerifyFailureExitsWithThree)
{
    const auto path = scratch_dir() / "tampered.ndjson";
    std::filesystem::remove(path);
    ASSERT_EQ(run("plethysm 2 / 2", path.string()).code, 0);
    // replace the stored expansion with a wrong one
    std::string text;
    {
        FILE* f = std::fopen(path.c_str(), "r");
        char buf[4096];
        for (std::size_t n; (n = std::fread(buf, 1, sizeof buf, f)) > 0;)
            text.append(buf, n);
        std::fclose(f);
    }
    const auto at = text.find("[2,2]");
    ASSERT_NE(at, std::string::npos);
    text.replace(at, 5, "[3,1]");
    {
        FILE* f = std::fopen(path.c_str(), "w");
        std::fwrite(text.data(), 1, text.size(), f);
        std::fclose(f);
    }
    EXPECT_EQ(run("plethysm 2 / 2", path.string()).out, "s[4] + s[3,1]\n");
    EXPECT_EQ(run("plethysm 2 / 2 --verify", path.string()).code, 3);
}

TEST(Cli, ProductCharShadowBound)
{
    EXPECT_EQ(run("product 2 / 1").out, "s[3] + s[2,1]\n");
    EXPECT_EQ(run("product - / 2,1").out, "s[2,1]\n");
    EXPECT_EQ(run("char 2,1 / 1,1,1").out, "2\n");
    EXPECT_EQ(run("char 2,1").out, "3: -1\n2,1: 0\n1,1,1: 2\n");
    EXPECT_EQ(run("shadow 2 --m 2").out, "r + 4\n");
    EXPECT_EQ(run("shadow 2 --m 1 --r 3").out, "5\n");
    EXPECT_EQ(run("shadow 2").out, "r + 1\n");
    EXPECT_EQ(run("bound 1,1 / 1,1").out, "columns <= 2\nrows <= 4\n");
    const auto j = nlohmann::json::parse(run("bound 2 / 2 --format json").out);
    EXPECT_EQ(j["max_columns"], 4);
    EXPECT_EQ(j["max_rows"], 2);
}

TEST(Cli, Decompose)
{
    EXPECT_EQ(run("decompose 'p[4] + s[2,2]' --t 2").out, "g = s[2,2]\nm = 1\n");
    EXPECT_EQ(run("decompose 'p[4]' --t 0").out, "g = 0\nm = 1\n");
    EXPECT_EQ(run("decompose 's[3,1]' --t 1").code, 2);
    EXPECT_EQ(run("decompose 's[1,1,1]' --t 1 --rows").code, 2);
    EXPECT_EQ(run("decompose 's[3]-p[3]' --t 1 --rows").out, "g = s[3]\nm = -1\n");
}

TEST(Cli, UsageErrorsExitWithTwo)
{
    EXPECT_EQ(run("derive 's[1,2]'").code, 2);
    EXPECT_EQ(run("plethysm 2").code, 2);
    EXPECT_EQ(run("plethysm 2 / 2,3").code, 2);
    EXPECT_EQ(run("char 2,1 / 2").code, 2);
    EXPECT_EQ(run("frobnicate").code, 2);
    EXPECT_EQ(run("").code, 2);
    EXPECT_EQ(run("plethysm 2 / 2 --format yaml").code, 2);
    EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, WarmCacheOutputIsIdentical)
{
    const auto path = scratch_dir() / "warm.ndjson";
    std::filesystem::remove(path);
    for (const std::string args : {"plethysm 2,1 / 2", "plethysm 3 / 1,1 --format json", "product 3,1 / 2,1",
                                   "plethysm 2 / 3 --verify", "product 2 / 2 --format latex"}) {
        const auto cold = run(args, path.string());
        const auto warm = run(args, path.string());
        EXPECT_EQ(cold.code, 0) << args;
        EXPECT_EQ(cold.out, warm.out) << args;
    }
    EXPECT_TRUE(std::filesystem::exists(path));
}

TEST(Cli, EnvironmentVariableSelectsCache)
{
    const auto path = scratch_dir() / "env.ndjson";
    std::filesystem::remove(path);
    const std::string cmd = "SYMFUND_CACHE='" + path.string() + "' '" + SYMFUND_CLI_PATH + "' plethysm 2 / 2 >/dev/null";
    ASSERT_EQ(std::system(cmd.c_str()), 0);
    EXPECT_TRUE(std::filesystem::exists(path));
}
