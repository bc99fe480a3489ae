#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

RunResult run(const std::string& args) {
  const auto err_path = std::filesystem::temp_directory_path() /
                        ("arcdiag_cli_err_" + std::to_string(::getpid()) + ".txt");
  const std::string cmd =
      std::string("'") + ARCDIAG_CLI_PATH + "' " + args + " 2>'" + err_path.string() + "'";
  RunResult r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = ::pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream err(err_path);
  std::stringstream ss;
  ss << err.rdbuf();
  r.err = ss.str();
  std::filesystem::remove(err_path);
  return r;
}

TEST(Cli, CountExample) {
  const auto r = run("count --family nc-matching --symmetric --n 12 --method recurrence");
  EXPECT_EQ(r.exit_code, 0) << r.err;
  EXPECT_EQ(r.out, "71\n");
}

TEST(Cli, TriangleExample) {
  const auto r = run("triangle --which A --rows 10 --format csv");
  EXPECT_EQ(r.exit_code, 0) << r.err;
  EXPECT_NE(r.out.find("\n10,5,95\n"), std::string::npos);
}

TEST(Cli, PsiExample) {
  const auto r = run("bijection psi --diagram \"9;1-9,2-8,3-7,4-6\"");
  EXPECT_EQ(r.exit_code, 0) << r.err;
  EXPECT_EQ(r.out, "10022\n");
}

TEST(Cli, UsageErrors) {
  for (const char* args : {"", "count --bogus", "frobnicate", "count --family chains --n 3",
                           "bijection psi --diagram \"5;1-\"", "ratios --kind decay --format csv"}) {
    const auto r = run(args);
    EXPECT_EQ(r.exit_code, 2) << args;
    EXPECT_NE(r.err.find("usage: arcdiag"), std::string::npos) << args << ": " << r.err;
    EXPECT_TRUE(r.out.empty()) << args;
  }
}

TEST(Cli, WrongFamilyIsAUsageError) {
  const auto r = run("bijection psi --diagram \"5;1-3\"");
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, OracleAboveCapSuggestsRecurrence) {
  const auto r = run("count --family matching --n 40 --method oracle");
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.err.find("--method recurrence"), std::string::npos) << r.err;
  const auto env = run("count --family motzkin --n 8 --method oracle --cap 6");
  EXPECT_EQ(env.exit_code, 2);
}

TEST(Cli, HelpAndVersion) {
  EXPECT_EQ(run("--help").exit_code, 0);
  EXPECT_EQ(run("count --help").exit_code, 0);
  const auto v = run("--version");
  EXPECT_EQ(v.exit_code, 0);
  EXPECT_FALSE(v.out.empty());
}

TEST(Cli, VerifyExitCodes) {
  const auto ok = run("verify --check deutsch");
  EXPECT_EQ(ok.exit_code, 0) << ok.out;
  EXPECT_NE(ok.out.find("0 failed"), std::string::npos) << ok.out;
  const auto json = run("verify --check tables --max 10 --json");
  EXPECT_EQ(json.exit_code, 0);
  EXPECT_NE(json.out.find("\"passed\": true"), std::string::npos) << json.out;
  // The L/M bound check fails at odd n; verification failure maps to exit 1.
  const auto decay = run("ratios --kind decay --max 40");
  EXPECT_EQ(decay.exit_code, 1);
  EXPECT_FALSE(decay.out.empty());
}

TEST(Cli, Export) {
  const auto r = run("export --seq R --max 12");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out.substr(r.out.size() - 6), "12 71\n");
  EXPECT_EQ(run("export --seq S --max 0").out, "0 1\n");
  EXPECT_NE(run("export --seq BELL --max 5").out.find("\n5 52\n"), std::string::npos);

  const auto path = std::filesystem::temp_directory_path() / "arcdiag_cli_b.txt";
  EXPECT_EQ(run("export --seq R --max 12 --out '" + path.string() + "'").exit_code, 0);
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(ss.str(), r.out);
  std::filesystem::remove(path);

  const auto bad = run("export --seq R --max 12 --out /nonexistent-dir/b.txt");
  EXPECT_EQ(bad.exit_code, 3);
  EXPECT_NE(bad.err.find("/nonexistent-dir/b.txt"), std::string::npos) << bad.err;
}

TEST(Cli, MethodAgreement) {
  for (const char* family : {"nc-matching", "matching", "motzkin", "bell"}) {
    for (const char* sym : {"", " --symmetric"}) {
      for (int n = 0; n <= 10; ++n) {
        const std::string base =
            std::string("count --family ") + family + sym + " --n " + std::to_string(n);
        const auto rec = run(base + " --method recurrence");
        const auto orc = run(base + " --method oracle");
        ASSERT_EQ(rec.exit_code, 0) << base;
        ASSERT_EQ(orc.exit_code, 0) << base;
        EXPECT_EQ(rec.out, orc.out) << base;
      }
    }
  }
}

TEST(Cli, Deterministic) {
  const std::string args = "enumerate --family bell --n 7 --symmetric --format blocks";
  const auto a = run(args);
  const auto b = run(args);
  EXPECT_EQ(a.exit_code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_FALSE(a.out.empty());
  EXPECT_EQ(run("ratios --kind table --format json").out, run("ratios --kind table --format json").out);
}

TEST(Cli, OtherVerbs) {
  EXPECT_EQ(run("bijection tau --path UHDUHUUDH").out, "210212201\n");
  EXPECT_EQ(run("bijection phi-inverse --diagram \"9;1-6,2-4,6-9\"").out, "UUDHDUHD\n");
  EXPECT_EQ(run("bijection split --diagram \"5;1-3,3-5\"").out, "6;1-3,4-6\n");
  EXPECT_EQ(run("bijection ternary --n 3").out, "102\n111\n120\n201\n210\n");
  EXPECT_EQ(run("count --family matching --n 4 --method oracle --statistic isolated").exit_code, 0);
  const auto csv = run("ratios --kind table --max 5 --format csv");
  EXPECT_EQ(csv.out, "n,R/S,L/M,Q/P,A/B\n5,0.2941176471,0.2380952381,0.2972972973,0.2307692308\n");
}

}  // namespace
