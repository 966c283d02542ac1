// Runs the mak executable end to end. MAK_CLI is the path to the binary.

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(MAK_CLI) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  std::string out;
  char buf[4096];
  while (auto n = fread(buf, 1, sizeof buf, p)) out.append(buf, n);
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("mak_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const auto path = (dir_ / name).string();
    std::ofstream(path) << text;
    return path;
  }

  fs::path dir_;
};

const char* kInstance = R"({
  "voters": 2,
  "items": [{"name": "a", "cost": 1}, {"name": "b", "cost": 1}, {"name": "c", "cost": 1}],
  "utilities": [[2, 0, 1], [0, 2, 1]],
  "budget": 2
})";

}  // namespace

TEST_F(Cli, SolveFair) {
  const auto r = run("solve --objective fair " + write("i.json", kInstance));
  ASSERT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["value"], "9");
  EXPECT_EQ(doc["selected"], (nlohmann::json{"a", "b"}));
  EXPECT_EQ(doc["method"], "xp-dp");
}

TEST_F(Cli, DecisionMode) {
  const auto f = write("i.json", kInstance);
  const auto yes = run("solve --objective fair --threshold 9 " + f);
  EXPECT_EQ(yes.code, 0);
  EXPECT_TRUE(nlohmann::json::parse(yes.out)["decision"].get<bool>());
  const auto no = run("solve --objective fair --threshold 10 " + f);
  EXPECT_EQ(no.code, 4);
  EXPECT_FALSE(nlohmann::json::parse(no.out)["decision"].get<bool>());
}

TEST_F(Cli, ExitCodes) {
  EXPECT_EQ(run("solve --objective ib " + write("bad.json", R"({"voters": 1})")).code, 2);
  EXPECT_EQ(run("solve --objective ib --method ib-dp --max-cells 2 " + write("i.json", kInstance)).code, 3);
  EXPECT_EQ(run("solve --objective fair --method ib-dp " + write("i.json", kInstance)).code, 1);
  EXPECT_EQ(run("frobnicate").code, 2);
}

TEST_F(Cli, Methods) {
  const auto f = write("i.json", kInstance);
  for (const char* m : {"auto", "bruteforce", "sp-dp", "sc-dp", "fpt", "greedy"}) {
    const auto r = run(std::string("solve --objective diverse --method ") + m + " " + f);
    ASSERT_EQ(r.code, 0) << m;
    EXPECT_EQ(nlohmann::json::parse(r.out)["value"], "4") << m;
  }
}

TEST_F(Cli, CheckDomain) {
  const auto f = write("i.json", kInstance);
  const auto sp = run("check-domain --kind sp " + f);
  EXPECT_EQ(sp.code, 0);
  EXPECT_EQ(nlohmann::json::parse(sp.out)["witness"].size(), 3u);
  const auto given = run("check-domain --kind sp --order " + write("o.json", R"(["a", "b", "c"])") + " " + f);
  EXPECT_EQ(given.code, 4);
  EXPECT_EQ(nlohmann::json::parse(given.out)["witness"], "none");
  EXPECT_EQ(run("check-domain --kind sc --order " + write("v.json", "[1, 0]") + " " + f).code, 0);
}

TEST_F(Cli, GenerateThenSolve) {
  const auto params = write("p.json", R"({"universe_size": 3, "sets": [[0,1,2],[0,1,2],[0,1,2]]})");
  const auto out = (dir_ / "r.json").string();
  ASSERT_EQ(run("generate --reduction x3c --params " + params + " --out " + out).code, 0);
  std::ifstream in(out);
  const auto doc = nlohmann::json::parse(in);
  const auto inst = write("x.json", doc["instance"].dump());
  const auto r = run("solve --objective fair --threshold " + doc["threshold"].get<std::string>() + " " + inst);
  EXPECT_EQ(r.code, 0);
}

TEST_F(Cli, Evaluate) {
  const auto f = write("i.json", kInstance);
  const auto r = run("evaluate --objective ib --selection a,b,c " + f);
  ASSERT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["value"], "6");
  EXPECT_FALSE(doc["feasible"].get<bool>());
  EXPECT_EQ(run("evaluate --objective ib --selection z " + f).code, 2);
}
