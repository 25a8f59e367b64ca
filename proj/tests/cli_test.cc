#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "tlsum/corpus.h"
#include "tlsum/evaluation.h"

namespace fs = std::filesystem;

namespace tlsum {
namespace {

struct Result {
  int code = -1;
  std::string out;
  std::string err;
};

std::string Slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::path(::testing::TempDir()) /
           ("tlsum_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }

  Result Run(const std::string& args, const std::string& env = "") {
    const fs::path out = dir_ / "stdout.txt", err = dir_ / "stderr.txt";
    const std::string cmd = env + (env.empty() ? "" : " ") + "'" + std::string(TLSUM_CLI_PATH) + "' " + args +
                            " > '" + out.string() + "' 2> '" + err.string() + "'";
    const int status = std::system(cmd.c_str());
    Result r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = Slurp(out);
    r.err = Slurp(err);
    return r;
  }

  static std::string Samples() { return TLSUM_SAMPLES_DIR; }

  std::string Summarize(const std::string& preset, const fs::path& out) {
    return "summarize --corpus " + Samples() + "/corpus.jsonl --keywords " + Samples() +
           "/keywords.txt --ref " + Samples() + "/timelines --preset " + preset + " --out '" + out.string() + "'";
  }

  fs::path dir_;
};

TEST_F(CliTest, UsageErrorsExitOne) {
  EXPECT_EQ(Run("").code, 1);
  EXPECT_EQ(Run("frobnicate").code, 1);
  EXPECT_EQ(Run("evaluate --ref x").code, 1);
  EXPECT_EQ(Run("--help").code, 0);
}

TEST_F(CliTest, MissingInputsExitNonzeroWithMessage) {
  const auto r = Run("summarize --corpus /nonexistent/c.jsonl --ref " + Samples() + "/timelines --preset asmds");
  EXPECT_NE(r.code, 0);
  EXPECT_NE(r.err.find("corpus not found"), std::string::npos) << r.err;
  EXPECT_NE(Run("summarize --corpus " + Samples() + "/corpus.jsonl --ref " + Samples() +
                "/timelines --preset nosuch")
                .code,
            0);
}

TEST_F(CliTest, SelfTestPassesAndFaultFails) {
  const std::string small = " --instances 4 --trials 1000 --guarantee-instances 20";
  const auto ok = Run("selftest --seed 3" + small);
  EXPECT_EQ(ok.code, 0) << ok.out;
  EXPECT_NE(ok.out.find("selftest passed"), std::string::npos);
  const auto bad = Run("selftest --inject-fault" + small);
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.out.find("FAIL"), std::string::npos);
}

TEST_F(CliTest, IngestWritesTaggedSentences) {
  const auto r = Run("ingest --corpus " + Samples() + "/corpus.jsonl --keywords " + Samples() +
                     "/keywords.txt --out '" + (dir_ / "tagged.jsonl").string() + "'");
  ASSERT_EQ(r.code, 0) << r.err;
  std::ifstream in(dir_ / "tagged.jsonl");
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    const auto j = nlohmann::json::parse(line);
    EXPECT_TRUE(j.contains("date"));
    EXPECT_FALSE(j["referenced_dates"].empty());
    ++n;
  }
  EXPECT_GT(n, 0);
}

TEST_F(CliTest, SummarizeRespectsPresetConstraints) {
  const auto r = Run(Summarize("asmds --preset tls-constraints --preset chieu", dir_ / "out"));
  ASSERT_EQ(r.code, 0) << r.err;
  for (const auto& entry : fs::directory_iterator(fs::path(Samples()) / "timelines")) {
    const auto ref = LoadTimeline(entry.path());
    const auto spec = DeriveTimelineSpec(ref);
    const auto name = entry.path().filename();
    const auto asmds = LoadTimeline(dir_ / "out" / "asmds" / name);
    EXPECT_LE(static_cast<int>(asmds.num_sentences()), spec.m);
    const auto tls = LoadTimeline(dir_ / "out" / "tls-constraints" / name);
    EXPECT_LE(static_cast<int>(tls.entries.size()), spec.ell);
    EXPECT_LE(MaxDailyLength(tls), spec.k);
    EXPECT_EQ(MaxDailyLength(LoadTimeline(dir_ / "out" / "chieu" / name)), 1);
  }
}

TEST_F(CliTest, SummarizeIsByteDeterministic) {
  ASSERT_EQ(Run(Summarize("asmds+tempdiv+dateref --trace", dir_ / "a")).code, 0);
  ASSERT_EQ(Run(Summarize("asmds+tempdiv+dateref --trace", dir_ / "b")).code, 0);
  int files = 0;
  for (const auto& entry : fs::recursive_directory_iterator(dir_ / "a")) {
    if (!entry.is_regular_file()) continue;
    const auto rel = fs::relative(entry.path(), dir_ / "a");
    EXPECT_EQ(Slurp(entry.path()), Slurp(dir_ / "b" / rel)) << rel;
    ++files;
  }
  EXPECT_GT(files, 1);
}

TEST_F(CliTest, ConfigFileAndOutputDirEnvironment) {
  const auto out = dir_ / "env_out";
  const auto r = Run("summarize --config " + Samples() + "/config.json --preset asmds",
                     "TLSUM_OUTPUT_DIR='" + out.string() + "'");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(fs::exists(out / "asmds"));
}

TEST_F(CliTest, EvaluateIdentityAndEmptyPredictions) {
  const std::string ref = Samples() + "/timelines";
  fs::create_directories(dir_ / "empty");
  for (const auto& entry : fs::directory_iterator(ref)) {
    std::ofstream(dir_ / "empty" / entry.path().filename()) << "{\"entries\": []}\n";
  }
  const auto csv = dir_ / "eval.csv";
  const auto r = Run("evaluate --pred gold=" + ref + " --pred same=" + ref + " --pred empty='" +
                     (dir_ / "empty").string() + "' --ref " + ref + " --corpus " + Samples() +
                     "/corpus.jsonl --out '" + csv.string() + "' --significance '" +
                     (dir_ / "sig.csv").string() + "'");
  ASSERT_EQ(r.code, 0) << r.err;
  std::ifstream in(csv);
  std::string line;
  std::getline(in, line);
  int rows = 0;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    for (std::string c; std::getline(ss, c, ',');) cells.push_back(c);
    ASSERT_EQ(cells.size(), 12u);
    for (int c = 2; c <= 8; ++c) {
      EXPECT_EQ(cells[c], cells[0] == "empty" ? "0.000000" : "1.000000") << line;
    }
    ++rows;
  }
  EXPECT_GT(rows, 3);
  const std::string sig = Slurp(dir_ / "sig.csv");
  EXPECT_NE(sig.find("gold,same,1.000000,1.000000,1.000000,1.000000"), std::string::npos) << sig;

  const auto an = Run("analyze --eval '" + csv.string() + "'");
  ASSERT_EQ(an.code, 0) << an.err;
  EXPECT_NE(an.out.find("(0.001,0.01]"), std::string::npos);
  EXPECT_NE(an.out.find("max daily length"), std::string::npos);
}

TEST_F(CliTest, EvaluateListsUnmatchedFiles) {
  fs::create_directories(dir_ / "partial");
  std::ofstream(dir_ / "partial" / "extra.json") << "{\"entries\": []}\n";
  const auto r = Run("evaluate --pred sys='" + (dir_ / "partial").string() + "' --ref " + Samples() + "/timelines");
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("unmatched"), std::string::npos);
  EXPECT_NE(r.err.find("no reference for extra"), std::string::npos) << r.err;
}

TEST_F(CliTest, AnalyzeSingleTimelineGivesSingleCell) {
  const auto csv = dir_ / "one.csv";
  std::ofstream(csv) << "system,timeline,concat_r1,concat_r2,agreement_r1,agreement_r2,align_m1_r1,"
                        "align_m1_r2,date_f1,compression_rate,spread,max_daily_len\n"
                        "chieu,t0,0.5,0.1,0.2,0.1,0.300000,0.1,0.4,0.05,0.5,1\n";
  const auto r = Run("analyze --eval '" + csv.string() + "'");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("chieu\t-\t-\t0.3000 (1)\t-"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("chieu\t1.00\t1.00\t0.00"), std::string::npos) << r.out;
}

}  // namespace
}  // namespace tlsum
