#include <gtest/gtest.h>

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

using namespace incseq;
using incseq::cli::parse_config;
using incseq::cli::UsageError;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempFile {
 public:
  explicit TempFile(const std::string& contents) {
    path_ = std::filesystem::temp_directory_path() /
            ("incseq_cli_test_" + std::to_string(counter_++) + "_" + std::to_string(::getpid()) + ".txt");
    std::ofstream(path_) << contents;
  }
  ~TempFile() { std::filesystem::remove(path_); }
  std::string path() const { return path_.string(); }

 private:
  static inline int counter_ = 0;
  std::filesystem::path path_;
};

}  // namespace

TEST(Cli, RunConfigRoundTrip) {
  const std::vector<std::vector<std::string>> cases{
      {"gb", "--n", "2", "--q", "3"},
      {"gb", "--n", "3", "--q", "4", "--field", "rational", "--order", "lex", "--format", "json"},
      {"hilbert", "--n", "2", "--q", "5", "--field", "gf:7", "--embedding", "list:1,2,3,4,5", "--s", "2"},
      {"sm", "--n", "2", "--q", "4", "--field", "gf:2^2", "--seed", "9"},
      {"kakeya", "build-t", "--n", "2", "--q", "3"},
  };
  for (const auto& args : cases) {
    const auto cfg = parse_config(args);
    std::vector<std::string> again;
    std::istringstream words(cfg.canonical());
    for (std::string w; words >> w;) again.push_back(w);
    const auto back = parse_config(again);
    EXPECT_EQ(back.canonical(), cfg.canonical());
    EXPECT_EQ(back.n, cfg.n);
    EXPECT_EQ(back.q, cfg.q);
    EXPECT_EQ(back.field, cfg.field);
    EXPECT_EQ(back.embedding, cfg.embedding);
  }
  EXPECT_EQ(parse_config({"gb", "--n", "2", "--q", "3"}).canonical(),
            "gb --n 2 --q 3 --field gf:3 --embedding grid:2 --order deglex --format text --seed 1");
}

TEST(Cli, GlobalFlagsAfterSubcommand) {
  EXPECT_EQ(parse_config({"--n", "2", "gb", "--q", "3"}).canonical(),
            parse_config({"gb", "--n", "2", "--q", "3"}).canonical());
}

TEST(Cli, RejectsGridBelowCharacteristic) {
  EXPECT_THROW(parse_config({"gb", "--n", "2", "--q", "4", "--field", "gf:3", "--embedding", "grid:0"}), UsageError);
  EXPECT_THROW(parse_config({"gb", "--n", "2", "--q", "3", "--field", "gf:2^2", "--embedding", "grid:0"}), UsageError);
  EXPECT_NO_THROW(parse_config({"gb", "--n", "2", "--q", "4", "--field", "gf:3^2", "--embedding", "list:0,1,2,[0,1]"}));
  EXPECT_THROW(parse_config({"gb", "--n", "2", "--q", "3", "--order", "revlex"}), UsageError);
  EXPECT_THROW(parse_config({"gb", "--n", "0", "--q", "3"}), UsageError);
  EXPECT_THROW(parse_config({"nope"}), UsageError);
}

TEST(Cli, GbJson) {
  const auto r = invoke({"gb", "--n", "2", "--q", "3", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  for (const char* key : {"kind", "n", "q", "order", "basis", "standard_monomials", "counts", "reduced"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["counts"]["basis"], 4);
  EXPECT_EQ(j["counts"]["sm"], 6);
  EXPECT_EQ(j["counts"]["points"], 6);
  EXPECT_EQ(j["basis"].size(), 4u);
  EXPECT_EQ(j["standard_monomials"].size(), 6u);
  EXPECT_EQ(j["reduced"], true);
}

TEST(Cli, GbStrictCounts) {
  const auto r = invoke({"gb", "--kind", "strict", "--n", "2", "--q", "4", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["counts"]["sm"], 6);
  EXPECT_EQ(j["counts"]["points"], 6);
}

TEST(Cli, BuiltinKakeyaExampleVerifies) {
  const auto r = invoke({"kakeya", "paper-example", "--verify"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("bound_met"), std::string::npos);
}

TEST(Cli, OutputIsDeterministic) {
  const std::vector<std::vector<std::string>> cases{
      {"gb", "--n", "3", "--q", "3", "--format", "json"},
      {"kakeya", "search", "--n", "2", "--q", "3"},
      {"cover", "search", "--n", "2", "--q", "3", "--format", "json"},
      {"interp", "--n", "2", "--q", "3", "--point", "1,2"},
      {"verify-all", "--max-n", "2", "--max-q", "2"},
  };
  for (const auto& args : cases) {
    const auto a = invoke(args);
    const auto b = invoke(args);
    EXPECT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
  }
}

TEST(Cli, VerificationFailureExitsOne) {
  const TempFile line("0,0\n0,1\n0,2\n");
  EXPECT_EQ(invoke({"kakeya", "verify", "--field", "gf:3", "--in", line.path()}).code, 1);
  EXPECT_EQ(invoke({"nikodym", "verify", "--field", "gf:3", "--in", line.path()}).code, 1);
  const TempFile plane("0,0\n0,1\n0,2\n1,0\n1,1\n1,2\n2,0\n2,1\n2,2\n");
  EXPECT_EQ(invoke({"kakeya", "verify", "--field", "gf:3", "--in", plane.path()}).code, 0);
  EXPECT_EQ(invoke({"cover", "verify", "--n", "2", "--q", "3", "--hyperplane", "1,0=0"}).code, 1);
  EXPECT_EQ(invoke({"cover", "verify", "--n", "2", "--q", "3", "--hyperplane", "1,0=0", "--hyperplane", "1,0=1",
                    "--hyperplane", "1,0=2"})
                .code,
            0);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"gb", "--n", "2"}).code, 2);
  EXPECT_EQ(invoke({"gb", "--n", "2", "--q", "3", "--field", "gf:6"}).code, 2);
  EXPECT_EQ(invoke({"kakeya", "build-t", "--n", "2", "--q", "6"}).code, 2);
  EXPECT_EQ(invoke({"kakeya", "verify", "--field", "gf:3", "--in", "/nonexistent/points.txt"}).code, 2);
  EXPECT_EQ(invoke({"interp", "--n", "2", "--q", "3", "--point", "2,1"}).code, 2);
}
