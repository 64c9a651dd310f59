#include "baire/cli.hpp"
#include "baire/corpus.hpp"
#include "baire/witness.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"

using namespace baire;
using namespace fixtures;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  json report;
  std::string err;
};

Outcome run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_command(args, out, err);
  json report = out.str().empty() ? json() : json::parse(out.str());
  return {code, report, err.str()};
}

class CliFiles : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("baire_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const json& j) {
    fs::path p = dir_ / name;
    std::ofstream(p) << j.dump();
    return p.string();
  }
  std::string write_text(const std::string& name, const std::string& text) {
    fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  fs::path dir_;
};

}  // namespace

TEST(Cli, WitnessRankTwo) {
  Outcome r = run({"witness", "--rank", "2"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.report["violations"].empty());
  for (const auto& row : r.report["results"]["indices"]) EXPECT_EQ(row["index"], 2);
  EXPECT_EQ(r.report["results"]["upper"], "3");
}

TEST(Cli, SandwichSuitePasses) {
  Outcome r = run({"check", "sandwich", "--corpus", "default"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.report["violations"].empty());
}

TEST(Cli, PerRankDemo) {
  Outcome r = run({"demo-prop15", "--max-rank", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.report["results"]["rows"].size(), 3u);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"witness"}).code, 2);
  EXPECT_EQ(run({"witness", "--rank", "0"}).code, 2);
  EXPECT_EQ(run({"witness", "--rank", "2", "--eps", "2/4"}).code, 2);
  EXPECT_EQ(run({"witness", "--rank", "2", "--eps", "3/2"}).code, 2);
  EXPECT_EQ(run({"check", "nonsense"}).code, 2);
  EXPECT_EQ(run({"index", "/nonexistent/f.json"}).code, 2);
}

TEST_F(CliFiles, IndexAndOracleAgree) {
  std::string f = write("f.json", to_json(PatternFn::indicator(build_E(2))));
  Outcome sym = run({"index", "--eps", "1/2", f});
  ASSERT_EQ(sym.code, 0) << sym.err;
  EXPECT_EQ(sym.report["results"]["index"], 2);

  Outcome orc = run({"oracle", "--copies", "3", "--", "index", "--eps", "1/2", f});
  ASSERT_EQ(orc.code, 0) << orc.err;
  EXPECT_TRUE(orc.report["results"]["agree"].get<bool>());
  EXPECT_EQ(orc.report["results"]["oracle"], orc.report["results"]["symbolic"]);

  for (const char* verb : {"envelope", "analyze"}) {
    Outcome o = run({"oracle", "--copies", "2", "--", verb, f});
    EXPECT_EQ(o.code, 0) << verb << ": " << o.err;
  }
}

TEST_F(CliFiles, FullIndexReport) {
  std::string f = write("f.json", to_json(PatternFn::indicator(build_E(2))));
  Outcome r = run({"index", f});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.report["results"]["index"], 2);
  EXPECT_EQ(r.report["results"]["beta"], 3);
  EXPECT_EQ(r.report["results"]["quasinorm"], "2");
}

TEST_F(CliFiles, CheckCertExitCodes) {
  Mark W = mark_of(T1(), {0});
  std::string f = write("f.json", to_json(PatternFn::indicator(W)));
  std::string good = write("good.json", to_json(*make_lsc_split(PatternFn(T1(), Rat(1)), PatternFn::indicator(~W))));
  std::string bad = write("bad.json", to_json(*make_nonneg_lsc()));
  Outcome ok = run({"check-cert", f, good});
  EXPECT_EQ(ok.code, 0) << ok.err;
  EXPECT_EQ(ok.report["results"]["bound"], "2");
  Outcome rejected = run({"check-cert", f, bad});
  EXPECT_EQ(rejected.code, 1);
  EXPECT_FALSE(rejected.report["violations"].empty());
}

TEST_F(CliFiles, MalformedInputIsUsageError) {
  std::string f = write_text("f.json", R"({"value":"2/4","leaf":true})");
  Outcome r = run({"analyze", f});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("$.value"), std::string::npos) << r.err;
  EXPECT_EQ(run({"analyze", write_text("g.json", "{not json")}).code, 2);
}

TEST_F(CliFiles, DecomposeMethods) {
  std::string f = write("f.json", to_json(PatternFn::indicator(build_E(2))));
  Outcome p = run({"decompose", "--eps", "1/4", f});
  EXPECT_EQ(p.code, 0) << p.err;
  Outcome t = run({"decompose", "--eps", "1/4", "--method", "test", f});
  EXPECT_EQ(t.code, 0) << t.err;
  EXPECT_EQ(run({"decompose", f}).code, 2);
  EXPECT_EQ(run({"decompose", "--eps", "0", f}).code, 2);
  // chi_E on T2 is neither usc nor lsc.
  EXPECT_EQ(run({"decompose", "--eps", "1", "--method", "semicontinuous", f}).code, 1);
}

TEST_F(CliFiles, SimpleDcs) {
  std::string f = write("f.json", to_json(PatternFn::indicator(build_E(2))));
  Outcome r = run({"simple-dcs", f});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.report["results"]["check"]["bound"], "3");
}

TEST_F(CliFiles, CorpusIsDeterministic) {
  std::string spec = write("spec.json", json{{"seed", 7}, {"count", 40}});
  Outcome a = run({"corpus", "--corpus", spec});
  Outcome b = run({"corpus", "--corpus", spec});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.report["results"]["digest"], b.report["results"]["digest"]);
  EXPECT_EQ(a.report["inputs_digest"], b.report["inputs_digest"]);
  Outcome c = run({"corpus", "--corpus", write("other.json", json{{"seed", 8}, {"count", 40}})});
  EXPECT_NE(a.report["results"]["digest"], c.report["results"]["digest"]);
}

TEST_F(CliFiles, CorpusSpecValidation) {
  EXPECT_EQ(run({"corpus", "--corpus", write("bad.json", json{{"max_rank", 5}})}).code, 2);
  EXPECT_EQ(run({"corpus", "--corpus", write("bad2.json", json{{"colour", 1}})}).code, 2);
}

TEST(Corpus, CountZeroGivesPinnedOnly) {
  CorpusSpec spec;
  spec.count = 0;
  auto corpus = generate_corpus(spec);
  auto pinned = pinned_corpus();
  ASSERT_EQ(corpus.size(), pinned.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) EXPECT_EQ(corpus[i].name, pinned[i].name);
}

TEST(Corpus, RespectsRankCap) {
  CorpusSpec spec;
  spec.max_rank = 2;
  spec.count = 200;
  auto corpus = generate_corpus(spec);
  const std::size_t pinned = pinned_corpus().size();
  for (std::size_t i = pinned; i < corpus.size(); ++i) EXPECT_LE(rank(corpus[i].f.space()), 2) << corpus[i].name;
}

TEST(Corpus, SameSeedSameCorpus) {
  CorpusSpec spec;
  spec.count = 50;
  auto a = generate_corpus(spec), b = generate_corpus(spec);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].f, b[i].f);
}
