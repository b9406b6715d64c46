#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "lexiswitch/cli.h"
#include "lexiswitch/hnsw_index.h"
#include "test_support.h"

namespace lexiswitch {
namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args, const std::string& stdin_text = {}) {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  Run r;
  r.code = run_cli(args, in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string data(const std::string& name) { return (testing::data_dir() / name).string(); }
std::string full_lexicon() { return (testing::source_dir() / "data/lexicon/singlish.jsonl").string(); }

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

class Cli : public ::testing::Test {
 protected:
  std::string index_path() {
    if (!std::filesystem::exists(dir_ / "full.hnsw.json")) {
      const auto r = run({"index-build", "--lexicon", full_lexicon(), "--out", (dir_ / "full.hnsw.json").string()});
      EXPECT_EQ(r.code, 0) << r.err;
    }
    return (dir_ / "full.hnsw.json").string();
  }

  testing::TempDir dir_;
};

TEST_F(Cli, IndexBuildFullLexicon) {
  const auto path = (dir_ / "idx/full.json").string();
  const auto r = run({"index-build", "--lexicon", full_lexicon(), "--out", path, "--seed", "7"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.starts_with("indexed 198 entries (dim 256, top layer "));
  const auto index = HnswIndex::load(path);
  EXPECT_EQ(index.size(), 198u);
  EXPECT_EQ(index.params().seed, 7u);
  EXPECT_EQ(index.provenance().embedder, "hashing-trigram/dim=256");
}

TEST_F(Cli, IndexBuildIsDeterministic) {
  const auto a = (dir_ / "a.json").string();
  const auto b = (dir_ / "b.json").string();
  ASSERT_EQ(run({"index-build", "--lexicon", data("lexicon_mini.jsonl"), "--out", a}).code, 0);
  ASSERT_EQ(run({"index-build", "--lexicon", data("lexicon_mini.jsonl"), "--out", b}).code, 0);
  EXPECT_EQ(testing::slurp(a), testing::slurp(b));
}

TEST_F(Cli, IndexBuildErrors) {
  testing::spit(dir_ / "empty.jsonl", "");
  const auto empty = run({"index-build", "--lexicon", (dir_ / "empty.jsonl").string(), "--out", (dir_ / "x").string()});
  EXPECT_EQ(empty.code, kExitData);
  EXPECT_FALSE(empty.err.empty());

  testing::spit(dir_ / "broken.jsonl", "{\"word\": \"sian\", \"meaning\": \"bored\", \"example\": \"so sian\"}\n{oops\n");
  const auto broken = run({"index-build", "--lexicon", (dir_ / "broken.jsonl").string(), "--out", (dir_ / "y").string()});
  EXPECT_EQ(broken.code, kExitData);
  EXPECT_NE(broken.err.find(":2"), std::string::npos) << broken.err;

  EXPECT_EQ(run({"index-build", "--lexicon", full_lexicon()}).code, kExitUsage);
  EXPECT_EQ(run({"index-build", "--lexicon", (dir_ / "nope.jsonl").string(), "--out", (dir_ / "z").string()}).code,
            kExitData);
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"transmogrify"}).code, kExitUsage);
  EXPECT_EQ(run({"rewrite", "--mode", "fewshot", "--text", "x"}).code, kExitUsage);
  EXPECT_EQ(run({"rewrite", "--mode", "baseline", "--script", data("scripted_chat.json")}).code, kExitUsage);
  EXPECT_EQ(run({"eval", "--out", (dir_ / "e").string()}).code, kExitUsage);
  const auto help = run({"--help"});
  EXPECT_EQ(help.code, kExitOk);
  EXPECT_NE(help.out.find("index-build"), std::string::npos);
}

TEST_F(Cli, RewriteBaselineSingleText) {
  const auto r = run({"rewrite", "--mode", "baseline", "--script", data("scripted_chat.json"), "--text",
                      "It is raining again."});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto t = nlohmann::json::parse(r.out);
  EXPECT_EQ(t["mode"], "baseline");
  EXPECT_EQ(t["final_response"], "It is raining again.");
  EXPECT_EQ(t["base_response"], t["final_response"]);
  EXPECT_TRUE(t["cues"].empty());
}

TEST_F(Cli, RewriteRagWorkedExample) {
  const auto r = run({"rewrite", "--mode", "rag", "--lexicon", full_lexicon(), "--index", index_path(), "--script",
                      data("scripted_chat.json"), "--user", "I had meetings all day."});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto t = nlohmann::json::parse(r.out);
  EXPECT_EQ(t["final_response"],
            "Hi there, that sounds really sian. Back-to-back meetings can wear anyone down, and it's "
            "understandable to feel overwhelmed.");
  bool has_sian = false;
  for (const auto& c : t["cues"]) has_sian |= c["word"] == "sian" && c["token"] == "exhausting";
  EXPECT_TRUE(has_sian);
}

TEST_F(Cli, RagWithoutIndexIsActionable) {
  const auto r = run({"rewrite", "--mode", "rag", "--lexicon", full_lexicon(), "--script", data("scripted_chat.json"),
                      "--text", "that sounds really exhausting"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("--index"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("index-build"), std::string::npos) << r.err;
}

TEST_F(Cli, BatchOfFiftyWritesFiftyTraces) {
  const auto out = (dir_ / "rag").string();
  const auto r = run({"rewrite", "--mode", "rag", "--lexicon", full_lexicon(), "--index", index_path(), "--script",
                      data("scripted_chat.json"), "--input", data("corpus50.jsonl"), "--out", out, "--concurrency", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto lines = lines_of(testing::slurp(dir_ / "rag/traces.jsonl"));
  ASSERT_EQ(lines.size(), 50u);
  EXPECT_EQ(nlohmann::json::parse(lines.front())["id"], "c001");
  EXPECT_EQ(nlohmann::json::parse(lines.back())["id"], "c050");
  for (const auto& l : lines) EXPECT_EQ(nlohmann::json::parse(l)["mode"], "rag");
}

TEST_F(Cli, BatchIsByteIdenticalAcrossRunsAndConcurrency) {
  auto batch = [&](const std::string& name, const std::string& threads) {
    const auto r = run({"rewrite", "--mode", "zero-shot", "--script", data("scripted_chat.json"), "--input",
                        data("corpus50.jsonl"), "--out", (dir_ / name).string(), "--concurrency", threads});
    EXPECT_EQ(r.code, 0) << r.err;
    return testing::slurp(dir_ / name / "traces.jsonl");
  };
  const auto a = batch("z1", "1");
  EXPECT_EQ(a, batch("z2", "1"));
  EXPECT_EQ(a, batch("z3", "8"));
}

TEST_F(Cli, ProviderFailureExitsTwo) {
  testing::spit(dir_ / "strict.json", R"({"base": {}, "base_fallback": "error"})");
  const auto r = run({"rewrite", "--mode", "baseline", "--script", (dir_ / "strict.json").string(), "--user",
                      "nobody scripted this"});
  EXPECT_EQ(r.code, kExitProvider);
  EXPECT_FALSE(r.err.empty());
}

TEST_F(Cli, UnreachableRemoteExitsTwo) {
  const auto r = run({"rewrite", "--mode", "baseline", "--endpoint", "http://127.0.0.1:9", "--user", "hello"});
  EXPECT_EQ(r.code, kExitProvider) << r.err;
}

TEST_F(Cli, EvalPairsMatchesGolden) {
  const auto out = dir_ / "eval";
  const auto r = run({"eval", "--pairs", data("metrics200.jsonl"), "--out", out.string(), "--x-axis-cap", "30"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto golden = testing::data_dir() / "golden/metrics200";
  EXPECT_EQ(testing::slurp(out / "summary.txt"), testing::slurp(golden / "summary.txt"));
  EXPECT_EQ(r.out, testing::slurp(golden / "summary.txt"));
  EXPECT_EQ(testing::slurp(out / "scatter.csv"), testing::slurp(golden / "scatter.csv"));
  EXPECT_EQ(nlohmann::json::parse(testing::slurp(out / "report_meta.json"))["scatter_x_axis_cap"], 30.0);
}

TEST_F(Cli, EvalIdenticalPairHasMedianZero) {
  testing::spit(dir_ / "same.csv", "id,mode,original,generated\n1,baseline,Same words here.,Same words here.\n");
  const auto r = run({"eval", "--pairs", (dir_ / "same.csv").string(), "--out", (dir_ / "same").string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = lines_of(testing::slurp(dir_ / "same/summary.csv"));
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_TRUE(rows[1].starts_with("baseline,1,0,0,100,100,1,1,1,1,")) << rows[1];
}

TEST_F(Cli, EvalMalformedLineExitsThree) {
  testing::spit(dir_ / "bad.jsonl", "{\"id\":\"1\",\"mode\":\"rag\",\"original\":\"a\",\"generated\":\"b\"}\nnot json\n");
  const auto r = run({"eval", "--pairs", (dir_ / "bad.jsonl").string(), "--out", (dir_ / "bad").string()});
  EXPECT_EQ(r.code, kExitData);
  EXPECT_NE(r.err.find("2"), std::string::npos) << r.err;
}

TEST_F(Cli, EvalOfRewriteTraces) {
  const auto traces = (dir_ / "rag").string();
  ASSERT_EQ(run({"rewrite", "--mode", "rag", "--lexicon", full_lexicon(), "--index", index_path(), "--script",
                 data("scripted_chat.json"), "--input", data("corpus50.jsonl"), "--out", traces})
                .code,
            0);
  const auto r = run({"eval", "--traces", traces + "/traces.jsonl", "--out", (dir_ / "report").string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.starts_with("Token-level edit distance\n"));
  EXPECT_EQ(lines_of(testing::slurp(dir_ / "report/scatter.csv")).size(), 51u);
}

// Baseline session: every reply is the scripted base reply for the turn.
TEST_F(Cli, ChatTranscriptGolden) {
  const auto script = nlohmann::json::parse(testing::slurp(testing::data_dir() / "scripted_chat.json"));
  const std::vector<std::string> turns{"I am bored at home.", "I forgot my wallet at home."};
  std::string expected = "(no trace yet)\n";
  for (const auto& t : turns) expected += script["base"][t].get<std::string>() + "\n";

  const auto r = run({"chat", "--mode", "baseline", "--script", data("scripted_chat.json")},
                     "/trace\n" + turns[0] + "\n\n   \n" + turns[1] + "\n/quit\nI am bored at home.\n");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, expected);
}

TEST_F(Cli, ChatTraceShowsCues) {
  const auto r = run({"chat", "--mode", "rag", "--lexicon", full_lexicon(), "--index", index_path(), "--script",
                      data("scripted_chat.json")},
                     "I had meetings all day.\n/trace\n");
  ASSERT_EQ(r.code, 0) << r.err;
  const auto first_nl = r.out.find('\n');
  EXPECT_EQ(r.out.substr(0, first_nl),
            "Hi there, that sounds really sian. Back-to-back meetings can wear anyone down, and it's "
            "understandable to feel overwhelmed.");
  const auto trace = nlohmann::json::parse(r.out.substr(first_nl + 1));
  EXPECT_EQ(trace["mode"], "rag");
  EXPECT_FALSE(trace["cues"].empty());
  ASSERT_EQ(trace["context"].size(), 1u);
  EXPECT_EQ(trace["context"][0]["content"], "I had meetings all day.");
}

TEST_F(Cli, ChatKeepsContextAcrossTurns) {
  const auto r = run({"chat", "--mode", "baseline", "--script", data("scripted_chat.json")},
                     "I am bored at home.\nI forgot my wallet at home.\n/trace\n");
  ASSERT_EQ(r.code, 0) << r.err;
  const auto lines = lines_of(r.out);
  const auto json_start = r.out.find("{");
  const auto trace = nlohmann::json::parse(r.out.substr(json_start));
  ASSERT_EQ(trace["context"].size(), 3u);
  EXPECT_EQ(trace["context"][1]["role"], "assistant");
  EXPECT_EQ(trace["context"][1]["content"], lines[0]);
}

}  // namespace
}  // namespace lexiswitch
