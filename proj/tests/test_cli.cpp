#include "cli.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace testing_support;
using nlohmann::json;

namespace {

struct Outcome {
  int status;
  std::string out;
  std::string err;
  json parsed() const { return json::parse(out); }
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "arith");
  std::ostringstream out;
  std::ostringstream err;
  int status = arith::cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "arith-cli-tests";
  std::filesystem::create_directories(dir);
  auto p = dir / name;
  std::filesystem::remove(p);
  return p.string();
}

std::string write_structure(const std::string& name, const arith::ArithStructure& x) {
  auto file = temp_path(name);
  std::ofstream(file) << arith::io::structure_to_json(x).dump();
  return file;
}

}  // namespace

TEST(Cli, Chain) {
  auto o = run({"chain", "13", "60"});
  ASSERT_EQ(o.status, 0) << o.err;
  auto j = o.parsed();
  EXPECT_EQ(j["terms"], json::parse("[13,60,47,34,21,8,3,1]"));
  EXPECT_EQ(j["F"], 8);
}

TEST(Cli, ChainCsv) {
  auto o = run({"--format", "csv", "chain", "13", "60"});
  ASSERT_EQ(o.status, 0);
  EXPECT_EQ(o.out, "x1,x2,F,terms\n13,60,8,13;60;47;34;21;8;3;1\n");
  // Global flags may follow the verb.
  EXPECT_EQ(run({"chain", "13", "60", "--format", "csv"}).out, o.out);
}

TEST(Cli, Construct) {
  auto o = run({"construct", "--center", "60", "--leaves", "2,3,3,5"});
  ASSERT_EQ(o.status, 0) << o.err;
  auto j = o.parsed();
  EXPECT_EQ(j["r"], json::parse("[1,3,8,21,34,47,60,2,3,3,5]"));
  EXPECT_EQ(j["p"], 7);
  EXPECT_EQ(j["graph"]["family"], "coconut_tree");
}

TEST(Cli, ConstructDomainErrorIsVerbatim) {
  auto o = run({"construct", "--center", "6", "--leaves", "4,3"});
  EXPECT_EQ(o.status, 1);
  EXPECT_NE(o.err.find("does not divide the center 6"), std::string::npos) << o.err;
}

TEST(Cli, UsageErrorsNameTheFlag) {
  auto bad_number = run({"construct", "--center", "six", "--leaves", "2,3"});
  EXPECT_EQ(bad_number.status, 2);
  EXPECT_NE(bad_number.err.find("--center"), std::string::npos) << bad_number.err;
  auto unknown = run({"chain", "1", "2", "--frobnicate"});
  EXPECT_EQ(unknown.status, 2);
  EXPECT_NE(unknown.err.find("--frobnicate"), std::string::npos) << unknown.err;
  auto no_verb = run({});
  EXPECT_EQ(no_verb.status, 2);
  auto bad_format = run({"--format", "xml", "chain", "1", "2"});
  EXPECT_EQ(bad_format.status, 2);
  EXPECT_NE(bad_format.err.find("--format"), std::string::npos) << bad_format.err;
  auto bad_graph = run({"enumerate", "--graph", "tree:3"});
  EXPECT_EQ(bad_graph.status, 2);
  EXPECT_NE(bad_graph.err.find("--graph"), std::string::npos) << bad_graph.err;
  EXPECT_EQ(run({"--help"}).status, 0);
}

TEST(Cli, EnumerateJsonAndCsv) {
  auto o = run({"enumerate", "--graph", "path:3", "--max-r", "5"});
  ASSERT_EQ(o.status, 0) << o.err;
  auto j = o.parsed();
  EXPECT_EQ(j["count"], 2);
  EXPECT_EQ(j["stable"], true);
  EXPECT_EQ(j["bound"], 5);
  EXPECT_EQ(j["descriptor"], "path:3");
  EXPECT_EQ(j["structures"][1]["r"], json::parse("[1,2,1]"));
  auto csv = run({"--format", "csv", "enumerate", "--graph", "ct:1,2", "--max-r", "5"});
  EXPECT_EQ(csv.out, "r_v1,r_l1,r_l2,d_v1,d_l1,d_l2\n1,1,1,2,1,1\n2,1,1,1,2,2\n");
}

TEST(Cli, EnumerateSmoothAppendsCache) {
  const auto cache = temp_path("cache.jsonl");
  auto o = run({"enumerate", "--graph", "ct:1,2", "--smooth-only", "--max-c", "50", "--oracle", cache});
  ASSERT_EQ(o.status, 0) << o.err;
  EXPECT_EQ(o.parsed()["count"], 1);
  auto oracle = arith::io::load_cache(cache);
  EXPECT_EQ(oracle.lookup(1, 2), 1);
  EXPECT_EQ(oracle.entry(1, 2).bound, 50u);
}

TEST(Cli, CountWithCache) {
  const auto cache = temp_path("count-cache.jsonl");
  ASSERT_EQ(run({"enumerate", "--graph", "ct:1,2", "--smooth-only", "--max-c", "50", "--oracle", cache}).status, 0);
  auto o = run({"count", "--graph", "ct:1,2", "--oracle", cache});
  ASSERT_EQ(o.status, 0) << o.err;
  auto j = o.parsed();
  EXPECT_EQ(j["count"], 2);
  EXPECT_EQ(j["p"], 1);
  EXPECT_EQ(j["s"], 2);
  EXPECT_EQ(j["oracle_bound"], 50);
  // Missing cells are a domain error unless --max-c allows enumerating them.
  auto miss = run({"count", "--graph", "ct:2,2", "--oracle", cache});
  EXPECT_EQ(miss.status, 1);
  EXPECT_NE(miss.err.find("(2,2)"), std::string::npos) << miss.err;
  auto filled = run({"count", "--graph", "ct:2,2", "--oracle", cache, "--max-c", "200"});
  ASSERT_EQ(filled.status, 0) << filled.err;
  EXPECT_EQ(filled.parsed()["count"], 14);
  EXPECT_TRUE(arith::io::load_cache(cache).contains(2, 2));
}

TEST(Cli, CountClosedForms) {
  EXPECT_EQ(run({"count", "--graph", "path:5"}).parsed()["count"], 14);
  EXPECT_EQ(run({"count", "--graph", "cycle:4"}).parsed()["count"], 35);
  EXPECT_EQ(run({"count", "--graph", "ct:4,1"}).parsed()["count"], 14);
  EXPECT_EQ(run({"count", "--graph", "star:3"}).parsed()["count"], 14);
  EXPECT_EQ(run({"count", "--graph", "ct:3,2"}).parsed()["count"], 46);
}

TEST(Cli, VerifySmallRange) {
  auto o = run({"verify", "--p-max", "1", "--s-max", "2", "--bound", "50"});
  ASSERT_EQ(o.status, 0) << o.err;
  auto j = o.parsed();
  ASSERT_EQ(j["cells"].size(), 1u);
  EXPECT_EQ(j["cells"][0]["brute_force"], 2);
  EXPECT_EQ(j["cells"][0]["formula"], 2);
  EXPECT_EQ(j["passed"], true);
}

TEST(Cli, VerifyBoundOneIsUnstable) {
  auto o = run({"verify", "--p-max", "2", "--s-max", "3", "--bound", "1"});
  auto j = o.parsed();
  for (const auto& cell : j["cells"]) EXPECT_EQ(cell["stable"], false) << cell.dump();
  EXPECT_EQ(j["stable_cells"], 0);
  EXPECT_EQ(o.status, 0);
}

TEST(Cli, TransformSmoothAndAncestor) {
  auto file = write_structure("five_three.json", on(ct(5, 3), {1, 3, 2, 3, 4, 2, 2, 1}));
  auto smooth = run({"transform", "smooth", "--seed-structure", file, "--vertex", "v2"});
  ASSERT_EQ(smooth.status, 0) << smooth.err;
  EXPECT_EQ(smooth.parsed()["r"], json::parse("[1,2,3,4,2,2,1]"));
  auto by_index = run({"transform", "smooth", "--seed-structure", file, "--vertex", "2"});
  EXPECT_EQ(by_index.out, smooth.out);
  auto ancestor = run({"transform", "ancestor", "--seed-structure", file});
  EXPECT_EQ(ancestor.parsed()["r"], json::parse("[1,2,3,4,2,2,1]"));
  auto refused = run({"transform", "smooth", "--seed-structure", file, "--vertex", "v1"});
  EXPECT_EQ(refused.status, 1);
  auto missing = run({"transform", "smooth", "--seed-structure", temp_path("nope.json"), "--vertex", "v1"});
  EXPECT_EQ(missing.status, 2);
  EXPECT_NE(missing.err.find("--seed-structure"), std::string::npos);
}

TEST(Cli, TransformSubdivisions) {
  auto file = write_structure("three_two.json", on(ct(3, 2), {1, 5, 14, 2, 7}));
  auto at2 = run({"transform", "subdivide", "--seed-structure", file, "--position", "2"});
  EXPECT_EQ(at2.parsed()["r"], json::parse("[1,6,5,14,2,7]"));
  auto seq_file = write_structure("eight_three.json", on(ct(8, 3), {1, 2, 3, 4, 5, 6, 7, 8, 1, 4, 4}));
  auto seq = run({"transform", "sequence", "--seed-structure", seq_file, "--b", "3,4,4,7"});
  EXPECT_EQ(seq.parsed()["d"], json::parse("[2,3,3,1,2,5,1,3,2,2,2,2,8,2,2]"));
  auto bad = run({"transform", "sequence", "--seed-structure", seq_file, "--b", "9"});
  EXPECT_EQ(bad.status, 1);
  auto seed = write_structure("seed.json", on(ct(1, 2), {2, 1, 1}));
  auto desc = run({"transform", "descendants", "--seed-structure", seed, "--target-p", "3"});
  EXPECT_EQ(desc.parsed()["count"], 2);
  auto exhaustive = run({"transform", "descendants", "--seed-structure", seed, "--target-p", "3", "--exhaustive"});
  EXPECT_EQ(exhaustive.out, desc.out);
  auto lattice = run({"transform", "lattice", "--n", "8", "--north", "2,5,5,6"});
  EXPECT_EQ(lattice.parsed()["b"], json::parse("[3,4,4,7]"));
  EXPECT_EQ(lattice.parsed()["base_p"], 5);
  auto expand = run({"transform", "expand-leaves", "--seed-structure", write_structure("smooth_three.json", on(ct(3, 3), {2, 4, 6, 3, 3, 2})),
                     "--leaves", "4", "--positions", "2"});
  EXPECT_EQ(expand.parsed()["r"], json::parse("[2,4,6,3,6,3,2]"));
}
