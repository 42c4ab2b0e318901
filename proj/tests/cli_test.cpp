// Copyright 2026 The hyperforman Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <unistd.h>

#include <nlohmann/json.hpp>

#include "hyperforman/cli.hpp"
#include "hyperforman/ingest.hpp"
#include "support/oracle.hpp"

namespace hyperforman::cli {
namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int status = main(args, in, out, err);
  return {status, out.str(), err.str()};
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream stream(text);
  for (std::string line; std::getline(stream, line);) lines.push_back(line);
  return lines;
}

class TempDir : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("hyperforman_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& content) {
    const auto path = dir_ / name;
    std::ofstream(path, std::ios::binary) << content;
    return path.string();
  }

  std::filesystem::path dir_;
};

const std::string kTriangle = "a b\nb c\na c\n";
const std::string kReactions = "a -> b\nb <-> c + d\n";

TEST(Cli, ComputeFromStdin) {
  const auto r = invoke({"compute"}, kTriangle);
  EXPECT_EQ(r.status, kExitOk);
  EXPECT_EQ(r.out, "edge_index,size,degree_sum,F\n0,2,4,0\n1,2,4,0\n2,2,4,0\n");
}

TEST(Cli, ComputeDirectedJson) {
  const auto r = invoke({"compute", "--mode", "directed", "--format", "json"}, kReactions);
  ASSERT_EQ(r.status, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.size(), 3u);
  EXPECT_EQ(j[0]["F_through"], j[0]["F_in"].get<int>() + j[0]["F_out"].get<int>());
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(invoke({"compute"}, "a b\nc,d e\n").status, kExitInputError);
  EXPECT_EQ(invoke({"compute", "--mode", "directed"}, "a + b c\n").status, kExitInputError);
  EXPECT_EQ(invoke({"compute", "/nonexistent/path/input.uhg"}).status, kExitInputError);
  EXPECT_EQ(invoke({}).status, kExitUsageError);
  EXPECT_EQ(invoke({"frobnicate"}).status, kExitUsageError);
  EXPECT_EQ(invoke({"compute", "--mode", "sideways"}, kTriangle).status, kExitUsageError);
  EXPECT_EQ(invoke({"stats", "--format", "csv"}, kTriangle).status, kExitUsageError);
  EXPECT_EQ(invoke({"extremes", "--top", "0"}, kTriangle).status, kExitUsageError);
  EXPECT_EQ(invoke({"extremes", "--variant", "F_in"}, kTriangle).status, kExitUsageError);
  EXPECT_EQ(invoke({"extremes", "--mode", "directed", "--variant", "F"}, kReactions).status,
            kExitUsageError);
  EXPECT_EQ(invoke({"stats", "--bin-width", "0"}, kTriangle).status, kExitUsageError);
  EXPECT_EQ(invoke({"compute", "--mode", "directed", "--weights", "w.json"}).status,
            kExitUsageError);
  EXPECT_EQ(invoke({"compute", "--help"}).status, kExitOk);
}

TEST(Cli, ErrorMessageNamesTheLine) {
  const auto r = invoke({"compute", "--mode", "directed"}, "a -> b\n\nx y\n");
  EXPECT_EQ(r.status, kExitInputError);
  EXPECT_NE(r.err.find("line 3"), std::string::npos) << r.err;
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, OutputIsDeterministic) {
  std::mt19937_64 rng(71);
  const auto h = testing::build(testing::random_directed(rng, 12, 20));
  const std::string text = write_reactions(h);
  for (const char* sub : {"compute", "stats", "extremes", "bounds", "convert"}) {
    const auto a = invoke({sub, "--mode", "directed"}, text);
    const auto b = invoke({sub, "--mode", "directed"}, text);
    ASSERT_EQ(a.status, kExitOk) << sub << ": " << a.err;
    EXPECT_EQ(a.out, b.out) << sub;
  }
}

TEST(Cli, ExtremesAgreeWithSortedCompute) {
  std::mt19937_64 rng(72);
  for (int trial = 0; trial < 20; ++trial) {
    const auto h = testing::build(testing::random_hypergraph(rng, 10, 15));
    const std::string text = write_undirected(h);
    const auto compute = invoke({"compute"}, text);
    ASSERT_EQ(compute.status, kExitOk);
    std::vector<std::pair<long, long>> rows;  // (F, edge_index)
    const auto lines = split_lines(compute.out);
    for (std::size_t i = 1; i < lines.size(); ++i) {
      const auto first = lines[i].find(',');
      const auto last = lines[i].rfind(',');
      rows.emplace_back(std::stol(lines[i].substr(last + 1)), std::stol(lines[i].substr(0, first)));
    }
    std::sort(rows.begin(), rows.end());

    const auto ext = invoke({"extremes", "--top", std::to_string(rows.size())}, text);
    ASSERT_EQ(ext.status, kExitOk);
    const auto ext_lines = split_lines(ext.out);
    ASSERT_EQ(ext_lines.size(), 1 + 2 * rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const std::string expected = "min," + std::to_string(i + 1) + "," +
                                   std::to_string(rows[i].second) + "," +
                                   std::to_string(rows[i].first) + ",";
      ASSERT_EQ(ext_lines[1 + i].rfind(expected, 0), 0u) << ext_lines[1 + i];
    }
  }
}

TEST(Cli, DirectedStatsHasSixHistograms) {
  const auto r = invoke({"stats", "--mode", "directed", "--bin-width", "1"}, kReactions);
  ASSERT_EQ(r.status, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["num_arcs"], 3);
  ASSERT_EQ(j["histograms"].size(), 6u);
  for (const char* v : {"F_in", "F_out", "F_loss_tail", "F_loss_head", "F_through", "F_loss"}) {
    EXPECT_EQ(j["histograms"][v]["total"], 3) << v;
  }
  EXPECT_TRUE(j.contains("tail_head_frequencies"));
  EXPECT_EQ(j["degree_sum_distributions"].size(), 4u);
}

TEST(Cli, UndirectedStatsSummaries) {
  const auto r = invoke({"stats"}, kTriangle);
  ASSERT_EQ(r.status, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["curvature_histogram"]["bin_width"], 10);
  EXPECT_EQ(j["bin_summaries"].size(), 3u);
  EXPECT_TRUE(j["bin_summaries"].contains("hyperedge_degree_median"));
}

TEST(Cli, BoundsCsv) {
  const auto r = invoke({"bounds"}, "a b\n");
  ASSERT_EQ(r.status, kExitOk) << r.err;
  EXPECT_EQ(r.out,
            "edge_index,variant,value,multiset_lower,multiset_upper,simple_lower,simple_upper\n"
            "0,F,2,2,2,0,2\n");
  const auto d = invoke({"bounds", "--mode", "directed", "--variant", "F_loss"}, "a -> b\n");
  ASSERT_EQ(d.status, kExitOk) << d.err;
  EXPECT_EQ(split_lines(d.out).size(), 2u);
  EXPECT_NE(d.out.find("0,F_loss,0,0,0,"), std::string::npos) << d.out;
}

TEST_F(TempDir, ConvertRoundTripsThroughFiles) {
  const auto input = write("in.rxn", "# comment\n2 a + b <-> c\n");
  const auto output = (dir_ / "out.rxn").string();
  ASSERT_EQ(invoke({"convert", input, "--mode", "directed", "--output", output}).status, kExitOk);
  std::ifstream file(output);
  std::stringstream converted;
  converted << file.rdbuf();
  EXPECT_EQ(converted.str(), "a + b -> c\nc -> a + b\n");
  const auto again = invoke({"convert", "--mode", "directed"}, converted.str());
  EXPECT_EQ(again.out, converted.str());
}

TEST_F(TempDir, WeightedDocumentViaWeightsFlag) {
  const auto doc = write("w.json", R"({"vertices":[{"label":"i"},{"label":"j"},{"label":"k"}],
    "hyperedges":[{"members":["i","j"]},{"members":["i","k"],"weight":4}]})");
  const auto r = invoke({"compute", "--weights", doc});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  EXPECT_EQ(r.out, "edge_index,size,degree_sum,F\n0,2,3,1.5\n1,2,3,0\n");
  EXPECT_EQ(invoke({"compute", "--mode", "weighted", doc}).out, r.out);
  EXPECT_EQ(invoke({"compute", doc, "--weights", doc}).status, kExitUsageError);
  EXPECT_EQ(invoke({"bounds", "--weights", doc}).status, kExitUsageError);
}

}  // namespace
}  // namespace hyperforman::cli
