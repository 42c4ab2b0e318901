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

#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "hyperforman/curvature.hpp"
#include "hyperforman/error.hpp"
#include "hyperforman/ingest.hpp"
#include "support/oracle.hpp"

namespace hyperforman {
namespace {

std::vector<std::string> labels_of(const UndirectedHypergraph& h, std::size_t e) {
  std::vector<std::string> out;
  for (std::uint32_t v : h.members(e)) out.push_back(h.vertices().label(VertexId{v}));
  return out;
}

std::vector<std::string> labels_of(const DirectedHypergraph& h, std::span<const std::uint32_t> side) {
  std::vector<std::string> out;
  for (std::uint32_t v : side) out.push_back(h.vertices().label(VertexId{v}));
  return out;
}

std::size_t parse_error_line(auto&& fn) {
  try {
    fn();
  } catch (const ParseError& e) {
    return e.line();
  }
  ADD_FAILURE() << "no ParseError";
  return 0;
}

// --- undirected line format ---------------------------------------------

TEST(ParseUndirected, SkipsBlankAndCommentLines) {
  const auto h = parse_undirected("# header\n\na b c\n   \n  # indented comment\nc d\n");
  ASSERT_EQ(h.num_edges(), 2u);
  EXPECT_EQ(labels_of(h, 0), (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_EQ(labels_of(h, 1), (std::vector<std::string>{"c", "d"}));
  EXPECT_EQ(h.num_vertices(), 4u);
}

TEST(ParseUndirected, TabsAndRepeatedMembers) {
  const auto h = parse_undirected("x\ty  x\r\n");
  ASSERT_EQ(h.num_edges(), 1u);
  EXPECT_EQ(h.edge_size(0), 2u);
}

TEST(ParseUndirected, RejectsCommaLabels) {
  EXPECT_EQ(parse_error_line([] { parse_undirected("a b\nc d,e\n"); }), 2u);
}

TEST(ParseUndirected, RejectsEmptyInput) {
  EXPECT_THROW(parse_undirected(""), ParseError);
  EXPECT_THROW(parse_undirected("# nothing\n\n"), ParseError);
}

// --- reaction format ----------------------------------------------------

TEST(ParseReactions, ForwardReaction) {
  const auto net = parse_reactions("glc + atp -> g6p + adp\n");
  ASSERT_EQ(net.graph.num_arcs(), 1u);
  EXPECT_EQ(labels_of(net.graph, net.graph.tail(0)), (std::vector<std::string>{"glc", "atp"}));
  EXPECT_EQ(labels_of(net.graph, net.graph.head(0)), (std::vector<std::string>{"g6p", "adp"}));
  EXPECT_EQ(net.reactions.size(), 1u);
  EXPECT_EQ(net.reactions[0].line, 1u);
}

TEST(ParseReactions, ReversibleExpandsToTwoArcs) {
  const auto net = parse_reactions("a <-> b + c\n");
  ASSERT_EQ(net.graph.num_arcs(), 2u);
  EXPECT_EQ(labels_of(net.graph, net.graph.tail(0)), (std::vector<std::string>{"a"}));
  EXPECT_EQ(labels_of(net.graph, net.graph.head(0)), (std::vector<std::string>{"b", "c"}));
  EXPECT_EQ(labels_of(net.graph, net.graph.tail(1)), (std::vector<std::string>{"b", "c"}));
  EXPECT_EQ(labels_of(net.graph, net.graph.head(1)), (std::vector<std::string>{"a"}));
  EXPECT_EQ(net.arc_origins[0].direction, ArcDirection::forward);
  EXPECT_EQ(net.arc_origins[1].direction, ArcDirection::backward);
  EXPECT_EQ(net.arc_origins[1].reaction, 0u);
}

TEST(ParseReactions, CoefficientsDoNotChangeTopology) {
  const auto with = parse_reactions("2 h + o2 -> 2 h2o\n");
  const auto without = parse_reactions("h + o2 -> h2o\n");
  EXPECT_EQ(with.graph.tail_index().items, without.graph.tail_index().items);
  EXPECT_EQ(with.graph.head_index().items, without.graph.head_index().items);
  EXPECT_EQ(with.reactions[0].educts[0].coefficient, 2.0);
  EXPECT_EQ(with.reactions[0].educts[1].coefficient, 1.0);
  EXPECT_EQ(parse_reactions("0.5 a -> b\n").reactions[0].educts[0].coefficient, 0.5);
}

TEST(ParseReactions, ReversibleAndIrreversibleCounts) {
  std::string text;
  for (int i = 0; i < 686; ++i) text += "s" + std::to_string(i) + " -> p" + std::to_string(i) + "\n";
  for (int i = 0; i < 245; ++i) text += "r" + std::to_string(i) + " <-> q" + std::to_string(i) + "\n";
  const auto net = parse_reactions(text);
  EXPECT_EQ(net.reactions.size(), 931u);
  EXPECT_EQ(net.graph.num_arcs(), 1176u);
}

TEST(ParseReactions, ErrorLines) {
  EXPECT_EQ(parse_error_line([] { parse_reactions("a + b c\n"); }), 1u);
  EXPECT_EQ(parse_error_line([] { parse_reactions("a -> b\na -> b -> c\n"); }), 2u);
  EXPECT_EQ(parse_error_line([] { parse_reactions("a -> b\n\n -> c\n"); }), 3u);
  EXPECT_EQ(parse_error_line([] { parse_reactions("a ->\n"); }), 1u);
  EXPECT_EQ(parse_error_line([] { parse_reactions("a + + b -> c\n"); }), 1u);
  EXPECT_EQ(parse_error_line([] { parse_reactions("x a -> c\n"); }), 1u);
  EXPECT_EQ(parse_error_line([] { parse_reactions("0 a -> c\n"); }), 1u);
  EXPECT_EQ(parse_error_line([] { parse_reactions("-1 a -> c\n"); }), 1u);
  EXPECT_EQ(parse_error_line([] { parse_reactions("1 2 a -> c\n"); }), 1u);
  EXPECT_EQ(parse_error_line([] { parse_reactions("a+b -> c\n"); }), 1u);
  EXPECT_EQ(parse_error_line([] { parse_reactions("a -> c,d\n"); }), 1u);
  EXPECT_EQ(parse_error_line([] { parse_reactions("# only comments\n"); }), 1u);
}

TEST(ParseReactions, ArrowMustStandAlone) {
  EXPECT_THROW(parse_reactions("a->b\n"), ParseError);
}

// --- weighted document ------------------------------------------------------

TEST(ParseWeighted, ReadsWeightsAndDefaults) {
  const auto w = parse_weighted(R"({
    "vertices": [{"label": "i", "weight": 3}, {"label": "j"}],
    "hyperedges": [{"members": ["i", "j"], "weight": 2.5}, {"members": ["j"]}]
  })");
  ASSERT_EQ(w.graph.num_edges(), 2u);
  EXPECT_EQ(w.weights.vertex_weights, (std::vector<double>{3.0, 1.0}));
  EXPECT_EQ(w.weights.edge_weights, (std::vector<double>{2.5, 1.0}));
}

TEST(ParseWeighted, RejectsBadDocuments) {
  EXPECT_THROW(parse_weighted(R"({"vertices":[{"label":"a"}],"hyperedges":[{"members":["a"],"weight":0}]})"),
               Error);
  EXPECT_THROW(parse_weighted(R"({"vertices":[{"label":"a","weight":-1}],"hyperedges":[{"members":["a"]}]})"),
               Error);
  EXPECT_THROW(parse_weighted(R"({"vertices":[{"label":"a"}],"hyperedges":[{"members":["b"]}]})"), Error);
  EXPECT_THROW(parse_weighted(R"({"vertices":[{"label":"a"},{"label":"a"}],"hyperedges":[{"members":["a"]}]})"),
               Error);
  EXPECT_THROW(parse_weighted(R"({"vertices":[{"label":"a"}],"hyperedges":[]})"), Error);
  EXPECT_EQ(parse_error_line([] { parse_weighted("{\n\"vertices\": [\n,]}"); }), 3u);
}

// --- record writers ----------------------------------------------------------

TEST(WriteRecords, EmptyTableIsHeaderOnly) {
  const std::vector<CurvatureRecord> none;
  EXPECT_EQ(write_records(none, Format::csv, RecordKind::undirected),
            std::string(kUndirectedCsvHeader) + "\n");
  EXPECT_EQ(write_records(none, Format::csv, RecordKind::directed),
            std::string(kDirectedCsvHeader) + "\n");
  EXPECT_EQ(write_records(none, Format::json), "[]\n");
}

TEST(WriteRecords, IsolatedArcRow) {
  const std::vector<ArcSpec> specs{{{"i"}, {"j"}}};
  const auto records = compute_all(build_directed(specs));
  EXPECT_EQ(write_records(records, Format::csv),
            std::string(kDirectedCsvHeader) + "\n0,1,1,0,1,1,0,1,1,2,0,0,0,2\n");
}

TEST(WriteRecords, UndirectedCsvAndJson) {
  const std::vector<std::vector<std::string>> lists{{"a", "b"}, {"b", "c"}};
  const auto records = compute_all(build_undirected(lists));
  EXPECT_EQ(write_records(records, Format::csv),
            std::string(kUndirectedCsvHeader) + "\n0,2,3,1\n1,2,3,1\n");
  const auto json = nlohmann::json::parse(write_records(records, Format::json));
  ASSERT_EQ(json.size(), 2u);
  EXPECT_EQ(json[1]["edge_index"], 1);
  EXPECT_EQ(json[1]["F"], 1);
}

TEST(WriteRecords, WeightedValuesUseShortestForm) {
  const std::vector<std::vector<std::string>> lists{{"i", "j"}, {"i", "k"}};
  const auto h = build_undirected(lists);
  WeightOverlay w;
  w.edge_weights = {1.0, 4.0};
  const auto records = compute_all(h, w);
  EXPECT_EQ(write_records(records, Format::csv),
            std::string(kUndirectedCsvHeader) + "\n0,2,3,1.5\n1,2,3,0\n");
}

TEST(WriteRecords, MixedKindsAreRejected) {
  const std::vector<CurvatureRecord> mixed{UndirectedRecord{}, DirectedRecord{}};
  EXPECT_THROW(write_records(mixed, Format::csv), Error);
  const std::vector<CurvatureRecord> one{UndirectedRecord{}};
  EXPECT_THROW(write_records(one, Format::json, RecordKind::directed), Error);
}

TEST(FormatNumber, ShortestRoundTrip) {
  EXPECT_EQ(format_number(3.0), "3");
  EXPECT_EQ(format_number(-0.25), "-0.25");
  EXPECT_EQ(format_number(0.1), "0.1");
}

// --- round trips -------------------------------------------------------------

TEST(RoundTrip, UndirectedText) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 200; ++trial) {
    const auto h = testing::build(testing::random_hypergraph(rng, 10, 15));
    const auto back = parse_undirected(write_undirected(h));
    ASSERT_EQ(back.num_edges(), h.num_edges());
    for (std::size_t e = 0; e < h.num_edges(); ++e) ASSERT_EQ(labels_of(back, e), labels_of(h, e));
    ASSERT_EQ(write_undirected(back), write_undirected(h));
  }
}

TEST(RoundTrip, ReactionText) {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 200; ++trial) {
    const auto h = testing::build(testing::random_directed(rng, 10, 15));
    const auto back = parse_reactions(write_reactions(h)).graph;
    ASSERT_EQ(back.num_arcs(), h.num_arcs());
    for (std::size_t e = 0; e < h.num_arcs(); ++e) {
      ASSERT_EQ(labels_of(back, back.tail(e)), labels_of(h, h.tail(e)));
      ASSERT_EQ(labels_of(back, back.head(e)), labels_of(h, h.head(e)));
    }
  }
}

TEST(RoundTrip, WeightedDocument) {
  std::mt19937_64 rng(53);
  std::uniform_real_distribution<double> weight(0.01, 100.0);
  for (int trial = 0; trial < 100; ++trial) {
    const auto h = testing::build(testing::random_hypergraph(rng, 10, 15));
    WeightOverlay w;
    for (std::size_t v = 0; v < h.num_vertices(); ++v) w.vertex_weights.push_back(weight(rng));
    for (std::size_t e = 0; e < h.num_edges(); ++e) w.edge_weights.push_back(weight(rng));
    const auto back = parse_weighted(write_weighted(h, w));
    ASSERT_EQ(back.weights.vertex_weights, w.vertex_weights);
    ASSERT_EQ(back.weights.edge_weights, w.edge_weights);
    ASSERT_EQ(back.graph.num_edges(), h.num_edges());
    for (std::size_t e = 0; e < h.num_edges(); ++e) ASSERT_EQ(labels_of(back.graph, e), labels_of(h, e));
  }
}

}  // namespace
}  // namespace hyperforman
