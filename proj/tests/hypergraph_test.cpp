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

#include <numeric>
#include <random>

#include "hyperforman/error.hpp"
#include "hyperforman/hypergraph.hpp"
#include "support/oracle.hpp"

namespace hyperforman {
namespace {

using Lists = std::vector<std::vector<std::string>>;

TEST(UndirectedHypergraph, TriangleHasDegreeTwoEverywhere) {
  const Lists lists{{"a", "b"}, {"b", "c"}, {"a", "c"}};
  const auto h = build_undirected(lists);
  EXPECT_EQ(h.num_vertices(), 3u);
  EXPECT_EQ(h.num_edges(), 3u);
  for (std::string_view v : {"a", "b", "c"}) EXPECT_EQ(h.degree(v), 2u);
}

TEST(UndirectedHypergraph, ParallelEdgesAreDistinctEntries) {
  const Lists lists{{"a", "b"}, {"a", "b"}};
  const auto h = build_undirected(lists);
  EXPECT_EQ(h.num_edges(), 2u);
  EXPECT_EQ(h.degree("a"), 2u);
}

TEST(UndirectedHypergraph, SingleHyperedge) {
  const Lists lists{{"a", "b", "c"}};
  const auto h = build_undirected(lists);
  EXPECT_EQ(h.degree("c"), 1u);
  EXPECT_EQ(h.edge_size(0), 3u);
}

TEST(UndirectedHypergraph, SharedVertexDegree) {
  const Lists lists{{"a", "b", "c"}, {"c", "d"}};
  const auto h = build_undirected(lists);
  EXPECT_EQ(h.degree("c"), 2u);
  EXPECT_EQ(h.degree("d"), 1u);
}

TEST(UndirectedHypergraph, IdsFollowFirstAppearance) {
  const Lists lists{{"x", "y"}, {"z", "x"}};
  const auto h = build_undirected(lists);
  EXPECT_EQ(h.vertices().find("x")->value, 0u);
  EXPECT_EQ(h.vertices().find("y")->value, 1u);
  EXPECT_EQ(h.vertices().find("z")->value, 2u);
  EXPECT_EQ(h.vertices().label(VertexId{2}), "z");
}

TEST(UndirectedHypergraph, DuplicateMembersCollapse) {
  const Lists lists{{"a", "a", "b"}};
  const auto h = build_undirected(lists);
  EXPECT_EQ(h.edge_size(0), 2u);
  EXPECT_EQ(h.degree("a"), 1u);
}

TEST(UndirectedHypergraph, EmptyEntryIsRejectedWithPosition) {
  const Lists lists{{"a", "b"}, {}, {"c"}};
  try {
    build_undirected(lists);
    FAIL() << "expected InputError";
  } catch (const InputError& e) {
    EXPECT_EQ(e.position(), 1u);
  }
}

TEST(UndirectedHypergraph, UnknownVertexIsAnError) {
  const Lists lists{{"a", "b"}};
  const auto h = build_undirected(lists);
  EXPECT_THROW(h.degree("zz"), Error);
  EXPECT_THROW(h.degree(VertexId{7}), Error);
  EXPECT_THROW(h.members(1), Error);
}

TEST(DirectedHypergraph, SingleArcDegrees) {
  const std::vector<ArcSpec> arcs{{{"a", "b"}, {"c"}}};
  const auto h = build_directed(arcs);
  EXPECT_EQ(h.out_degree("a"), 1u);
  EXPECT_EQ(h.out_degree("b"), 1u);
  EXPECT_EQ(h.in_degree("c"), 1u);
  EXPECT_EQ(h.in_degree("a"), 0u);
}

TEST(DirectedHypergraph, OverlappingTailAndHeadCountOnEachSide) {
  const std::vector<ArcSpec> arcs{{{"a"}, {"a", "b"}}};
  const auto h = build_directed(arcs);
  EXPECT_EQ(h.out_degree("a"), 1u);
  EXPECT_EQ(h.in_degree("a"), 1u);
}

TEST(DirectedHypergraph, PathMiddleVertex) {
  const std::vector<ArcSpec> arcs{{{"a"}, {"b"}}, {{"b"}, {"c"}}};
  const auto h = build_directed(arcs);
  EXPECT_EQ(h.out_degree("b"), 1u);
  EXPECT_EQ(h.in_degree("b"), 1u);
}

TEST(DirectedHypergraph, ParallelArcsCountTwice) {
  const std::vector<ArcSpec> arcs{{{"a"}, {"b"}}, {{"a"}, {"b"}}};
  const auto h = build_directed(arcs);
  EXPECT_EQ(h.in_degree("b"), 2u);
  EXPECT_EQ(h.in_degree("a"), 0u);
  EXPECT_EQ(h.out_degree("a"), 2u);
}

TEST(DirectedHypergraph, EmptySideIsRejectedWithPosition) {
  const std::vector<ArcSpec> empty_head{{{"a"}, {"b"}}, {{"a"}, {}}};
  try {
    build_directed(empty_head);
    FAIL() << "expected InputError";
  } catch (const InputError& e) {
    EXPECT_EQ(e.position(), 1u);
  }
  const std::vector<ArcSpec> empty_tail{{{}, {"b"}}};
  EXPECT_THROW(build_directed(empty_tail), InputError);
}

// Handshake identities and index-vs-scan equivalence on random instances.

TEST(HypergraphProperties, DegreeSumEqualsSizeSum) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const auto list = testing::random_hypergraph(rng, 10, 15);
    const auto h = testing::build(list);
    const auto degrees = h.degrees();
    const std::int64_t degree_sum = std::accumulate(degrees.begin(), degrees.end(), std::int64_t{0});
    std::int64_t size_sum = 0;
    for (std::size_t e = 0; e < h.num_edges(); ++e) size_sum += static_cast<std::int64_t>(h.edge_size(e));
    ASSERT_EQ(degree_sum, size_sum);
    for (std::uint32_t v = 0; v < list.num_vertices; ++v) {
      ASSERT_EQ(h.degree(VertexId{v}), testing::naive_degree(list, v));
    }
  }
}

TEST(HypergraphProperties, InOutSumsEqualHeadTailSizes) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    const auto list = testing::random_directed(rng, 10, 15);
    const auto h = testing::build(list);
    std::int64_t tails = 0, heads = 0;
    for (std::size_t e = 0; e < h.num_arcs(); ++e) {
      tails += static_cast<std::int64_t>(h.tail(e).size());
      heads += static_cast<std::int64_t>(h.head(e).size());
    }
    const auto out = h.out_degrees();
    const auto in = h.in_degrees();
    ASSERT_EQ(std::accumulate(out.begin(), out.end(), std::int64_t{0}), tails);
    ASSERT_EQ(std::accumulate(in.begin(), in.end(), std::int64_t{0}), heads);
    for (std::uint32_t v = 0; v < list.num_vertices; ++v) {
      ASSERT_EQ(h.in_degree(VertexId{v}), testing::naive_in_degree(list, v));
      ASSERT_EQ(h.out_degree(VertexId{v}), testing::naive_out_degree(list, v));
    }
  }
}

TEST(HypergraphProperties, IncidenceListsAreSortedAndConsistent) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const auto list = testing::random_hypergraph(rng, 10, 15);
    const auto h = testing::build(list);
    for (std::uint32_t v = 0; v < h.num_vertices(); ++v) {
      const auto inc = h.incident_edges(VertexId{v});
      ASSERT_TRUE(std::is_sorted(inc.begin(), inc.end()));
      for (auto e : inc) {
        const auto m = h.members(e);
        ASSERT_NE(std::find(m.begin(), m.end(), v), m.end());
      }
    }
  }
}

}  // namespace
}  // namespace hyperforman
