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

#pragma once

// Text formats.
//
//   .uhg  one hyperedge per line, whitespace-separated vertex labels.
//   .rxn  one reaction per line:
//           [coef] species (+ [coef] species)* (-> | <->) [coef] species ...
//         "<->" expands to a forward arc followed by a backward arc.
//   weighted document (JSON):
//           {"vertices":   [{"label": "a", "weight": 2.0}, ...],
//            "hyperedges": [{"members": ["a", "b"], "weight": 4.0}, ...]}
//         weights are optional and default to 1.
//
// In the line formats blank lines and lines whose first non-blank character
// is '#' are skipped. Labels may not contain ','.

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hyperforman/curvature.hpp"
#include "hyperforman/hypergraph.hpp"

namespace hyperforman {

struct Term {
  double coefficient = 1.0;
  std::string species;
};

enum class Arrow { forward, reversible };

struct ReactionLine {
  std::size_t line = 0;  // one-based source line
  std::string raw;
  std::vector<Term> educts;
  Arrow arrow = Arrow::forward;
  std::vector<Term> products;
};

enum class ArcDirection { forward, backward };

struct ArcOrigin {
  std::size_t reaction = 0;  // index into ReactionNetwork::reactions
  ArcDirection direction = ArcDirection::forward;
};

struct ReactionNetwork {
  DirectedHypergraph graph;
  std::vector<ReactionLine> reactions;
  std::vector<ArcOrigin> arc_origins;  // one per arc
};

struct WeightedHypergraph {
  UndirectedHypergraph graph;
  WeightOverlay weights;
};

UndirectedHypergraph parse_undirected(std::string_view text);
ReactionNetwork parse_reactions(std::string_view text);
WeightedHypergraph parse_weighted(std::string_view document);

enum class Format { csv, json };
enum class RecordKind { undirected, directed };

inline constexpr std::string_view kUndirectedCsvHeader = "edge_index,size,degree_sum,F";
inline constexpr std::string_view kDirectedCsvHeader =
    "edge_index,tail_size,head_size,sum_in_tail,sum_out_tail,sum_in_head,sum_out_head,"
    "F_in,F_out,F_through,F_loss_tail,F_loss_head,F_loss,F_total";

/// Serializes records in order. Throws Error when a record is not of `kind`.
std::string write_records(std::span<const CurvatureRecord> records, Format format,
                          RecordKind kind);
/// Infers the kind from the first record (undirected when empty).
std::string write_records(std::span<const CurvatureRecord> records, Format format);

/// Normalized re-serializations accepted by the matching parser.
std::string write_undirected(const UndirectedHypergraph& h);
std::string write_reactions(const DirectedHypergraph& h);
std::string write_weighted(const UndirectedHypergraph& h, const WeightOverlay& w);

/// Shortest round-trip decimal form of `value` (integers print without a
/// fractional part).
std::string format_number(double value);

}  // namespace hyperforman
