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

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hyperforman/curvature.hpp"
#include "hyperforman/hypergraph.hpp"

namespace hyperforman {

/// value -> number of occurrences, ascending by value.
using Distribution = std::map<std::int64_t, std::size_t>;

enum class DegreeKind { undirected, in, out };

Distribution size_distribution(const UndirectedHypergraph& h);
/// Only DegreeKind::undirected is valid for undirected input.
Distribution degree_distribution(const UndirectedHypergraph& h, DegreeKind kind);
/// Only DegreeKind::in / DegreeKind::out are valid for directed input.
Distribution degree_distribution(const DirectedHypergraph& h, DegreeKind kind);
Distribution value_distribution(std::span<const std::int64_t> values);

struct Bin {
  double lower = 0.0;  // inclusive
  double upper = 0.0;  // exclusive
  std::size_t count = 0;

  friend bool operator==(const Bin&, const Bin&) = default;
};

/// Half-open bins [origin + k w, origin + (k+1) w) spanning the data range,
/// empty interior bins included.
struct Histogram {
  double bin_width = 1.0;
  double origin = 0.0;
  std::int64_t first_bin = 0;  // k of bins[0]
  std::vector<Bin> bins;

  std::size_t total() const;
  /// Index into `bins` of the bin holding `value`, if any.
  std::optional<std::size_t> locate(double value) const;
};

Histogram curvature_histogram(std::span<const double> values, double bin_width,
                              double origin = 0.0);

struct FiveNumber {
  double min = 0.0;
  double q1 = 0.0;
  double median = 0.0;
  double q3 = 0.0;
  double max = 0.0;
};

/// Quartiles by linear interpolation between closest ranks, h = (n-1) p.
/// Throws Error on empty input.
FiveNumber five_number(std::vector<double> values);

enum class BinQuantity { normalized_size, hyperedge_degree_median, hyperedge_degree_mean };

std::string_view to_string(BinQuantity q);

struct BinSummary {
  double lower = 0.0;
  double upper = 0.0;
  std::size_t count = 0;
  std::optional<FiveNumber> summary;  // absent for empty bins
  std::optional<double> mean;
};

/// Number of other multiset entries sharing at least one vertex with each edge.
std::vector<std::size_t> hyperedge_degrees(const UndirectedHypergraph& h);

/// Summary of `quantity` over the edges whose curvature falls in each bin.
/// normalized_size is |e| / max |e|; both hyperedge_degree quantities
/// summarize hyperedge_degrees(h).
std::vector<BinSummary> per_bin_summary(std::span<const UndirectedRecord> records,
                                        const UndirectedHypergraph& h,
                                        const Histogram& histogram, BinQuantity quantity);

struct SizeFrequency {
  std::size_t tail_size = 0;
  std::size_t head_size = 0;
  std::size_t count = 0;
  double radius = 0.0;  // log f / log 100
};

struct SizeFrequencyTable {
  std::vector<SizeFrequency> entries;  // ascending by (tail_size, head_size)
  std::size_t total = 0;
};

SizeFrequencyTable tail_head_frequencies(const DirectedHypergraph& h);

struct ExtremeEntry {
  CurvatureRecord record;
  double value = 0.0;
  std::string description;  // member labels, or "tail -> head" for arcs
};

struct ExtremesReport {
  Variant variant = Variant::F;
  std::size_t k = 0;
  std::vector<ExtremeEntry> most_negative;  // ascending value, ties by index
  std::vector<ExtremeEntry> most_positive;  // descending value, ties by index
};

ExtremesReport extremes(std::span<const CurvatureRecord> records, const UndirectedHypergraph& h,
                        Variant variant, std::size_t k);
ExtremesReport extremes(std::span<const CurvatureRecord> records, const DirectedHypergraph& h,
                        Variant variant, std::size_t k);

std::string describe_edge(const UndirectedHypergraph& h, std::size_t e);
std::string describe_arc(const DirectedHypergraph& h, std::size_t e);

nlohmann::ordered_json to_json(const Distribution& d);
nlohmann::ordered_json to_json(const Histogram& h);
nlohmann::ordered_json to_json(std::span<const BinSummary> summaries);
nlohmann::ordered_json to_json(const SizeFrequencyTable& table);
nlohmann::ordered_json to_json(const ExtremesReport& report);

}  // namespace hyperforman
