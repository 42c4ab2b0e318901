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

#include "hyperforman/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hyperforman/error.hpp"

namespace hyperforman {

namespace {

using nlohmann::ordered_json;

constexpr std::int64_t kMaxBins = 10'000'000;

std::int64_t bin_number(double value, double origin, double width) {
  return static_cast<std::int64_t>(std::floor((value - origin) / width));
}

double quantile(const std::vector<double>& sorted, double p) {
  const double h = static_cast<double>(sorted.size() - 1) * p;
  const auto lo = static_cast<std::size_t>(std::floor(h));
  if (lo + 1 >= sorted.size()) return sorted.back();
  return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[lo + 1] - sorted[lo]);
}

bool is_integral_record(const CurvatureRecord& r) {
  const auto* u = std::get_if<UndirectedRecord>(&r);
  return u == nullptr || !u->weighted;
}

template <typename Describe>
ExtremesReport rank_extremes(std::span<const CurvatureRecord> records, Variant variant,
                             std::size_t k, Describe&& describe) {
  if (k == 0) throw Error("top-k must be at least 1");
  struct Keyed {
    double value;
    std::size_t index;
    std::size_t position;
  };
  std::vector<Keyed> keyed;
  keyed.reserve(records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    keyed.push_back({value_of(records[i], variant), edge_index(records[i]), i});
  }
  const std::size_t take = std::min(k, keyed.size());

  auto entries = [&](auto&& less) {
    std::vector<Keyed> sorted = keyed;
    std::partial_sort(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(take),
                      sorted.end(), less);
    std::vector<ExtremeEntry> out;
    out.reserve(take);
    for (std::size_t i = 0; i < take; ++i) {
      const auto& key = sorted[i];
      out.push_back({records[key.position], key.value, describe(key.index)});
    }
    return out;
  };

  ExtremesReport report;
  report.variant = variant;
  report.k = k;
  report.most_negative = entries([](const Keyed& a, const Keyed& b) {
    return a.value != b.value ? a.value < b.value : a.index < b.index;
  });
  report.most_positive = entries([](const Keyed& a, const Keyed& b) {
    return a.value != b.value ? a.value > b.value : a.index < b.index;
  });
  return report;
}

std::string join_labels(std::span<const std::uint32_t> ids, const VertexTable& vertices,
                        std::string_view separator) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += separator;
    out += vertices.label(VertexId{ids[i]});
  }
  return out;
}

ordered_json entry_json(const ExtremeEntry& entry) {
  ordered_json j;
  j["edge_index"] = edge_index(entry.record);
  if (is_integral_record(entry.record)) {
    j["value"] = static_cast<std::int64_t>(entry.value);
  } else {
    j["value"] = entry.value;
  }
  j["description"] = entry.description;
  return j;
}

}  // namespace

// ---------------------------------------------------------------------------
// Distributions

Distribution size_distribution(const UndirectedHypergraph& h) {
  Distribution d;
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    ++d[static_cast<std::int64_t>(h.edge_index().row_size(e))];
  }
  return d;
}

Distribution degree_distribution(const UndirectedHypergraph& h, DegreeKind kind) {
  if (kind != DegreeKind::undirected) {
    throw Error("in/out degrees are defined for directed hypergraphs only");
  }
  Distribution d;
  for (std::int32_t deg : h.degrees()) ++d[deg];
  return d;
}

Distribution degree_distribution(const DirectedHypergraph& h, DegreeKind kind) {
  if (kind == DegreeKind::undirected) {
    throw Error("directed hypergraphs have in and out degrees, not an undirected degree");
  }
  Distribution d;
  for (std::int32_t deg : kind == DegreeKind::in ? h.in_degrees() : h.out_degrees()) ++d[deg];
  return d;
}

Distribution value_distribution(std::span<const std::int64_t> values) {
  Distribution d;
  for (std::int64_t v : values) ++d[v];
  return d;
}

// ---------------------------------------------------------------------------
// Histograms

std::size_t Histogram::total() const {
  return std::accumulate(bins.begin(), bins.end(), std::size_t{0},
                         [](std::size_t acc, const Bin& b) { return acc + b.count; });
}

std::optional<std::size_t> Histogram::locate(double value) const {
  if (bins.empty() || !std::isfinite(value)) return std::nullopt;
  const std::int64_t k = bin_number(value, origin, bin_width) - first_bin;
  if (k < 0 || k >= static_cast<std::int64_t>(bins.size())) return std::nullopt;
  return static_cast<std::size_t>(k);
}

Histogram curvature_histogram(std::span<const double> values, double bin_width, double origin) {
  if (!(std::isfinite(bin_width) && bin_width > 0.0)) throw Error("bin width must be > 0");
  if (!std::isfinite(origin)) throw Error("histogram origin must be finite");
  Histogram hist;
  hist.bin_width = bin_width;
  hist.origin = origin;
  if (values.empty()) return hist;

  for (double v : values) {
    if (!std::isfinite(v)) throw Error("histogram input contains a non-finite value");
  }
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  const std::int64_t first = bin_number(*lo, origin, bin_width);
  const std::int64_t last = bin_number(*hi, origin, bin_width);
  if (last - first + 1 > kMaxBins) throw Error("bin width too small for the value range");

  hist.first_bin = first;
  hist.bins.resize(static_cast<std::size_t>(last - first + 1));
  for (std::size_t i = 0; i < hist.bins.size(); ++i) {
    const auto k = static_cast<double>(first + static_cast<std::int64_t>(i));
    hist.bins[i].lower = origin + k * bin_width;
    hist.bins[i].upper = origin + (k + 1.0) * bin_width;
  }
  for (double v : values) {
    ++hist.bins[static_cast<std::size_t>(bin_number(v, origin, bin_width) - first)].count;
  }
  return hist;
}

// ---------------------------------------------------------------------------
// Per-bin summaries

FiveNumber five_number(std::vector<double> values) {
  if (values.empty()) throw Error("five-number summary of an empty sample");
  std::sort(values.begin(), values.end());
  return {values.front(), quantile(values, 0.25), quantile(values, 0.5),
          quantile(values, 0.75), values.back()};
}

std::string_view to_string(BinQuantity q) {
  switch (q) {
    case BinQuantity::normalized_size: return "normalized_size";
    case BinQuantity::hyperedge_degree_median: return "hyperedge_degree_median";
    case BinQuantity::hyperedge_degree_mean: return "hyperedge_degree_mean";
  }
  return "unknown";
}

std::vector<std::size_t> hyperedge_degrees(const UndirectedHypergraph& h) {
  const std::size_t n = h.num_edges();
  std::vector<std::size_t> out(n, 0);
  std::vector<std::size_t> stamp(n, 0);
  for (std::size_t e = 0; e < n; ++e) {
    for (std::uint32_t k : h.members(e)) {
      for (std::uint32_t l : h.incidence_index().row(k)) {
        if (l == e || stamp[l] == e + 1) continue;
        stamp[l] = e + 1;
        ++out[e];
      }
    }
  }
  return out;
}

std::vector<BinSummary> per_bin_summary(std::span<const UndirectedRecord> records,
                                        const UndirectedHypergraph& h,
                                        const Histogram& histogram, BinQuantity quantity) {
  std::vector<double> per_edge(h.num_edges());
  if (quantity == BinQuantity::normalized_size) {
    std::size_t max_size = 0;
    for (std::size_t e = 0; e < h.num_edges(); ++e) max_size = std::max(max_size, h.edge_size(e));
    for (std::size_t e = 0; e < h.num_edges(); ++e) {
      per_edge[e] = static_cast<double>(h.edge_size(e)) / static_cast<double>(max_size);
    }
  } else {
    const auto degrees = hyperedge_degrees(h);
    std::transform(degrees.begin(), degrees.end(), per_edge.begin(),
                   [](std::size_t d) { return static_cast<double>(d); });
  }

  std::vector<std::vector<double>> samples(histogram.bins.size());
  for (const auto& r : records) {
    if (r.edge_index >= h.num_edges()) throw Error("record refers to a missing hyperedge");
    const auto bin = histogram.locate(r.value());
    if (!bin) {
      throw Error("curvature of hyperedge " + std::to_string(r.edge_index) +
                  " lies outside the histogram");
    }
    samples[*bin].push_back(per_edge[r.edge_index]);
  }

  std::vector<BinSummary> out(histogram.bins.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i].lower = histogram.bins[i].lower;
    out[i].upper = histogram.bins[i].upper;
    out[i].count = samples[i].size();
    if (samples[i].empty()) continue;
    out[i].mean = std::accumulate(samples[i].begin(), samples[i].end(), 0.0) /
                  static_cast<double>(samples[i].size());
    out[i].summary = five_number(std::move(samples[i]));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Tail/head sizes

SizeFrequencyTable tail_head_frequencies(const DirectedHypergraph& h) {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> counts;
  for (std::size_t e = 0; e < h.num_arcs(); ++e) {
    ++counts[{h.tail_index().row_size(e), h.head_index().row_size(e)}];
  }
  SizeFrequencyTable table;
  table.total = h.num_arcs();
  for (const auto& [sizes, count] : counts) {
    table.entries.push_back({sizes.first, sizes.second, count,
                             std::log(static_cast<double>(count)) / std::log(100.0)});
  }
  return table;
}

// ---------------------------------------------------------------------------
// Extremes

std::string describe_edge(const UndirectedHypergraph& h, std::size_t e) {
  return join_labels(h.members(e), h.vertices(), " ");
}

std::string describe_arc(const DirectedHypergraph& h, std::size_t e) {
  return join_labels(h.tail(e), h.vertices(), " + ") + " -> " +
         join_labels(h.head(e), h.vertices(), " + ");
}

ExtremesReport extremes(std::span<const CurvatureRecord> records, const UndirectedHypergraph& h,
                        Variant variant, std::size_t k) {
  return rank_extremes(records, variant, k,
                       [&](std::size_t e) { return describe_edge(h, e); });
}

ExtremesReport extremes(std::span<const CurvatureRecord> records, const DirectedHypergraph& h,
                        Variant variant, std::size_t k) {
  return rank_extremes(records, variant, k, [&](std::size_t e) { return describe_arc(h, e); });
}

// ---------------------------------------------------------------------------
// JSON

ordered_json to_json(const Distribution& d) {
  ordered_json out = ordered_json::array();
  for (const auto& [value, count] : d) out.push_back({{"value", value}, {"count", count}});
  return out;
}

ordered_json to_json(const Histogram& h) {
  ordered_json out;
  out["bin_width"] = h.bin_width;
  out["origin"] = h.origin;
  out["total"] = h.total();
  out["bins"] = ordered_json::array();
  for (const auto& b : h.bins) {
    out["bins"].push_back({{"lower", b.lower}, {"upper", b.upper}, {"count", b.count}});
  }
  return out;
}

ordered_json to_json(std::span<const BinSummary> summaries) {
  ordered_json out = ordered_json::array();
  for (const auto& s : summaries) {
    ordered_json j;
    j["lower"] = s.lower;
    j["upper"] = s.upper;
    j["count"] = s.count;
    if (s.summary) {
      j["min"] = s.summary->min;
      j["q1"] = s.summary->q1;
      j["median"] = s.summary->median;
      j["q3"] = s.summary->q3;
      j["max"] = s.summary->max;
      j["mean"] = *s.mean;
    }
    out.push_back(std::move(j));
  }
  return out;
}

ordered_json to_json(const SizeFrequencyTable& table) {
  ordered_json out;
  out["total"] = table.total;
  out["entries"] = ordered_json::array();
  for (const auto& e : table.entries) {
    out["entries"].push_back({{"tail_size", e.tail_size},
                              {"head_size", e.head_size},
                              {"count", e.count},
                              {"radius", e.radius}});
  }
  return out;
}

ordered_json to_json(const ExtremesReport& report) {
  ordered_json out;
  out["variant"] = std::string(to_string(report.variant));
  out["k"] = report.k;
  out["most_negative"] = ordered_json::array();
  for (const auto& e : report.most_negative) out["most_negative"].push_back(entry_json(e));
  out["most_positive"] = ordered_json::array();
  for (const auto& e : report.most_positive) out["most_positive"].push_back(entry_json(e));
  return out;
}

}  // namespace hyperforman
