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

// Forman-Ricci curvature of hyperedges and hyperarcs.
//
// Undirected, unweighted:   F(e) = 2|e| - sum_{k in e} d_k
// Undirected, weighted:     F(e) = w_e * sum_{k in e} (w_k / w_e
//                                     - sum_{l ~ k, l != e} w_k / sqrt(w_e w_l))
// Directed (e = tail -> head), with raw in/out degrees that include e itself:
//   F_in        = |tail| - sum_{i in tail} in(i)
//   F_out       = |head| - sum_{j in head} out(j)
//   F_loss_tail = |tail| - sum_{i in tail} out(i)
//   F_loss_head = |head| - sum_{j in head} in(j)
//   F_through   = F_in + F_out
//   F_loss      = F_loss_tail + F_loss_head
//   F_total     = F_through + F_loss
//
// Graphs are the 2-uniform special case; C_n has F = 0 on every edge.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "hyperforman/hypergraph.hpp"
#include "hyperforman/simd/kernels.hpp"

namespace hyperforman {

enum class Variant { F, F_in, F_out, F_through, F_loss_tail, F_loss_head, F_loss, F_total };

inline constexpr std::array<Variant, 7> kDirectedVariants{
    Variant::F_in,        Variant::F_out,  Variant::F_through, Variant::F_loss_tail,
    Variant::F_loss_head, Variant::F_loss, Variant::F_total};

std::string_view to_string(Variant v);
/// Throws Error on names other than the eight variant names.
Variant parse_variant(std::string_view name);

enum class Regime { multiset, simple };

std::string_view to_string(Regime r);

struct BoundPair {
  double lower = 0.0;
  double upper = 0.0;
  Regime regime = Regime::multiset;

  bool contains(double value) const { return lower <= value && value <= upper; }
};

struct UndirectedRecord {
  std::size_t edge_index = 0;
  std::size_t size = 0;
  std::int64_t degree_sum = 0;
  std::int64_t forman = 0;
  /// Present only when the record was computed against a WeightOverlay.
  std::optional<double> weighted;

  double value() const { return weighted ? *weighted : static_cast<double>(forman); }

  friend bool operator==(const UndirectedRecord&, const UndirectedRecord&) = default;
};

struct DirectedRecord {
  std::size_t edge_index = 0;
  std::size_t tail_size = 0;
  std::size_t head_size = 0;
  std::int64_t sum_in_tail = 0;
  std::int64_t sum_out_tail = 0;
  std::int64_t sum_in_head = 0;
  std::int64_t sum_out_head = 0;
  std::int64_t f_in = 0;
  std::int64_t f_out = 0;
  std::int64_t f_through = 0;
  std::int64_t f_loss_tail = 0;
  std::int64_t f_loss_head = 0;
  std::int64_t f_loss = 0;
  std::int64_t f_total = 0;

  /// Throws Error for Variant::F.
  std::int64_t get(Variant v) const;

  friend bool operator==(const DirectedRecord&, const DirectedRecord&) = default;
};

using CurvatureRecord = std::variant<UndirectedRecord, DirectedRecord>;

std::size_t edge_index(const CurvatureRecord& record);
/// Value of `variant` in `record`; throws Error when the variant does not
/// apply to the record kind.
double value_of(const CurvatureRecord& record, Variant variant);

// --- single (hyper)edge -----------------------------------------------------

std::int64_t forman_unweighted_undirected(const UndirectedHypergraph& h, std::size_t e);
double forman_weighted_undirected(const UndirectedHypergraph& h, const WeightOverlay& w,
                                  std::size_t e);

std::int64_t forman_in(const DirectedHypergraph& h, std::size_t e);
std::int64_t forman_out(const DirectedHypergraph& h, std::size_t e);
std::int64_t forman_through(const DirectedHypergraph& h, std::size_t e);
std::int64_t forman_loss_tail(const DirectedHypergraph& h, std::size_t e);
std::int64_t forman_loss_head(const DirectedHypergraph& h, std::size_t e);
std::int64_t forman_loss(const DirectedHypergraph& h, std::size_t e);
std::int64_t forman_total(const DirectedHypergraph& h, std::size_t e);

// --- theoretical bounds -----------------------------------------------------

/// Multiset regime: [|e|(2-|E|), |e|]. Simple regime: [2|e|(1-2^(|V|-2)), |V|].
/// Simple-regime lower bounds overflow to -inf for large |V|.
BoundPair bounds_undirected(std::size_t edge_size, std::size_t num_edges,
                            std::size_t num_vertices, Regime regime);

/// Per-variant bounds for a hyperarc with the given tail/head sizes.
BoundPair bounds_directed(std::size_t tail_size, std::size_t head_size,
                          std::size_t num_edges, std::size_t num_vertices,
                          Variant variant, Regime regime);

// --- batch ------------------------------------------------------------------

std::vector<UndirectedRecord> undirected_records(
    const UndirectedHypergraph& h,
    const simd::KernelTable& kernels = simd::active_kernels());

std::vector<UndirectedRecord> weighted_records(
    const UndirectedHypergraph& h, const WeightOverlay& w,
    const simd::KernelTable& kernels = simd::active_kernels());

std::vector<DirectedRecord> directed_records(
    const DirectedHypergraph& h,
    const simd::KernelTable& kernels = simd::active_kernels());

/// One record per multiset entry, in edge-index order.
std::vector<CurvatureRecord> compute_all(const UndirectedHypergraph& h);
std::vector<CurvatureRecord> compute_all(const UndirectedHypergraph& h, const WeightOverlay& w);
std::vector<CurvatureRecord> compute_all(const DirectedHypergraph& h);
/// Always throws: weighted directed curvature is not defined.
std::vector<CurvatureRecord> compute_all(const DirectedHypergraph& h, const WeightOverlay& w);

}  // namespace hyperforman
