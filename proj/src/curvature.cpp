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

#include "hyperforman/curvature.hpp"

#include <cmath>
#include <string>

#include "hyperforman/error.hpp"

namespace hyperforman {

namespace {

constexpr std::array<std::string_view, 8> kVariantNames{
    "F", "F_in", "F_out", "F_through", "F_loss_tail", "F_loss_head", "F_loss", "F_total"};

std::int64_t as_int(std::size_t n) { return static_cast<std::int64_t>(n); }

std::int64_t sum_degrees(std::span<const std::uint32_t> members,
                         std::span<const std::int32_t> degrees) {
  std::int64_t sum = 0;
  for (std::uint32_t v : members) sum += degrees[v];
  return sum;
}

void require_arc(const DirectedHypergraph& h, std::size_t e) {
  if (e >= h.num_arcs()) {
    throw Error("hyperarc index " + std::to_string(e) + " out of range (" +
                std::to_string(h.num_arcs()) + " arcs)");
  }
}

// 1 - 2^exponent, saturating to -inf.
double one_minus_pow2(std::size_t exponent) {
  return 1.0 - std::ldexp(1.0, static_cast<int>(std::min<std::size_t>(exponent, 4096)));
}

void require_positive(std::size_t value, const char* what) {
  if (value == 0) throw Error(std::string(what) + " must be at least 1");
}

}  // namespace

std::string_view to_string(Variant v) { return kVariantNames[static_cast<std::size_t>(v)]; }

Variant parse_variant(std::string_view name) {
  for (std::size_t i = 0; i < kVariantNames.size(); ++i) {
    if (kVariantNames[i] == name) return static_cast<Variant>(i);
  }
  throw Error("unknown curvature variant '" + std::string(name) + "'");
}

std::string_view to_string(Regime r) { return r == Regime::multiset ? "multiset" : "simple"; }

std::int64_t DirectedRecord::get(Variant v) const {
  switch (v) {
    case Variant::F_in: return f_in;
    case Variant::F_out: return f_out;
    case Variant::F_through: return f_through;
    case Variant::F_loss_tail: return f_loss_tail;
    case Variant::F_loss_head: return f_loss_head;
    case Variant::F_loss: return f_loss;
    case Variant::F_total: return f_total;
    case Variant::F: break;
  }
  throw Error("variant F applies to undirected records only");
}

std::size_t edge_index(const CurvatureRecord& record) {
  return std::visit([](const auto& r) { return r.edge_index; }, record);
}

double value_of(const CurvatureRecord& record, Variant variant) {
  if (const auto* u = std::get_if<UndirectedRecord>(&record)) {
    if (variant != Variant::F) {
      throw Error("variant " + std::string(to_string(variant)) +
                  " applies to directed records only");
    }
    return u->value();
  }
  return static_cast<double>(std::get<DirectedRecord>(record).get(variant));
}

// ---------------------------------------------------------------------------
// Single-edge evaluation. These follow the definitions term by term; the batch
// drivers below take the kernel route.

std::int64_t forman_unweighted_undirected(const UndirectedHypergraph& h, std::size_t e) {
  const auto members = h.members(e);
  return 2 * as_int(members.size()) - sum_degrees(members, h.degrees());
}

double forman_weighted_undirected(const UndirectedHypergraph& h, const WeightOverlay& w,
                                  std::size_t e) {
  w.validate(h);
  const auto members = h.members(e);
  const double w_e = w.edge_weight(e);
  double total = 0.0;
  for (std::uint32_t k : members) {
    const double w_k = w.vertex_weight(VertexId{k});
    double neighbours = 0.0;
    for (std::uint32_t l : h.incident_edges(VertexId{k})) {
      if (l == e) continue;  // exactly one instance; parallel copies have other indices
      neighbours += w_k / std::sqrt(w_e * w.edge_weight(l));
    }
    total += w_k / w_e - neighbours;
  }
  return w_e * total;
}

std::int64_t forman_in(const DirectedHypergraph& h, std::size_t e) {
  require_arc(h, e);
  const auto tail = h.tail(e);
  return as_int(tail.size()) - sum_degrees(tail, h.in_degrees());
}

std::int64_t forman_out(const DirectedHypergraph& h, std::size_t e) {
  require_arc(h, e);
  const auto head = h.head(e);
  return as_int(head.size()) - sum_degrees(head, h.out_degrees());
}

std::int64_t forman_through(const DirectedHypergraph& h, std::size_t e) {
  return forman_in(h, e) + forman_out(h, e);
}

std::int64_t forman_loss_tail(const DirectedHypergraph& h, std::size_t e) {
  require_arc(h, e);
  const auto tail = h.tail(e);
  return as_int(tail.size()) - sum_degrees(tail, h.out_degrees());
}

std::int64_t forman_loss_head(const DirectedHypergraph& h, std::size_t e) {
  require_arc(h, e);
  const auto head = h.head(e);
  return as_int(head.size()) - sum_degrees(head, h.in_degrees());
}

std::int64_t forman_loss(const DirectedHypergraph& h, std::size_t e) {
  return forman_loss_tail(h, e) + forman_loss_head(h, e);
}

std::int64_t forman_total(const DirectedHypergraph& h, std::size_t e) {
  return forman_through(h, e) + forman_loss(h, e);
}

// ---------------------------------------------------------------------------
// Bounds

BoundPair bounds_undirected(std::size_t edge_size, std::size_t num_edges,
                            std::size_t num_vertices, Regime regime) {
  require_positive(edge_size, "hyperedge size");
  require_positive(num_edges, "edge count");
  const auto size = static_cast<double>(edge_size);
  if (regime == Regime::multiset) {
    const auto lower = as_int(edge_size) * (2 - as_int(num_edges));
    return {static_cast<double>(lower), size, regime};
  }
  require_positive(num_vertices, "vertex count");
  if (edge_size > num_vertices) {
    throw Error("hyperedge size " + std::to_string(edge_size) + " exceeds vertex count " +
                std::to_string(num_vertices) + " in the simple regime");
  }
  // d_k <= 2^(|V|-1) subsets contain k; 2|e| - |e| 2^(|V|-1) = 2|e|(1 - 2^(|V|-2)).
  const double factor =
      num_vertices >= 2 ? one_minus_pow2(num_vertices - 2) : 0.5;  // 1 - 2^-1
  return {2.0 * size * factor, static_cast<double>(num_vertices), regime};
}

BoundPair bounds_directed(std::size_t tail_size, std::size_t head_size, std::size_t num_edges,
                          std::size_t num_vertices, Variant variant, Regime regime) {
  require_positive(tail_size, "tail size");
  require_positive(head_size, "head size");
  require_positive(num_edges, "edge count");
  if (variant == Variant::F) throw Error("variant F has no directed bound");

  const auto t = static_cast<double>(tail_size);
  const auto hd = static_cast<double>(head_size);
  const double s = t + hd;

  if (regime == Regime::multiset) {
    const auto m = static_cast<double>(1 - as_int(num_edges));
    switch (variant) {
      case Variant::F_in: return {t * m, t, regime};
      case Variant::F_out: return {hd * m, hd, regime};
      case Variant::F_through: return {m * s, s, regime};
      case Variant::F_loss_tail: return {t * m, 0.0, regime};
      case Variant::F_loss_head: return {hd * m, 0.0, regime};
      case Variant::F_loss: return {m * s, 0.0, regime};
      case Variant::F_total: return {2.0 * m * s, s, regime};
      case Variant::F: break;
    }
  }

  require_positive(num_vertices, "vertex count");
  if (tail_size > num_vertices || head_size > num_vertices) {
    throw Error("hyperarc side exceeds vertex count in the simple regime");
  }
  // Exponents reproduce the published per-variant forms, which are not
  // mutually consistent (F_loss uses |V|-1 while its two parts use |V|).
  const double half = one_minus_pow2(num_vertices - 1);
  const double full = one_minus_pow2(num_vertices);
  switch (variant) {
    case Variant::F_in: return {t * half, t, regime};
    case Variant::F_out: return {hd * half, hd, regime};
    case Variant::F_through: return {full * s, s, regime};
    case Variant::F_loss_tail: return {t * full, 0.0, regime};
    case Variant::F_loss_head: return {hd * full, 0.0, regime};
    case Variant::F_loss: return {half * s, 0.0, regime};
    case Variant::F_total: return {full * s + half * s, s, regime};
    case Variant::F: break;
  }
  throw Error("unreachable variant");
}

// ---------------------------------------------------------------------------
// Batch

std::vector<UndirectedRecord> undirected_records(const UndirectedHypergraph& h,
                                                 const simd::KernelTable& kernels) {
  const auto& edges = h.edge_index();
  std::vector<std::int64_t> degree_sum(h.num_edges());
  kernels.segment_sum_i32(edges.offsets, edges.items, h.degrees(), degree_sum);

  std::vector<UndirectedRecord> out(h.num_edges());
  for (std::size_t e = 0; e < out.size(); ++e) {
    const auto size = edges.row_size(e);
    out[e] = {e, size, degree_sum[e], 2 * as_int(size) - degree_sum[e], std::nullopt};
  }
  return out;
}

// Regrouped weighted form. With S_k = sum over all entries l incident to k of
// 1/sqrt(w_l) (e included once), the self term w_k sqrt(w_e)/sqrt(w_e) = w_k
// cancels into   F(e) = 2 sum_k w_k - sqrt(w_e) sum_k w_k S_k.
std::vector<UndirectedRecord> weighted_records(const UndirectedHypergraph& h,
                                               const WeightOverlay& w,
                                               const simd::KernelTable& kernels) {
  w.validate(h);
  auto out = undirected_records(h, kernels);

  std::vector<double> inv_sqrt_edge(h.num_edges());
  for (std::size_t e = 0; e < inv_sqrt_edge.size(); ++e) {
    inv_sqrt_edge[e] = 1.0 / std::sqrt(w.edge_weight(e));
  }
  std::vector<double> vertex_w(w.vertex_weights);
  if (vertex_w.empty()) vertex_w.assign(h.num_vertices(), 1.0);

  const auto& incidence = h.incidence_index();
  const auto& edges = h.edge_index();
  std::vector<double> s(h.num_vertices());
  kernels.segment_sum_f64(incidence.offsets, incidence.items, inv_sqrt_edge, s);
  std::vector<double> weight_sum(h.num_edges());
  kernels.segment_sum_f64(edges.offsets, edges.items, vertex_w, weight_sum);
  std::vector<double> weighted_s(h.num_edges());
  kernels.segment_dot_f64(edges.offsets, edges.items, vertex_w, s, weighted_s);

  for (std::size_t e = 0; e < out.size(); ++e) {
    out[e].weighted = 2.0 * weight_sum[e] - std::sqrt(w.edge_weight(e)) * weighted_s[e];
  }
  return out;
}

std::vector<DirectedRecord> directed_records(const DirectedHypergraph& h,
                                             const simd::KernelTable& kernels) {
  const auto& tails = h.tail_index();
  const auto& heads = h.head_index();
  const std::size_t n = h.num_arcs();
  std::vector<std::int64_t> in_tail(n), out_tail(n), in_head(n), out_head(n);
  kernels.segment_sum_i32(tails.offsets, tails.items, h.in_degrees(), in_tail);
  kernels.segment_sum_i32(tails.offsets, tails.items, h.out_degrees(), out_tail);
  kernels.segment_sum_i32(heads.offsets, heads.items, h.in_degrees(), in_head);
  kernels.segment_sum_i32(heads.offsets, heads.items, h.out_degrees(), out_head);

  std::vector<DirectedRecord> out(n);
  for (std::size_t e = 0; e < n; ++e) {
    DirectedRecord& r = out[e];
    r.edge_index = e;
    r.tail_size = tails.row_size(e);
    r.head_size = heads.row_size(e);
    r.sum_in_tail = in_tail[e];
    r.sum_out_tail = out_tail[e];
    r.sum_in_head = in_head[e];
    r.sum_out_head = out_head[e];
    r.f_in = as_int(r.tail_size) - r.sum_in_tail;
    r.f_out = as_int(r.head_size) - r.sum_out_head;
    r.f_loss_tail = as_int(r.tail_size) - r.sum_out_tail;
    r.f_loss_head = as_int(r.head_size) - r.sum_in_head;
    r.f_through = r.f_in + r.f_out;
    r.f_loss = r.f_loss_tail + r.f_loss_head;
    r.f_total = r.f_through + r.f_loss;
  }
  return out;
}

namespace {

template <typename Record>
std::vector<CurvatureRecord> widen(std::vector<Record> records) {
  std::vector<CurvatureRecord> out;
  out.reserve(records.size());
  for (auto& r : records) out.emplace_back(std::move(r));
  return out;
}

}  // namespace

std::vector<CurvatureRecord> compute_all(const UndirectedHypergraph& h) {
  return widen(undirected_records(h));
}

std::vector<CurvatureRecord> compute_all(const UndirectedHypergraph& h, const WeightOverlay& w) {
  return widen(weighted_records(h, w));
}

std::vector<CurvatureRecord> compute_all(const DirectedHypergraph& h) {
  return widen(directed_records(h));
}

std::vector<CurvatureRecord> compute_all(const DirectedHypergraph&, const WeightOverlay&) {
  throw Error("weighted curvature is defined for undirected hypergraphs only");
}

}  // namespace hyperforman
