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

#include "hyperforman/hypergraph.hpp"

#include <cmath>
#include <limits>

#include "hyperforman/error.hpp"

namespace hyperforman {

namespace {

constexpr std::size_t kMaxRows = std::numeric_limits<std::int32_t>::max();

// Row-wise transpose of `rows` over `num_columns` columns. Rows are visited in
// ascending order, so each transposed row comes out sorted.
CsrIndex transpose(const CsrIndex& rows, std::size_t num_columns) {
  CsrIndex out;
  out.offsets.assign(num_columns + 1, 0);
  for (std::uint32_t c : rows.items) ++out.offsets[c + 1];
  for (std::size_t c = 0; c < num_columns; ++c) out.offsets[c + 1] += out.offsets[c];
  out.items.resize(rows.items.size());
  std::vector<std::uint32_t> cursor(out.offsets.begin(), out.offsets.end() - 1);
  for (std::size_t r = 0; r < rows.rows(); ++r) {
    for (std::uint32_t c : rows.row(r)) out.items[cursor[c]++] = static_cast<std::uint32_t>(r);
  }
  return out;
}

std::vector<std::int32_t> row_lengths(const CsrIndex& index) {
  std::vector<std::int32_t> out(index.rows());
  for (std::size_t r = 0; r < index.rows(); ++r) {
    out[r] = static_cast<std::int32_t>(index.row_size(r));
  }
  return out;
}

// Appends the distinct ids of `ids` (first-appearance order) as a new row.
void append_distinct(CsrIndex& index, std::span<const VertexId> ids,
                     std::vector<std::uint8_t>& seen) {
  const std::size_t start = index.items.size();
  for (VertexId v : ids) {
    if (seen.size() <= v.value) seen.resize(v.value + 1, 0);
    if (seen[v.value]) continue;
    seen[v.value] = 1;
    index.items.push_back(v.value);
  }
  for (std::size_t i = start; i < index.items.size(); ++i) seen[index.items[i]] = 0;
  if (index.items.size() > std::numeric_limits<std::uint32_t>::max()) {
    throw Error("incidence count exceeds 32-bit index range");
  }
  index.offsets.push_back(static_cast<std::uint32_t>(index.items.size()));
}

std::vector<VertexId> intern_all(VertexTable& table, std::span<const std::string> labels) {
  std::vector<VertexId> ids;
  ids.reserve(labels.size());
  for (const auto& label : labels) ids.push_back(table.intern(label));
  return ids;
}

void check_known(const VertexTable& table, std::span<const VertexId> ids,
                 std::size_t position) {
  for (VertexId v : ids) {
    if (!table.contains(v)) {
      throw InputError(position, "vertex id " + std::to_string(v.value) + " was never declared");
    }
  }
}

VertexId require(const VertexTable& table, std::string_view label) {
  auto id = table.find(label);
  if (!id) throw Error("unknown vertex '" + std::string(label) + "'");
  return *id;
}

void require(const VertexTable& table, VertexId v) {
  if (!table.contains(v)) throw Error("unknown vertex id " + std::to_string(v.value));
}

void require_edge(std::size_t e, std::size_t count) {
  if (e >= count) {
    throw Error("edge index " + std::to_string(e) + " out of range (" +
                std::to_string(count) + " edges)");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// VertexTable

VertexId VertexTable::intern(std::string_view label) {
  if (auto it = index_.find(label); it != index_.end()) return VertexId{it->second};
  if (labels_.size() >= kMaxRows) {
    throw Error("too many vertices");
  }
  const auto id = static_cast<std::uint32_t>(labels_.size());
  labels_.emplace_back(label);
  index_.emplace(labels_.back(), id);
  return VertexId{id};
}

std::optional<VertexId> VertexTable::find(std::string_view label) const {
  if (auto it = index_.find(label); it != index_.end()) return VertexId{it->second};
  return std::nullopt;
}

const std::string& VertexTable::label(VertexId v) const {
  require(*this, v);
  return labels_[v.value];
}

// ---------------------------------------------------------------------------
// UndirectedHypergraph

std::span<const std::uint32_t> UndirectedHypergraph::members(std::size_t e) const {
  require_edge(e, num_edges());
  return edges_.row(e);
}

std::size_t UndirectedHypergraph::edge_size(std::size_t e) const {
  require_edge(e, num_edges());
  return edges_.row_size(e);
}

std::span<const std::uint32_t> UndirectedHypergraph::incident_edges(VertexId v) const {
  require(vertices_, v);
  return incidence_.row(v.value);
}

std::size_t UndirectedHypergraph::degree(VertexId v) const {
  require(vertices_, v);
  return static_cast<std::size_t>(degree_[v.value]);
}

std::size_t UndirectedHypergraph::degree(std::string_view label) const {
  return degree(require(vertices_, label));
}

VertexId UndirectedHypergraph::Builder::add_vertex(std::string_view label) {
  return vertices_.intern(label);
}

std::size_t UndirectedHypergraph::Builder::add_edge(std::span<const std::string> labels) {
  if (labels.empty()) throw InputError(edges_.rows(), "hyperedge has no members");
  const auto ids = intern_all(vertices_, labels);
  return add_edge(ids);
}

std::size_t UndirectedHypergraph::Builder::add_edge(std::span<const VertexId> members) {
  const std::size_t position = edges_.rows();
  if (members.empty()) throw InputError(position, "hyperedge has no members");
  if (position >= kMaxRows) throw InputError(position, "too many hyperedges");
  check_known(vertices_, members, position);
  append_distinct(edges_, members, seen_);
  return position;
}

UndirectedHypergraph UndirectedHypergraph::Builder::build() && {
  UndirectedHypergraph h;
  h.incidence_ = transpose(edges_, vertices_.size());
  h.degree_ = row_lengths(h.incidence_);
  h.vertices_ = std::move(vertices_);
  h.edges_ = std::move(edges_);
  return h;
}

UndirectedHypergraph build_undirected(std::span<const std::vector<std::string>> edge_lists) {
  UndirectedHypergraph::Builder builder;
  for (const auto& list : edge_lists) builder.add_edge(list);
  return std::move(builder).build();
}

// ---------------------------------------------------------------------------
// DirectedHypergraph

std::span<const std::uint32_t> DirectedHypergraph::tail(std::size_t e) const {
  require_edge(e, num_arcs());
  return tails_.row(e);
}

std::span<const std::uint32_t> DirectedHypergraph::head(std::size_t e) const {
  require_edge(e, num_arcs());
  return heads_.row(e);
}

std::span<const std::uint32_t> DirectedHypergraph::in_arcs(VertexId v) const {
  require(vertices_, v);
  return in_incidence_.row(v.value);
}

std::span<const std::uint32_t> DirectedHypergraph::out_arcs(VertexId v) const {
  require(vertices_, v);
  return out_incidence_.row(v.value);
}

std::size_t DirectedHypergraph::in_degree(VertexId v) const {
  require(vertices_, v);
  return static_cast<std::size_t>(in_degree_[v.value]);
}

std::size_t DirectedHypergraph::out_degree(VertexId v) const {
  require(vertices_, v);
  return static_cast<std::size_t>(out_degree_[v.value]);
}

std::size_t DirectedHypergraph::in_degree(std::string_view label) const {
  return in_degree(require(vertices_, label));
}

std::size_t DirectedHypergraph::out_degree(std::string_view label) const {
  return out_degree(require(vertices_, label));
}

VertexId DirectedHypergraph::Builder::add_vertex(std::string_view label) {
  return vertices_.intern(label);
}

std::size_t DirectedHypergraph::Builder::add_arc(std::span<const std::string> tail,
                                                 std::span<const std::string> head) {
  const std::size_t position = tails_.rows();
  if (tail.empty()) throw InputError(position, "hyperarc has an empty tail");
  if (head.empty()) throw InputError(position, "hyperarc has an empty head");
  const auto tail_ids = intern_all(vertices_, tail);
  const auto head_ids = intern_all(vertices_, head);
  return add_arc(tail_ids, head_ids);
}

std::size_t DirectedHypergraph::Builder::add_arc(std::span<const VertexId> tail,
                                                 std::span<const VertexId> head) {
  const std::size_t position = tails_.rows();
  if (tail.empty()) throw InputError(position, "hyperarc has an empty tail");
  if (head.empty()) throw InputError(position, "hyperarc has an empty head");
  if (position >= kMaxRows) throw InputError(position, "too many hyperarcs");
  check_known(vertices_, tail, position);
  check_known(vertices_, head, position);
  append_distinct(tails_, tail, seen_);
  append_distinct(heads_, head, seen_);
  return position;
}

DirectedHypergraph DirectedHypergraph::Builder::build() && {
  DirectedHypergraph h;
  h.out_incidence_ = transpose(tails_, vertices_.size());
  h.in_incidence_ = transpose(heads_, vertices_.size());
  h.out_degree_ = row_lengths(h.out_incidence_);
  h.in_degree_ = row_lengths(h.in_incidence_);
  h.vertices_ = std::move(vertices_);
  h.tails_ = std::move(tails_);
  h.heads_ = std::move(heads_);
  return h;
}

DirectedHypergraph build_directed(std::span<const ArcSpec> arcs) {
  DirectedHypergraph::Builder builder;
  for (const auto& arc : arcs) builder.add_arc(arc.tail, arc.head);
  return std::move(builder).build();
}

// ---------------------------------------------------------------------------
// WeightOverlay

void WeightOverlay::validate(const UndirectedHypergraph& h) const {
  if (!vertex_weights.empty() && vertex_weights.size() != h.num_vertices()) {
    throw Error("vertex weight count " + std::to_string(vertex_weights.size()) +
                " does not match " + std::to_string(h.num_vertices()) + " vertices");
  }
  if (!edge_weights.empty() && edge_weights.size() != h.num_edges()) {
    throw Error("edge weight count " + std::to_string(edge_weights.size()) +
                " does not match " + std::to_string(h.num_edges()) + " hyperedges");
  }
  for (std::size_t v = 0; v < vertex_weights.size(); ++v) {
    if (!(std::isfinite(vertex_weights[v]) && vertex_weights[v] > 0.0)) {
      throw Error("vertex '" + h.vertices().labels()[v] + "' has non-positive weight");
    }
  }
  for (std::size_t e = 0; e < edge_weights.size(); ++e) {
    if (!(std::isfinite(edge_weights[e]) && edge_weights[e] > 0.0)) {
      throw Error("hyperedge " + std::to_string(e) + " has non-positive weight");
    }
  }
}

}  // namespace hyperforman
