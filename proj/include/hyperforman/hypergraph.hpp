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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace hyperforman {

/// Dense vertex index. Ids are assigned 0..|V|-1 in order of first appearance.
struct VertexId {
  std::uint32_t value = 0;

  friend constexpr auto operator<=>(VertexId, VertexId) = default;
};

/// Bijection between vertex labels and dense ids.
class VertexTable {
 public:
  /// Returns the id of `label`, assigning the next free id on first sight.
  VertexId intern(std::string_view label);
  std::optional<VertexId> find(std::string_view label) const;
  const std::string& label(VertexId v) const;

  std::size_t size() const noexcept { return labels_.size(); }
  bool contains(VertexId v) const noexcept { return v.value < labels_.size(); }
  std::span<const std::string> labels() const noexcept { return labels_; }

 private:
  struct Hash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const noexcept {
      return std::hash<std::string_view>{}(s);
    }
  };

  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::uint32_t, Hash, std::equal_to<>> index_;
};

/// Compressed row storage: row r owns `items[offsets[r] .. offsets[r+1])`.
struct CsrIndex {
  std::vector<std::uint32_t> offsets{0};
  std::vector<std::uint32_t> items;

  std::size_t rows() const noexcept { return offsets.size() - 1; }
  std::span<const std::uint32_t> row(std::size_t r) const noexcept {
    return std::span<const std::uint32_t>(items).subspan(
        offsets[r], offsets[r + 1] - offsets[r]);
  }
  std::size_t row_size(std::size_t r) const noexcept {
    return offsets[r + 1] - offsets[r];
  }
};

/// H = (V, E) with E a multiset of vertex sets. Immutable once built; all
/// queries are const and safe to share across threads.
class UndirectedHypergraph {
 public:
  class Builder;

  std::size_t num_vertices() const noexcept { return vertices_.size(); }
  std::size_t num_edges() const noexcept { return edges_.rows(); }
  const VertexTable& vertices() const noexcept { return vertices_; }

  /// Member vertex ids of edge `e` (as raw id values).
  std::span<const std::uint32_t> members(std::size_t e) const;
  std::size_t edge_size(std::size_t e) const;

  /// Edge-multiset entries containing `v`, ascending.
  std::span<const std::uint32_t> incident_edges(VertexId v) const;

  /// Number of edge-multiset entries containing `v`. Throws on unknown ids.
  std::size_t degree(VertexId v) const;
  std::size_t degree(std::string_view label) const;

  /// Degree of every vertex, indexed by id.
  std::span<const std::int32_t> degrees() const noexcept { return degree_; }

  const CsrIndex& edge_index() const noexcept { return edges_; }
  const CsrIndex& incidence_index() const noexcept { return incidence_; }

 private:
  VertexTable vertices_;
  CsrIndex edges_;
  CsrIndex incidence_;
  std::vector<std::int32_t> degree_;
};

class UndirectedHypergraph::Builder {
 public:
  /// Declares a vertex without adding an edge (isolated vertices).
  VertexId add_vertex(std::string_view label);

  /// Appends one multiset entry. Duplicate labels collapse; an empty list
  /// raises InputError carrying the entry's position.
  std::size_t add_edge(std::span<const std::string> labels);
  std::size_t add_edge(std::span<const VertexId> members);

  std::size_t num_edges() const noexcept { return edges_.rows(); }

  UndirectedHypergraph build() &&;

 private:
  VertexTable vertices_;
  CsrIndex edges_;
  std::vector<std::uint8_t> seen_;
};

/// Tail/head pair of label lists, used by build_directed.
struct ArcSpec {
  std::vector<std::string> tail;
  std::vector<std::string> head;
};

/// H = (V, E) with E a multiset of hyperarcs (tail, head). Tail and head may
/// overlap; such a vertex counts once toward out() and once toward in().
class DirectedHypergraph {
 public:
  class Builder;

  std::size_t num_vertices() const noexcept { return vertices_.size(); }
  std::size_t num_arcs() const noexcept { return tails_.rows(); }
  const VertexTable& vertices() const noexcept { return vertices_; }

  std::span<const std::uint32_t> tail(std::size_t e) const;
  std::span<const std::uint32_t> head(std::size_t e) const;

  /// Arcs whose head contains `v`.
  std::span<const std::uint32_t> in_arcs(VertexId v) const;
  /// Arcs whose tail contains `v`.
  std::span<const std::uint32_t> out_arcs(VertexId v) const;

  std::size_t in_degree(VertexId v) const;
  std::size_t out_degree(VertexId v) const;
  std::size_t in_degree(std::string_view label) const;
  std::size_t out_degree(std::string_view label) const;

  std::span<const std::int32_t> in_degrees() const noexcept { return in_degree_; }
  std::span<const std::int32_t> out_degrees() const noexcept { return out_degree_; }

  const CsrIndex& tail_index() const noexcept { return tails_; }
  const CsrIndex& head_index() const noexcept { return heads_; }

 private:
  VertexTable vertices_;
  CsrIndex tails_;
  CsrIndex heads_;
  CsrIndex in_incidence_;
  CsrIndex out_incidence_;
  std::vector<std::int32_t> in_degree_;
  std::vector<std::int32_t> out_degree_;
};

class DirectedHypergraph::Builder {
 public:
  VertexId add_vertex(std::string_view label);

  /// Appends one hyperarc. Either side empty raises InputError.
  std::size_t add_arc(std::span<const std::string> tail,
                      std::span<const std::string> head);
  std::size_t add_arc(std::span<const VertexId> tail,
                      std::span<const VertexId> head);

  std::size_t num_arcs() const noexcept { return tails_.rows(); }

  DirectedHypergraph build() &&;

 private:
  VertexTable vertices_;
  CsrIndex tails_;
  CsrIndex heads_;
  std::vector<std::uint8_t> seen_;
};

UndirectedHypergraph build_undirected(
    std::span<const std::vector<std::string>> edge_lists);

DirectedHypergraph build_directed(std::span<const ArcSpec> arcs);

/// Optional positive weights for the weighted undirected curvature. An empty
/// vector means "all ones" for that side.
struct WeightOverlay {
  std::vector<double> vertex_weights;
  std::vector<double> edge_weights;

  double vertex_weight(VertexId v) const {
    return vertex_weights.empty() ? 1.0 : vertex_weights[v.value];
  }
  double edge_weight(std::size_t e) const {
    return edge_weights.empty() ? 1.0 : edge_weights[e];
  }

  /// Throws Error when sizes disagree with `h` or any weight is not a
  /// finite number > 0.
  void validate(const UndirectedHypergraph& h) const;
};

}  // namespace hyperforman
