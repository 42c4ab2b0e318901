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

#include "hyperforman/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "hyperforman/error.hpp"

namespace hyperforman {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_blank(line[i])) ++i;
    const std::size_t start = i;
    while (i < line.size() && !is_blank(line[i])) ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

// Calls fn(line_number, line) for every non-blank, non-comment line.
template <typename Fn>
void for_each_usable_line(std::string_view text, Fn&& fn) {
  std::size_t line_number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    ++line_number;
    pos = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto first = std::find_if_not(line.begin(), line.end(), is_blank);
    if (first == line.end() || *first == '#') continue;
    fn(line_number, line);
  }
}

void check_label(std::size_t line, std::string_view label) {
  if (label.find(',') != std::string_view::npos) {
    throw ParseError(line, "label '" + std::string(label) + "' contains ','");
  }
}

bool parse_positive(std::string_view token, double& out) {
  const char* first = token.data();
  const char* last = first + token.size();
  if (first != last && *first == '+') return false;
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last;
}

std::vector<Term> parse_side(std::size_t line, std::span<const std::string_view> tokens,
                             const char* side_name) {
  if (tokens.empty()) throw ParseError(line, std::string("empty ") + side_name + " side");
  std::vector<Term> terms;
  std::vector<std::string_view> slot;
  auto flush = [&] {
    if (slot.empty()) throw ParseError(line, std::string("empty species slot on ") + side_name + " side");
    Term term;
    if (slot.size() == 1) {
      term.species = std::string(slot[0]);
    } else if (slot.size() == 2) {
      double coefficient = 0.0;
      if (!parse_positive(slot[0], coefficient)) {
        throw ParseError(line, "non-numeric coefficient '" + std::string(slot[0]) + "'");
      }
      if (!(std::isfinite(coefficient) && coefficient > 0.0)) {
        throw ParseError(line, "coefficient '" + std::string(slot[0]) + "' is not positive");
      }
      term.coefficient = coefficient;
      term.species = std::string(slot[1]);
    } else {
      throw ParseError(line, "expected '[coefficient] species' but found " +
                                 std::to_string(slot.size()) + " tokens before '+'");
    }
    check_label(line, term.species);
    terms.push_back(std::move(term));
    slot.clear();
  };
  for (std::string_view token : tokens) {
    if (token == "+") {
      flush();
      continue;
    }
    if (token.find('+') != std::string_view::npos) {
      throw ParseError(line, "species token '" + std::string(token) + "' contains '+'");
    }
    slot.push_back(token);
  }
  flush();
  return terms;
}

std::vector<std::string> species_of(const std::vector<Term>& terms) {
  std::vector<std::string> out;
  out.reserve(terms.size());
  for (const auto& t : terms) out.push_back(t.species);
  return out;
}

std::size_t line_of_offset(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + offset, '\n'));
}

double read_weight(const json& node, const std::string& where) {
  const auto it = node.find("weight");
  if (it == node.end()) return 1.0;
  if (!it->is_number()) throw Error(where + ": weight must be a number");
  const double w = it->get<double>();
  if (!(std::isfinite(w) && w > 0.0)) throw Error(where + ": weight must be > 0");
  return w;
}

std::string joined(std::span<const std::uint32_t> ids, const VertexTable& vertices,
                   std::string_view separator) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += separator;
    out += vertices.label(VertexId{ids[i]});
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Parsers

UndirectedHypergraph parse_undirected(std::string_view text) {
  UndirectedHypergraph::Builder builder;
  std::vector<std::string> labels;
  for_each_usable_line(text, [&](std::size_t line, std::string_view content) {
    labels.clear();
    for (std::string_view token : split_tokens(content)) {
      check_label(line, token);
      labels.emplace_back(token);
    }
    builder.add_edge(labels);
  });
  if (builder.num_edges() == 0) throw ParseError(1, "input contains no hyperedges");
  return std::move(builder).build();
}

ReactionNetwork parse_reactions(std::string_view text) {
  DirectedHypergraph::Builder builder;
  ReactionNetwork network;
  for_each_usable_line(text, [&](std::size_t line, std::string_view content) {
    const auto tokens = split_tokens(content);
    std::size_t arrow_at = tokens.size();
    Arrow arrow = Arrow::forward;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      if (tokens[i] != "->" && tokens[i] != "<->") continue;
      if (arrow_at != tokens.size()) throw ParseError(line, "more than one arrow");
      arrow_at = i;
      arrow = tokens[i] == "->" ? Arrow::forward : Arrow::reversible;
    }
    if (arrow_at == tokens.size()) throw ParseError(line, "missing arrow ('->' or '<->')");

    const std::span<const std::string_view> all(tokens);
    ReactionLine reaction;
    reaction.line = line;
    reaction.raw = std::string(content);
    reaction.arrow = arrow;
    reaction.educts = parse_side(line, all.first(arrow_at), "educt");
    reaction.products = parse_side(line, all.subspan(arrow_at + 1), "product");

    const auto educts = species_of(reaction.educts);
    const auto products = species_of(reaction.products);
    const std::size_t index = network.reactions.size();
    builder.add_arc(educts, products);
    network.arc_origins.push_back({index, ArcDirection::forward});
    if (arrow == Arrow::reversible) {
      builder.add_arc(products, educts);
      network.arc_origins.push_back({index, ArcDirection::backward});
    }
    network.reactions.push_back(std::move(reaction));
  });
  if (network.reactions.empty()) throw ParseError(1, "input contains no reactions");
  network.graph = std::move(builder).build();
  return network;
}

WeightedHypergraph parse_weighted(std::string_view document) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    throw ParseError(line_of_offset(document, e.byte), e.what());
  }
  if (!doc.is_object()) throw Error("weighted document must be a JSON object");
  const auto vertices = doc.find("vertices");
  const auto hyperedges = doc.find("hyperedges");
  if (vertices == doc.end() || !vertices->is_array()) {
    throw Error("weighted document needs a \"vertices\" array");
  }
  if (hyperedges == doc.end() || !hyperedges->is_array()) {
    throw Error("weighted document needs a \"hyperedges\" array");
  }

  UndirectedHypergraph::Builder builder;
  WeightOverlay overlay;
  for (std::size_t i = 0; i < vertices->size(); ++i) {
    const auto& node = (*vertices)[i];
    const std::string where = "vertices[" + std::to_string(i) + "]";
    if (!node.is_object() || !node.contains("label") || !node["label"].is_string()) {
      throw Error(where + ": expected an object with a string \"label\"");
    }
    const auto label = node["label"].get<std::string>();
    if (label.empty()) throw Error(where + ": empty label");
    if (label.find(',') != std::string::npos) throw Error(where + ": label contains ','");
    const std::size_t before = overlay.vertex_weights.size();
    if (builder.add_vertex(label).value != before) {
      throw Error(where + ": duplicate vertex '" + label + "'");
    }
    overlay.vertex_weights.push_back(read_weight(node, where));
  }

  std::unordered_set<std::string> declared;
  for (const auto& node : *vertices) declared.insert(node["label"].get<std::string>());
  std::vector<std::string> members;
  for (std::size_t i = 0; i < hyperedges->size(); ++i) {
    const auto& node = (*hyperedges)[i];
    const std::string where = "hyperedges[" + std::to_string(i) + "]";
    if (!node.is_object() || !node.contains("members") || !node["members"].is_array()) {
      throw Error(where + ": expected an object with a \"members\" array");
    }
    members.clear();
    for (const auto& m : node["members"]) {
      if (!m.is_string()) throw Error(where + ": member labels must be strings");
      auto label = m.get<std::string>();
      if (!declared.contains(label)) {
        throw Error(where + ": member '" + label + "' is not a declared vertex");
      }
      members.push_back(std::move(label));
    }
    if (members.empty()) throw Error(where + ": hyperedge has no members");
    builder.add_edge(members);
    overlay.edge_weights.push_back(read_weight(node, where));
  }
  if (builder.num_edges() == 0) throw Error("weighted document contains no hyperedges");

  WeightedHypergraph out{std::move(builder).build(), std::move(overlay)};
  out.weights.validate(out.graph);
  return out;
}

// ---------------------------------------------------------------------------
// Writers

std::string format_number(double value) {
  char buffer[64];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  if (ec != std::errc{}) throw Error("cannot format number");
  return std::string(buffer, ptr);
}

std::string write_records(std::span<const CurvatureRecord> records, Format format,
                          RecordKind kind) {
  const bool directed = kind == RecordKind::directed;
  for (const auto& r : records) {
    if (std::holds_alternative<DirectedRecord>(r) != directed) {
      throw Error("mixed record kinds in one table");
    }
  }

  if (format == Format::json) {
    ordered_json rows = ordered_json::array();
    for (const auto& r : records) {
      ordered_json row;
      if (directed) {
        const auto& d = std::get<DirectedRecord>(r);
        row["edge_index"] = d.edge_index;
        row["tail_size"] = d.tail_size;
        row["head_size"] = d.head_size;
        row["sum_in_tail"] = d.sum_in_tail;
        row["sum_out_tail"] = d.sum_out_tail;
        row["sum_in_head"] = d.sum_in_head;
        row["sum_out_head"] = d.sum_out_head;
        for (Variant v : kDirectedVariants) row[std::string(to_string(v))] = d.get(v);
      } else {
        const auto& u = std::get<UndirectedRecord>(r);
        row["edge_index"] = u.edge_index;
        row["size"] = u.size;
        row["degree_sum"] = u.degree_sum;
        if (u.weighted) {
          row["F"] = *u.weighted;
        } else {
          row["F"] = u.forman;
        }
      }
      rows.push_back(std::move(row));
    }
    return rows.dump(2) + "\n";
  }

  std::string out(directed ? kDirectedCsvHeader : kUndirectedCsvHeader);
  out += '\n';
  for (const auto& r : records) {
    if (directed) {
      const auto& d = std::get<DirectedRecord>(r);
      out += std::to_string(d.edge_index) + ',' + std::to_string(d.tail_size) + ',' +
             std::to_string(d.head_size) + ',' + std::to_string(d.sum_in_tail) + ',' +
             std::to_string(d.sum_out_tail) + ',' + std::to_string(d.sum_in_head) + ',' +
             std::to_string(d.sum_out_head);
      for (Variant v : kDirectedVariants) out += ',' + std::to_string(d.get(v));
    } else {
      const auto& u = std::get<UndirectedRecord>(r);
      out += std::to_string(u.edge_index) + ',' + std::to_string(u.size) + ',' +
             std::to_string(u.degree_sum) + ',' +
             (u.weighted ? format_number(*u.weighted) : std::to_string(u.forman));
    }
    out += '\n';
  }
  return out;
}

std::string write_records(std::span<const CurvatureRecord> records, Format format) {
  const RecordKind kind = !records.empty() && std::holds_alternative<DirectedRecord>(records[0])
                              ? RecordKind::directed
                              : RecordKind::undirected;
  return write_records(records, format, kind);
}

std::string write_undirected(const UndirectedHypergraph& h) {
  std::string out;
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    out += joined(h.members(e), h.vertices(), " ");
    out += '\n';
  }
  return out;
}

std::string write_reactions(const DirectedHypergraph& h) {
  std::string out;
  for (std::size_t e = 0; e < h.num_arcs(); ++e) {
    out += joined(h.tail(e), h.vertices(), " + ");
    out += " -> ";
    out += joined(h.head(e), h.vertices(), " + ");
    out += '\n';
  }
  return out;
}

std::string write_weighted(const UndirectedHypergraph& h, const WeightOverlay& w) {
  w.validate(h);
  ordered_json doc;
  doc["vertices"] = ordered_json::array();
  for (std::uint32_t v = 0; v < h.num_vertices(); ++v) {
    doc["vertices"].push_back(
        {{"label", h.vertices().label(VertexId{v})}, {"weight", w.vertex_weight(VertexId{v})}});
  }
  doc["hyperedges"] = ordered_json::array();
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    ordered_json members = ordered_json::array();
    for (std::uint32_t v : h.members(e)) members.push_back(h.vertices().label(VertexId{v}));
    doc["hyperedges"].push_back({{"members", std::move(members)}, {"weight", w.edge_weight(e)}});
  }
  return doc.dump(2) + "\n";
}

}  // namespace hyperforman
