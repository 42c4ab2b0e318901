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

#include "hyperforman/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hyperforman/curvature.hpp"
#include "hyperforman/stats.hpp"

namespace hyperforman::cli {

namespace {

using nlohmann::ordered_json;

bool is_directed(Mode m) { return m == Mode::directed; }

Mode effective_mode(const RunConfig& c) {
  return c.weights_path ? Mode::weighted : c.mode;
}

std::string_view mode_name(Mode m) {
  switch (m) {
    case Mode::undirected: return "undirected";
    case Mode::directed: return "directed";
    case Mode::weighted: return "weighted";
  }
  return "unknown";
}

Variant default_variant(Mode m) { return is_directed(m) ? Variant::F_through : Variant::F; }

Variant selected_variant(const RunConfig& c) {
  return c.variant ? parse_variant(*c.variant) : default_variant(effective_mode(c));
}

std::string bound_cell(double v) { return format_number(v); }

ordered_json bound_json(double v) {
  if (!std::isfinite(v)) return nullptr;
  if (v == std::floor(v) && std::abs(v) < 9.0e15) return static_cast<std::int64_t>(v);
  return v;
}

// --- subcommands -----------------------------------------------------------

struct Loaded {
  std::optional<UndirectedHypergraph> undirected;
  std::optional<WeightOverlay> weights;
  std::optional<ReactionNetwork> reactions;
  std::vector<CurvatureRecord> records;
};

Loaded load(const RunConfig& c, std::string_view input) {
  Loaded l;
  switch (effective_mode(c)) {
    case Mode::undirected:
      l.undirected = parse_undirected(input);
      if (c.subcommand != Subcommand::convert) l.records = compute_all(*l.undirected);
      break;
    case Mode::weighted: {
      auto parsed = parse_weighted(input);
      l.undirected = std::move(parsed.graph);
      l.weights = std::move(parsed.weights);
      if (c.subcommand != Subcommand::convert) l.records = compute_all(*l.undirected, *l.weights);
      break;
    }
    case Mode::directed:
      l.reactions = parse_reactions(input);
      if (c.subcommand != Subcommand::convert) l.records = compute_all(l.reactions->graph);
      break;
  }
  return l;
}

std::vector<double> values(const std::vector<CurvatureRecord>& records, Variant v) {
  std::vector<double> out;
  out.reserve(records.size());
  for (const auto& r : records) out.push_back(value_of(r, v));
  return out;
}

ordered_json undirected_stats(const RunConfig& c, const Loaded& l) {
  const auto& h = *l.undirected;
  std::vector<UndirectedRecord> typed;
  typed.reserve(l.records.size());
  for (const auto& r : l.records) typed.push_back(std::get<UndirectedRecord>(r));

  const auto hist = curvature_histogram(values(l.records, Variant::F), c.effective_bin_width());
  ordered_json j;
  j["mode"] = std::string(mode_name(effective_mode(c)));
  j["num_vertices"] = h.num_vertices();
  j["num_edges"] = h.num_edges();
  j["size_distribution"] = to_json(size_distribution(h));
  j["degree_distribution"] = to_json(degree_distribution(h, DegreeKind::undirected));
  j["curvature_histogram"] = to_json(hist);
  ordered_json summaries;
  for (BinQuantity q : {BinQuantity::normalized_size, BinQuantity::hyperedge_degree_median,
                        BinQuantity::hyperedge_degree_mean}) {
    const auto s = per_bin_summary(typed, h, hist, q);
    summaries[std::string(to_string(q))] = to_json(std::span<const BinSummary>(s));
  }
  j["bin_summaries"] = std::move(summaries);
  return j;
}

ordered_json directed_stats(const RunConfig& c, const Loaded& l) {
  const auto& h = l.reactions->graph;
  ordered_json j;
  j["mode"] = "directed";
  j["num_vertices"] = h.num_vertices();
  j["num_arcs"] = h.num_arcs();
  j["in_degree_distribution"] = to_json(degree_distribution(h, DegreeKind::in));
  j["out_degree_distribution"] = to_json(degree_distribution(h, DegreeKind::out));
  j["tail_head_frequencies"] = to_json(tail_head_frequencies(h));

  std::vector<std::int64_t> in_tail, out_tail, in_head, out_head;
  for (const auto& r : l.records) {
    const auto& d = std::get<DirectedRecord>(r);
    in_tail.push_back(d.sum_in_tail);
    out_tail.push_back(d.sum_out_tail);
    in_head.push_back(d.sum_in_head);
    out_head.push_back(d.sum_out_head);
  }
  ordered_json sums;
  sums["sum_in_tail"] = to_json(value_distribution(in_tail));
  sums["sum_out_tail"] = to_json(value_distribution(out_tail));
  sums["sum_in_head"] = to_json(value_distribution(in_head));
  sums["sum_out_head"] = to_json(value_distribution(out_head));
  j["degree_sum_distributions"] = std::move(sums);

  ordered_json histograms;
  for (Variant v : {Variant::F_in, Variant::F_out, Variant::F_loss_tail, Variant::F_loss_head,
                    Variant::F_through, Variant::F_loss}) {
    histograms[std::string(to_string(v))] =
        to_json(curvature_histogram(values(l.records, v), c.effective_bin_width()));
  }
  j["histograms"] = std::move(histograms);
  return j;
}

void write_extremes(const RunConfig& c, const ExtremesReport& report, std::ostream& out) {
  if (c.format.value_or(Format::csv) == Format::json) {
    out << to_json(report).dump(2) << '\n';
    return;
  }
  out << "side,rank,edge_index,value,description\n";
  auto rows = [&](std::string_view side, const std::vector<ExtremeEntry>& entries) {
    for (std::size_t i = 0; i < entries.size(); ++i) {
      out << side << ',' << i + 1 << ',' << edge_index(entries[i].record) << ','
          << format_number(entries[i].value) << ',' << entries[i].description << '\n';
    }
  };
  rows("min", report.most_negative);
  rows("max", report.most_positive);
}

void write_bounds(const RunConfig& c, const Loaded& l, std::ostream& out) {
  struct Row {
    std::size_t edge;
    Variant variant;
    double value;
    BoundPair multiset;
    BoundPair simple;
  };
  std::vector<Row> rows;
  if (l.reactions) {
    const auto& h = l.reactions->graph;
    std::vector<Variant> variants(kDirectedVariants.begin(), kDirectedVariants.end());
    if (c.variant) variants = {selected_variant(c)};
    for (const auto& r : l.records) {
      const auto& d = std::get<DirectedRecord>(r);
      for (Variant v : variants) {
        rows.push_back({d.edge_index, v, static_cast<double>(d.get(v)),
                        bounds_directed(d.tail_size, d.head_size, h.num_arcs(),
                                        h.num_vertices(), v, Regime::multiset),
                        bounds_directed(d.tail_size, d.head_size, h.num_arcs(),
                                        h.num_vertices(), v, Regime::simple)});
      }
    }
  } else {
    const auto& h = *l.undirected;
    for (const auto& r : l.records) {
      const auto& u = std::get<UndirectedRecord>(r);
      rows.push_back({u.edge_index, Variant::F, static_cast<double>(u.forman),
                      bounds_undirected(u.size, h.num_edges(), h.num_vertices(), Regime::multiset),
                      bounds_undirected(u.size, h.num_edges(), h.num_vertices(), Regime::simple)});
    }
  }

  if (c.format.value_or(Format::csv) == Format::json) {
    ordered_json j = ordered_json::array();
    for (const auto& r : rows) {
      j.push_back({{"edge_index", r.edge},
                   {"variant", std::string(to_string(r.variant))},
                   {"value", static_cast<std::int64_t>(r.value)},
                   {"multiset_lower", bound_json(r.multiset.lower)},
                   {"multiset_upper", bound_json(r.multiset.upper)},
                   {"simple_lower", bound_json(r.simple.lower)},
                   {"simple_upper", bound_json(r.simple.upper)}});
    }
    out << j.dump(2) << '\n';
    return;
  }
  out << "edge_index,variant,value,multiset_lower,multiset_upper,simple_lower,simple_upper\n";
  for (const auto& r : rows) {
    out << r.edge << ',' << to_string(r.variant) << ',' << format_number(r.value) << ','
        << bound_cell(r.multiset.lower) << ',' << bound_cell(r.multiset.upper) << ','
        << bound_cell(r.simple.lower) << ',' << bound_cell(r.simple.upper) << '\n';
  }
}

void execute(const RunConfig& c, std::string_view input, std::ostream& out) {
  const Loaded l = load(c, input);
  const Format format = c.format.value_or(Format::csv);
  switch (c.subcommand) {
    case Subcommand::compute:
      out << write_records(l.records, format,
                           l.reactions ? RecordKind::directed : RecordKind::undirected);
      return;
    case Subcommand::stats:
      out << (l.reactions ? directed_stats(c, l) : undirected_stats(c, l)).dump(2) << '\n';
      return;
    case Subcommand::extremes: {
      const Variant v = selected_variant(c);
      const auto report = l.reactions ? extremes(l.records, l.reactions->graph, v, c.top_k)
                                      : extremes(l.records, *l.undirected, v, c.top_k);
      write_extremes(c, report, out);
      return;
    }
    case Subcommand::bounds:
      write_bounds(c, l, out);
      return;
    case Subcommand::convert:
      if (l.reactions) {
        out << write_reactions(l.reactions->graph);
      } else if (l.weights) {
        out << write_weighted(*l.undirected, *l.weights);
      } else {
        out << write_undirected(*l.undirected);
      }
      return;
  }
}

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) return std::nullopt;
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

}  // namespace

// ---------------------------------------------------------------------------

void RunConfig::validate() const {
  if (bin_width && !(std::isfinite(*bin_width) && *bin_width > 0.0)) {
    throw UsageError("--bin-width must be a positive number");
  }
  if (top_k < 1) throw UsageError("--top must be at least 1");
  if (weights_path && mode == Mode::directed) {
    throw UsageError("--weights applies to undirected hypergraphs only");
  }
  if (weights_path && input_path) {
    throw UsageError("pass the weighted document either as input or via --weights, not both");
  }
  const Mode m = effective_mode(*this);
  if (variant) {
    Variant v{};
    try {
      v = parse_variant(*variant);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
    if (is_directed(m) == (v == Variant::F)) {
      throw UsageError("variant " + *variant + " does not apply in " +
                       std::string(mode_name(m)) + " mode");
    }
  }
  if (subcommand == Subcommand::stats && format == Format::csv) {
    throw UsageError("stats output is JSON only");
  }
  if (subcommand == Subcommand::bounds && m == Mode::weighted) {
    throw UsageError("bounds apply to unweighted curvature; use --mode undirected");
  }
}

double RunConfig::effective_bin_width() const {
  return bin_width.value_or(is_directed(effective_mode(*this)) ? 500.0 : 10.0);
}

int run(const RunConfig& config, std::string_view input, std::ostream& out, std::ostream& err) {
  try {
    config.validate();
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsageError;
  }
  try {
    std::ostringstream buffer;
    execute(config, input, buffer);
    out << buffer.str();
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
}

int main(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
         std::ostream& err) {
  CLI::App app{"Forman-Ricci curvature for graphs and hypergraphs"};
  app.require_subcommand(1);

  RunConfig config;
  std::string mode = "undirected";
  std::string format;
  std::string input;

  const std::vector<std::pair<Subcommand, std::pair<const char*, const char*>>> commands{
      {Subcommand::compute, {"compute", "Curvature of every (hyper)edge"}},
      {Subcommand::stats, {"stats", "Distributions, histograms and per-bin summaries (JSON)"}},
      {Subcommand::extremes, {"extremes", "Most negative and most positive (hyper)edges"}},
      {Subcommand::bounds, {"bounds", "Theoretical bounds next to each curvature value"}},
      {Subcommand::convert, {"convert", "Normalized re-serialization of the input"}},
  };
  for (const auto& [kind, names] : commands) {
    CLI::App* sub = app.add_subcommand(names.first, names.second);
    sub->callback([&config, kind = kind] { config.subcommand = kind; });
    sub->add_option("input", input, "Input file (standard input when omitted)");
    sub->add_option("--mode", mode, "Input kind")
        ->check(CLI::IsMember({"undirected", "directed", "weighted"}));
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--bin-width", config.bin_width, "Histogram bin width");
    sub->add_option("--top", config.top_k, "Number of extremes per side");
    sub->add_option("--variant", config.variant, "Curvature variant to report");
    sub->add_option("--weights", config.weights_path, "Weighted hypergraph document");
    sub->add_option("--output", config.output_path, "Write output here instead of stdout");
  }

  std::vector<std::string> argv_storage{"hyperforman"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsageError;
  }

  config.mode = mode == "directed" ? Mode::directed
                : mode == "weighted" ? Mode::weighted
                                     : Mode::undirected;
  if (!format.empty()) config.format = format == "json" ? Format::json : Format::csv;
  if (!input.empty()) config.input_path = input;

  try {
    config.validate();
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsageError;
  }
  std::string text;
  const auto source = config.weights_path ? config.weights_path : config.input_path;
  if (source) {
    auto content = read_file(*source);
    if (!content) {
      err << "error: cannot read '" << *source << "'\n";
      return kExitInputError;
    }
    text = std::move(*content);
  } else {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  }

  if (!config.output_path) return run(config, text, out, err);

  std::ostringstream result;
  const int status = run(config, text, result, err);
  if (status != kExitOk) return status;
  std::ofstream file(*config.output_path, std::ios::binary);
  if (!file) {
    err << "error: cannot write '" << *config.output_path << "'\n";
    return kExitInputError;
  }
  file << result.str();
  return file ? kExitOk : kExitInputError;
}

}  // namespace hyperforman::cli
