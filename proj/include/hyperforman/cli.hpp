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
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyperforman/error.hpp"
#include "hyperforman/ingest.hpp"

namespace hyperforman::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitUsageError = 2;

enum class Subcommand { compute, stats, extremes, bounds, convert };
enum class Mode { undirected, directed, weighted };

class UsageError : public Error {
 public:
  using Error::Error;
};

struct RunConfig {
  Subcommand subcommand = Subcommand::compute;
  std::optional<std::string> input_path;  // standard input when absent
  Mode mode = Mode::undirected;
  std::optional<Format> format;           // csv unless given; stats is JSON only
  std::optional<double> bin_width;        // 10 undirected, 500 directed
  std::size_t top_k = 10;
  std::optional<std::string> variant;
  std::optional<std::string> weights_path;  // weighted document; implies weighted mode
  std::optional<std::string> output_path;

  /// Throws UsageError on inconsistent flags.
  void validate() const;
  double effective_bin_width() const;
};

/// Executes `config` on the already-loaded input text. Writes the result to
/// `out`, diagnostics to `err`, and returns the exit status.
int run(const RunConfig& config, std::string_view input, std::ostream& out, std::ostream& err);

/// Full command line: argument parsing, file input/output, then run().
/// `args` excludes the program name.
int main(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
         std::ostream& err);

}  // namespace hyperforman::cli
