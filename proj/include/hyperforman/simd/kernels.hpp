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

// Segmented gather-reduce kernels over CSR rows. Every curvature in the
// library reduces to "for each row, sum a per-vertex quantity over the row's
// members", so these three loops carry the whole batch workload.
//
// The scalar table is the reference. Vector tables must agree with it exactly
// on integer kernels and to rounding on floating-point kernels.

#include <cstdint>
#include <span>
#include <string_view>

namespace hyperforman::simd {

enum class Isa { scalar, avx2 };

std::string_view to_string(Isa isa);

using Offsets = std::span<const std::uint32_t>;
using Indices = std::span<const std::uint32_t>;

struct KernelTable {
  Isa isa;

  // out[r] = sum of values[indices[k]] over k in [offsets[r], offsets[r+1]).
  void (*segment_sum_i32)(Offsets offsets, Indices indices,
                          std::span<const std::int32_t> values,
                          std::span<std::int64_t> out);

  void (*segment_sum_f64)(Offsets offsets, Indices indices,
                          std::span<const double> values,
                          std::span<double> out);

  // out[r] = sum of a[i] * b[i] for i = indices[k] over row r.
  void (*segment_dot_f64)(Offsets offsets, Indices indices,
                          std::span<const double> a, std::span<const double> b,
                          std::span<double> out);
};

const KernelTable& scalar_kernels();

/// Null when the build lacks AVX2 support.
const KernelTable* avx2_kernels();

/// True when `isa` was compiled in and the running CPU can execute it.
bool available(Isa isa);

/// Throws hyperforman::Error when `isa` is unavailable.
const KernelTable& kernels(Isa isa);

/// Best available table. The HYPERFORMAN_ISA environment variable
/// ("scalar" or "avx2") overrides the choice; resolved once per process.
const KernelTable& active_kernels();

}  // namespace hyperforman::simd
