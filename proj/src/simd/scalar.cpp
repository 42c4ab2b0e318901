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

#include "hyperforman/simd/kernels.hpp"

#include <cstddef>

namespace hyperforman::simd {

namespace {

void segment_sum_i32(Offsets offsets, Indices indices,
                     std::span<const std::int32_t> values,
                     std::span<std::int64_t> out) {
  for (std::size_t r = 0; r + 1 < offsets.size(); ++r) {
    std::int64_t acc = 0;
    for (std::uint32_t k = offsets[r]; k < offsets[r + 1]; ++k) acc += values[indices[k]];
    out[r] = acc;
  }
}

void segment_sum_f64(Offsets offsets, Indices indices,
                     std::span<const double> values, std::span<double> out) {
  for (std::size_t r = 0; r + 1 < offsets.size(); ++r) {
    double acc = 0.0;
    for (std::uint32_t k = offsets[r]; k < offsets[r + 1]; ++k) acc += values[indices[k]];
    out[r] = acc;
  }
}

void segment_dot_f64(Offsets offsets, Indices indices, std::span<const double> a,
                     std::span<const double> b, std::span<double> out) {
  for (std::size_t r = 0; r + 1 < offsets.size(); ++r) {
    double acc = 0.0;
    for (std::uint32_t k = offsets[r]; k < offsets[r + 1]; ++k) {
      const std::uint32_t i = indices[k];
      acc += a[i] * b[i];
    }
    out[r] = acc;
  }
}

constexpr KernelTable kScalar{Isa::scalar, &segment_sum_i32, &segment_sum_f64,
                              &segment_dot_f64};

}  // namespace

const KernelTable& scalar_kernels() { return kScalar; }

}  // namespace hyperforman::simd
