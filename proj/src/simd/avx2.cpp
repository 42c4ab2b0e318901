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

// Compiled with -mavx2 -mfma. Nothing in this file may run before
// dispatch.cpp has confirmed CPU support.

#include "hyperforman/simd/kernels.hpp"

#include <immintrin.h>

#include <cstddef>

namespace hyperforman::simd {

namespace {

// Lane i is active iff i < remaining. Masked loads never touch inactive
// lanes, so rows may end anywhere in the index buffer.
inline __m256i lane_mask_8x32(std::uint32_t remaining) {
  const __m256i lanes = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);
  const int n = remaining > 8 ? 8 : static_cast<int>(remaining);
  return _mm256_cmpgt_epi32(_mm256_set1_epi32(n), lanes);
}

inline __m128i lane_mask_4x32(std::uint32_t remaining) {
  const __m128i lanes = _mm_setr_epi32(0, 1, 2, 3);
  const int n = remaining > 4 ? 4 : static_cast<int>(remaining);
  return _mm_cmpgt_epi32(_mm_set1_epi32(n), lanes);
}

inline std::int64_t hsum_epi64(__m256i v) {
  const __m128i s = _mm_add_epi64(_mm256_castsi256_si128(v), _mm256_extracti128_si256(v, 1));
  return _mm_cvtsi128_si64(s) + _mm_extract_epi64(s, 1);
}

inline double hsum_pd(__m256d v) {
  const __m128d s = _mm_add_pd(_mm256_castpd256_pd128(v), _mm256_extractf128_pd(v, 1));
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

void segment_sum_i32(Offsets offsets, Indices indices,
                     std::span<const std::int32_t> values,
                     std::span<std::int64_t> out) {
  const auto* idx = reinterpret_cast<const int*>(indices.data());
  const int* base = values.data();
  for (std::size_t r = 0; r + 1 < offsets.size(); ++r) {
    __m256i acc = _mm256_setzero_si256();
    for (std::uint32_t k = offsets[r]; k < offsets[r + 1]; k += 8) {
      const __m256i mask = lane_mask_8x32(offsets[r + 1] - k);
      const __m256i vi = _mm256_maskload_epi32(idx + k, mask);
      const __m256i g =
          _mm256_mask_i32gather_epi32(_mm256_setzero_si256(), base, vi, mask, 4);
      acc = _mm256_add_epi64(acc, _mm256_cvtepi32_epi64(_mm256_castsi256_si128(g)));
      acc = _mm256_add_epi64(acc, _mm256_cvtepi32_epi64(_mm256_extracti128_si256(g, 1)));
    }
    out[r] = hsum_epi64(acc);
  }
}

void segment_sum_f64(Offsets offsets, Indices indices,
                     std::span<const double> values, std::span<double> out) {
  const auto* idx = reinterpret_cast<const int*>(indices.data());
  const double* base = values.data();
  for (std::size_t r = 0; r + 1 < offsets.size(); ++r) {
    __m256d acc = _mm256_setzero_pd();
    for (std::uint32_t k = offsets[r]; k < offsets[r + 1]; k += 4) {
      const __m128i mask = lane_mask_4x32(offsets[r + 1] - k);
      const __m128i vi = _mm_maskload_epi32(idx + k, mask);
      const __m256d wide_mask = _mm256_castsi256_pd(_mm256_cvtepi32_epi64(mask));
      acc = _mm256_add_pd(
          acc, _mm256_mask_i32gather_pd(_mm256_setzero_pd(), base, vi, wide_mask, 8));
    }
    out[r] = hsum_pd(acc);
  }
}

void segment_dot_f64(Offsets offsets, Indices indices, std::span<const double> a,
                     std::span<const double> b, std::span<double> out) {
  const auto* idx = reinterpret_cast<const int*>(indices.data());
  for (std::size_t r = 0; r + 1 < offsets.size(); ++r) {
    __m256d acc = _mm256_setzero_pd();
    for (std::uint32_t k = offsets[r]; k < offsets[r + 1]; k += 4) {
      const __m128i mask = lane_mask_4x32(offsets[r + 1] - k);
      const __m128i vi = _mm_maskload_epi32(idx + k, mask);
      const __m256d wide_mask = _mm256_castsi256_pd(_mm256_cvtepi32_epi64(mask));
      const __m256d ga = _mm256_mask_i32gather_pd(_mm256_setzero_pd(), a.data(), vi, wide_mask, 8);
      const __m256d gb = _mm256_mask_i32gather_pd(_mm256_setzero_pd(), b.data(), vi, wide_mask, 8);
      acc = _mm256_fmadd_pd(ga, gb, acc);
    }
    out[r] = hsum_pd(acc);
  }
}

constexpr KernelTable kAvx2{Isa::avx2, &segment_sum_i32, &segment_sum_f64,
                            &segment_dot_f64};

}  // namespace

const KernelTable* avx2_kernels() { return &kAvx2; }

}  // namespace hyperforman::simd
