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

#include <cstdlib>
#include <string>

#include "hyperforman/error.hpp"
#include "hyperforman/simd/kernels.hpp"

namespace hyperforman::simd {

#ifndef HYPERFORMAN_HAVE_AVX2
const KernelTable* avx2_kernels() { return nullptr; }
#endif

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
  }
  return "unknown";
}

bool available(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(HYPERFORMAN_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
  }
  return false;
}

const KernelTable& kernels(Isa isa) {
  if (!available(isa)) {
    throw Error("kernel set '" + std::string(to_string(isa)) + "' is not available on this machine");
  }
  return isa == Isa::avx2 ? *avx2_kernels() : scalar_kernels();
}

namespace {

const KernelTable& resolve() {
  if (const char* forced = std::getenv("HYPERFORMAN_ISA")) {
    const std::string_view name(forced);
    if (name == "scalar") return scalar_kernels();
    if (name == "avx2" && available(Isa::avx2)) return *avx2_kernels();
  }
  if (available(Isa::avx2)) return *avx2_kernels();
  return scalar_kernels();
}

}  // namespace

const KernelTable& active_kernels() {
  static const KernelTable& table = resolve();
  return table;
}

}  // namespace hyperforman::simd
