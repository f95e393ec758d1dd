// Copyright 2026 The RSX Authors.
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

#ifndef RSX_TRANSFORM_HPP_
#define RSX_TRANSFORM_HPP_

#include <cstdint>
#include <span>

#include "rsx/basis.hpp"

namespace rsx {

/// 2^k evaluations of a polynomial on the coset V_k + beta; entry i is the
/// value at w_i + beta.
struct EvalVec {
  std::vector<FieldElem> values;
  unsigned k = 0;
  FieldElem beta = 0;
};

/// Per-thread tallies of the field operations and transform invocations, for
/// operation-count checks and benchmarks.
struct TransformCounters {
  std::uint64_t adds = 0;
  std::uint64_t muls = 0;
  std::uint64_t fft_calls = 0;
  std::uint64_t ifft_calls = 0;
};
TransformCounters& transform_counters();
void reset_transform_counters();

// In-place cores. data.size() must be exactly 1 << k; inputs shorter than a
// block are zero-padded by the caller, never resized here. Throws
// std::invalid_argument on k > m or a size mismatch.
//
// Iterative level-by-level butterflies over a working buffer; the levels run
// top-down (forward) or bottom-up (inverse) and outputs land in natural
// order. A butterfly whose twiddle is zero skips its multiply-accumulate.
void fft_xbar_inplace(const BasisCtx& ctx, std::span<FieldElem> data, unsigned k, FieldElem beta);
void ifft_xbar_inplace(const BasisCtx& ctx, std::span<FieldElem> data, unsigned k, FieldElem beta);

// Monic-basis variants: the same butterflies with coefficient i pre-scaled by
// p_i (forward) or post-scaled by 1/p_i (inverse).
void fft_x_inplace(const BasisCtx& ctx, std::span<FieldElem> data, unsigned k, FieldElem beta);
void ifft_x_inplace(const BasisCtx& ctx, std::span<FieldElem> data, unsigned k, FieldElem beta);

/// values[i] = sum_l d_l * Xbar_l(w_i + beta). d.c.size() must be 1 << k.
EvalVec fft_xbar(const BasisCtx& ctx, const PolyXbar& d, unsigned k, FieldElem beta);

/// Exact inverse of fft_xbar: ifft_xbar(fft_xbar(d)) == d.
PolyXbar ifft_xbar(const BasisCtx& ctx, const EvalVec& e, unsigned k, FieldElem beta);

/// values[i] = sum_l d_l * X_l(w_i + beta). d.c.size() must be 1 << k.
EvalVec fft_x(const BasisCtx& ctx, const PolyX& d, unsigned k, FieldElem beta);

/// Exact inverse of fft_x.
PolyX ifft_x(const BasisCtx& ctx, const EvalVec& e, unsigned k, FieldElem beta);

}  // namespace rsx

#endif  // RSX_TRANSFORM_HPP_
