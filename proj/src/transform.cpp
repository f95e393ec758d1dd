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

#include "rsx/transform.hpp"

#include <stdexcept>

namespace rsx {

TransformCounters& transform_counters() {
  thread_local TransformCounters counters;
  return counters;
}

void reset_transform_counters() { transform_counters() = TransformCounters{}; }

namespace {

void check_args(const BasisCtx& ctx, std::span<FieldElem> data, unsigned k) {
  if (k > ctx.m()) throw std::invalid_argument("transform size 2^k exceeds the field: k > m");
  if (data.size() != std::size_t(1) << k) {
    throw std::invalid_argument("transform buffer must have exactly 2^k entries");
  }
}

}  // namespace

void fft_xbar_inplace(const BasisCtx& ctx, std::span<FieldElem> data, unsigned k, FieldElem beta) {
  check_args(ctx, data, k);
  const FieldCtx& f = ctx.field;
  const std::uint32_t bidx = ctx.index_of[beta];
  std::uint64_t adds = 0, muls = 0;
  for (unsigned j = k; j-- > 0;) {
    const auto& w = ctx.twiddle[j];
    const std::size_t half = std::size_t(1) << j;
    for (std::size_t off = 0; off < data.size(); off += 2 * half) {
      const FieldElem tw = w[bidx ^ static_cast<std::uint32_t>(off)];
      if (tw == 0) {
        for (std::size_t i = off; i < off + half; ++i) data[i + half] ^= data[i];
        adds += half;
      } else {
        for (std::size_t i = off; i < off + half; ++i) {
          data[i] ^= f.mul(tw, data[i + half]);
          data[i + half] ^= data[i];
        }
        adds += 2 * half;
        muls += half;
      }
    }
  }
  auto& tc = transform_counters();
  tc.adds += adds;
  tc.muls += muls;
  tc.fft_calls += 1;
}

void ifft_xbar_inplace(const BasisCtx& ctx, std::span<FieldElem> data, unsigned k, FieldElem beta) {
  check_args(ctx, data, k);
  const FieldCtx& f = ctx.field;
  const std::uint32_t bidx = ctx.index_of[beta];
  std::uint64_t adds = 0, muls = 0;
  for (unsigned j = 0; j < k; ++j) {
    const auto& w = ctx.twiddle[j];
    const std::size_t half = std::size_t(1) << j;
    for (std::size_t off = 0; off < data.size(); off += 2 * half) {
      const FieldElem tw = w[bidx ^ static_cast<std::uint32_t>(off)];
      if (tw == 0) {
        for (std::size_t i = off; i < off + half; ++i) data[i + half] ^= data[i];
        adds += half;
      } else {
        for (std::size_t i = off; i < off + half; ++i) {
          data[i + half] ^= data[i];
          data[i] ^= f.mul(tw, data[i + half]);
        }
        adds += 2 * half;
        muls += half;
      }
    }
  }
  auto& tc = transform_counters();
  tc.adds += adds;
  tc.muls += muls;
  tc.ifft_calls += 1;
}

void fft_x_inplace(const BasisCtx& ctx, std::span<FieldElem> data, unsigned k, FieldElem beta) {
  check_args(ctx, data, k);
  const FieldCtx& f = ctx.field;
  std::uint64_t muls = 0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    if (data[i]) {
      data[i] = f.mul(data[i], ctx.pnorm[i]);
      ++muls;
    }
  }
  transform_counters().muls += muls;
  fft_xbar_inplace(ctx, data, k, beta);
}

void ifft_x_inplace(const BasisCtx& ctx, std::span<FieldElem> data, unsigned k, FieldElem beta) {
  ifft_xbar_inplace(ctx, data, k, beta);
  const FieldCtx& f = ctx.field;
  std::uint64_t muls = 0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    if (data[i]) {
      data[i] = f.mul(data[i], ctx.pnorm_inv[i]);
      ++muls;
    }
  }
  transform_counters().muls += muls;
}

EvalVec fft_xbar(const BasisCtx& ctx, const PolyXbar& d, unsigned k, FieldElem beta) {
  EvalVec out{d.c, k, beta};
  fft_xbar_inplace(ctx, out.values, k, beta);
  return out;
}

PolyXbar ifft_xbar(const BasisCtx& ctx, const EvalVec& e, unsigned k, FieldElem beta) {
  PolyXbar out{e.values};
  ifft_xbar_inplace(ctx, out.c, k, beta);
  return out;
}

EvalVec fft_x(const BasisCtx& ctx, const PolyX& d, unsigned k, FieldElem beta) {
  EvalVec out{d.c, k, beta};
  fft_x_inplace(ctx, out.values, k, beta);
  return out;
}

PolyX ifft_x(const BasisCtx& ctx, const EvalVec& e, unsigned k, FieldElem beta) {
  PolyX out{e.values};
  ifft_x_inplace(ctx, out.c, k, beta);
  return out;
}

}  // namespace rsx
