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

#include "rsx/rs.hpp"

#include <algorithm>
#include <stdexcept>

namespace rsx {

CodeParams::CodeParams(unsigned m_, unsigned t_) : m(m_), t(t_) {
  if (m < kMinM || m > kMaxM) throw std::invalid_argument("CodeParams: m out of range");
  if (t < 1 || t > m - 1) throw std::invalid_argument("CodeParams: requires 1 <= t <= m - 1");
}

namespace {

void check_ctx(const BasisCtx& ctx, const CodeParams& params) {
  if (ctx.m() != params.m) throw std::invalid_argument("basis context does not match code params");
}

bool all_zero(std::span<const FieldElem> v) {
  return std::all_of(v.begin(), v.end(), [](FieldElem x) { return x == 0; });
}

}  // namespace

Codeword encode(const BasisCtx& ctx, const CodeParams& params, std::span<const FieldElem> msg) {
  check_ctx(ctx, params);
  if (msg.size() != params.k()) throw std::invalid_argument("encode: message must have k symbols");
  const std::uint32_t T = params.T();

  Codeword cw;
  cw.symbols.assign(params.n(), 0);
  std::copy(msg.begin(), msg.end(), cw.symbols.begin() + T);

  // Parity block: transform back the summed per-block inverse transforms of
  // the message blocks, each taken on its own coset V_t + w_{iT}.
  std::vector<FieldElem> acc(T, 0);
  std::vector<FieldElem> blk(T);
  for (std::uint32_t i = 1; i < params.blocks(); ++i) {
    std::copy_n(cw.symbols.begin() + std::size_t(i) * T, T, blk.begin());
    ifft_xbar_inplace(ctx, blk, params.t, omega(ctx, i * T));
    for (std::uint32_t j = 0; j < T; ++j) acc[j] ^= blk[j];
  }
  fft_xbar_inplace(ctx, acc, params.t, 0);
  std::copy(acc.begin(), acc.end(), cw.symbols.begin());
  return cw;
}

PolyX syndrome(const BasisCtx& ctx, const CodeParams& params, std::span<const FieldElem> recv) {
  check_ctx(ctx, params);
  if (recv.size() != params.n()) throw std::invalid_argument("syndrome: word must have n symbols");
  const std::uint32_t T = params.T();

  std::vector<FieldElem> acc(T, 0);
  std::vector<FieldElem> blk(T);
  for (std::uint32_t i = 0; i < params.blocks(); ++i) {
    std::copy_n(recv.begin() + std::size_t(i) * T, T, blk.begin());
    ifft_x_inplace(ctx, blk, params.t, omega(ctx, i * T));
    for (std::uint32_t j = 0; j < T; ++j) acc[j] ^= blk[j];
  }
  // The blockwise sum carries a constant factor p_k relative to the top-T
  // slice of the full inverse transform; divide it out so the key equation
  // and the error-value formula see the exact slice.
  const FieldElem pk_inv = ctx.pnorm_inv[params.k()];
  if (pk_inv != 1) {
    for (std::uint32_t j = 0; j < T; ++j) acc[j] = ctx.field.mul(acc[j], pk_inv);
  }
  PolyX s{std::move(acc)};
  s.trim();
  return s;
}

std::vector<std::uint32_t> find_roots(const BasisCtx& ctx, const CodeParams& params,
                                      const PolyX& lambda) {
  check_ctx(ctx, params);
  const std::uint32_t T = params.T();
  if (!lambda.is_zero() && *lambda.degree() >= T) {
    throw std::invalid_argument("find_roots: deg lambda must be below 2^t");
  }
  std::vector<std::uint32_t> roots;
  std::vector<FieldElem> vals(T);
  for (std::uint32_t i = 0; i < params.blocks(); ++i) {
    std::fill(vals.begin(), vals.end(), 0);
    std::copy(lambda.c.begin(), lambda.c.end(), vals.begin());
    fft_x_inplace(ctx, vals, params.t, omega(ctx, i * T));
    for (std::uint32_t j = 0; j < T; ++j) {
      if (vals[j] == 0) roots.push_back(i * T + j);
    }
  }
  return roots;
}

std::optional<std::vector<std::pair<std::uint32_t, FieldElem>>> error_values(
    const BasisCtx& ctx, const CodeParams& params, const PolyX& q, const PolyX& lambda,
    std::span<const std::uint32_t> roots) {
  check_ctx(ctx, params);
  const std::uint32_t T = params.T();
  const PolyX dlambda = formal_derivative(ctx, lambda);

  std::vector<std::pair<std::uint32_t, FieldElem>> out;
  out.reserve(roots.size());
  std::vector<FieldElem> qv(T), dv(T);
  std::size_t r = 0;
  while (r < roots.size()) {
    const std::uint32_t chunk = roots[r] / T;
    std::fill(qv.begin(), qv.end(), 0);
    std::fill(dv.begin(), dv.end(), 0);
    std::copy(q.c.begin(), q.c.end(), qv.begin());
    std::copy(dlambda.c.begin(), dlambda.c.end(), dv.begin());
    const FieldElem beta = omega(ctx, chunk * T);
    fft_x_inplace(ctx, qv, params.t, beta);
    fft_x_inplace(ctx, dv, params.t, beta);
    for (; r < roots.size() && roots[r] / T == chunk; ++r) {
      const std::uint32_t j = roots[r] % T;
      if (dv[j] == 0) return std::nullopt;  // repeated root: beyond capacity
      out.emplace_back(roots[r], ctx.field.div(qv[j], dv[j]));
    }
  }
  return out;
}

std::optional<DecodeResult> decode(const BasisCtx& ctx, const CodeParams& params,
                                   std::span<const FieldElem> recv) {
  check_ctx(ctx, params);
  if (recv.size() != params.n()) throw std::invalid_argument("decode: word must have n symbols");
  const std::uint32_t T = params.T();

  PolyX s = syndrome(ctx, params, recv);
  DecodeResult res;
  res.corrected.symbols.assign(recv.begin(), recv.end());
  if (s.is_zero()) return res;

  KeyEq key = solve_key_equation(ctx, s, params.t);
  const auto dl = key.lambda.degree();
  if (!dl || *dl == 0 || *dl > T / 2) return std::nullopt;

  std::vector<std::uint32_t> roots = find_roots(ctx, params, key.lambda);
  if (roots.size() < *dl) return std::nullopt;

  auto values = error_values(ctx, params, key.q, key.lambda, roots);
  if (!values) return std::nullopt;

  for (const auto& [pos, val] : *values) res.corrected.symbols[pos] ^= val;

  // A bounded-distance decode may run to completion on a word beyond
  // capacity; accept the output only if it really is a codeword.
  if (!syndrome(ctx, params, res.corrected.symbols).is_zero()) return std::nullopt;

  res.error_positions = std::move(roots);
  res.error_values = std::move(*values);
  return res;
}

}  // namespace rsx
