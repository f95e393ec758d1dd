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

#ifndef RSX_RS_HPP_
#define RSX_RS_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "rsx/halfgcd.hpp"
#include "rsx/transform.hpp"

namespace rsx {

/// (n = 2^m, k = n - 2^t) Reed-Solomon code configuration. The parity count
/// T = 2^t is a power of two and t <= m - 1 keeps the rate at or above 1/2.
struct CodeParams {
  unsigned m = 0;
  unsigned t = 0;

  CodeParams() = default;
  /// Throws std::invalid_argument unless 2 <= m <= 16 and 1 <= t <= m - 1.
  CodeParams(unsigned m_, unsigned t_);

  std::uint32_t n() const { return std::uint32_t(1) << m; }
  std::uint32_t T() const { return std::uint32_t(1) << t; }
  std::uint32_t k() const { return n() - T(); }
  std::uint32_t blocks() const { return n() >> t; }
};

/// An n-symbol block in systematic layout: block 0 (symbols [0, T)) holds the
/// parity, blocks 1 .. n/T - 1 hold the message verbatim (message symbol j at
/// position T + j). A valid codeword is exactly a word whose full n-point
/// inverse transform has its top T coefficients all zero.
struct Codeword {
  std::vector<FieldElem> symbols;
};

struct DecodeResult {
  Codeword corrected;
  std::vector<std::uint32_t> error_positions;                  // sorted
  std::vector<std::pair<std::uint32_t, FieldElem>> error_values;  // position -> value
};

/// Systematic encoding: parity = FFT(sum of per-block IFFTs of the message
/// blocks, at coset offsets w_{iT}), costing one T-point FFT and n/T - 1
/// T-point IFFTs. msg.size() must equal k.
Codeword encode(const BasisCtx& ctx, const CodeParams& params, std::span<const FieldElem> msg);

/// Syndrome polynomial: the blockwise sum of T-point monic-basis inverse
/// transforms, normalized so that it equals the top-T coefficient slice
/// (indices k .. n-1) of the full n-point inverse transform of recv. Zero
/// exactly when recv is a codeword. recv.size() must equal n.
PolyX syndrome(const BasisCtx& ctx, const CodeParams& params, std::span<const FieldElem> recv);

/// Positions i with lambda(w_i) = 0, found by evaluating lambda on each coset
/// V_t + w_{iT} with a T-point transform. Sorted ascending.
std::vector<std::uint32_t> find_roots(const BasisCtx& ctx, const CodeParams& params,
                                      const PolyX& lambda);

/// Error values q(w_i) / lambda'(w_i) at the given root positions, evaluating
/// q and the formal derivative of lambda only on the cosets that contain
/// roots. Returns nullopt if lambda'(w_i) vanishes at some root (a repeated
/// root; the pattern is beyond capacity).
std::optional<std::vector<std::pair<std::uint32_t, FieldElem>>> error_values(
    const BasisCtx& ctx, const CodeParams& params, const PolyX& q, const PolyX& lambda,
    std::span<const std::uint32_t> roots);

/// Four-step syndrome decoder: zero syndrome short-circuits; otherwise solve
/// the key equation, locate roots, compute values, apply the corrections and
/// verify the result is a codeword. Returns nullopt when more than T/2 errors
/// are detected (decoding failure). recv.size() must equal n.
std::optional<DecodeResult> decode(const BasisCtx& ctx, const CodeParams& params,
                                   std::span<const FieldElem> recv);

}  // namespace rsx

#endif  // RSX_RS_HPP_
