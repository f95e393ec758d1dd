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

#ifndef RSX_POLY_OPS_HPP_
#define RSX_POLY_OPS_HPP_

#include "rsx/basis.hpp"
#include "rsx/transform.hpp"

namespace rsx {

/// Quotient of dividing by s_i(x): coefficient l of the result is coefficient
/// l + 2^i of the input. Exact, because X_{l + 2^i} = s_i(x) * X_l(x) for
/// l < 2^i.
PolyX shift_quotient(const PolyX& a, unsigned i);

/// Low slice: coefficients below index 2^i, so that
/// a == low_slice(a, i) + s_i * shift_quotient(a, i).
PolyX low_slice(const PolyX& a, unsigned i);

/// Exact product. Evaluate-multiply-interpolate through the monic-basis
/// transforms at the smallest 2^k > deg a + deg b; small products take a
/// schoolbook route and single-term multipliers with disjoint index bits
/// reduce to a coefficient shift. Result is trimmed.
/// Throws std::domain_error when deg a + deg b >= 2^m.
PolyX mul(const BasisCtx& ctx, const PolyX& a, const PolyX& b);

/// Formal derivative via the halving recursion
/// D' = [D_low]' + s'_{k-1} * D_high + s_{k-1} * [D_high]',
/// where s'_{k-1} is the stored constant derivative.
PolyX formal_derivative(const BasisCtx& ctx, const PolyX& d);

/// Newton iteration for the auxiliary polynomial L of the fast division:
/// given B with deg B = 2^j - 1 and nonzero leading coefficient, returns L of
/// the same degree with L * s_1 * B = s_{j+1} + H and deg H <= 2^j.
/// Each doubling step is completed with quotient shifts and one constant
/// scale; no polynomial multiplications beyond the stated ones.
/// Throws std::invalid_argument if deg B is not of the form 2^j - 1, and
/// std::domain_error if the iteration would exceed the field (j > m - 1).
PolyX newton_lambda(const BasisCtx& ctx, const PolyX& B);

struct DivRem {
  PolyX q, r;
};

/// Division with remainder: a = q * b + r with r = 0 or deg r < deg b.
/// deg a > deg b runs the Newton-based fast path (dividends with
/// deg a >= 2^{m-1} first peel leading terms classically until the fast path
/// fits in the field); deg a <= deg b falls back to at most one leading-term
/// cancellation. Throws std::domain_error on b = 0.
DivRem divrem(const BasisCtx& ctx, const PolyX& a, const PolyX& b);

}  // namespace rsx

#endif  // RSX_POLY_OPS_HPP_
