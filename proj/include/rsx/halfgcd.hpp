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

#ifndef RSX_HALFGCD_HPP_
#define RSX_HALFGCD_HPP_

#include "rsx/basis.hpp"
#include "rsx/poly_ops.hpp"

namespace rsx {

/// Remainder pair at the half-degree crossover: deg z0 >= 2^{g-1} and
/// deg z1 <= 2^{g-1} - 1 on a valid half-GCD output.
struct PolyVec2 {
  PolyX z0, z1;
};

/// Cofactor matrix: Z = M * [a; b]. Row/column degree dominance holds on
/// valid output (deg m_{i0} <= deg m_{i1}, deg m_{0i} <= deg m_{1i}) along
/// with deg m11 <= deg a - deg z0.
struct PolyMat2 {
  PolyX m00, m01, m10, m11;

  static PolyMat2 identity() {
    return {PolyX::constant(1), PolyX(), PolyX(), PolyX::constant(1)};
  }
};

struct HgcdResult {
  PolyVec2 z;
  PolyMat2 m;
};

/// Coefficient slices of a at s_{g-2} and s_{g-1}:
/// a = ll + s_{g-2} * lh + s_{g-1} * h, with the slices covering index ranges
/// [0, 2^{g-2}), [2^{g-2}, 2^{g-1}) and [2^{g-1}, 2^g). Requires g >= 2 and
/// deg a <= 2^g - 1.
struct Split3 {
  PolyX ll, lh, h;
};
Split3 split3(const BasisCtx& ctx, const PolyX& a, unsigned g);

/// Divide-and-conquer extended Euclidean step. Requires deg b <= deg a and
/// 2^{g-1} <= deg a <= 2^g - 1 (a call with deg b < 2^{g-1} returns
/// Z = [a; b], M = identity immediately, before the precondition applies).
/// Output satisfies Z = M * [a; b] and the degree conditions documented on
/// PolyVec2 / PolyMat2. Throws std::invalid_argument on precondition
/// violations.
HgcdResult hgcd(const BasisCtx& ctx, const PolyX& a, const PolyX& b, unsigned g);

/// Error locator and error-value numerator for the syndrome key equation
/// z = lambda * s + q * s_t with deg z <= T/2 - 1, T = 2^t.
struct KeyEq {
  PolyX lambda, q;
};

/// Solves the key equation for a nonzero syndrome s of degree < T: divides
/// s_t (the unit polynomial X_T) by s, then runs hgcd on (s, remainder) and
/// assembles lambda = u1 - v1 * q_t, q = v1. A syndrome of degree < T/2
/// cannot come from a correctable error pattern; the constant locator
/// returned for it makes the decoder report failure. Requires s != 0 and
/// T <= 2^{m-1}.
KeyEq solve_key_equation(const BasisCtx& ctx, const PolyX& s, unsigned t);

}  // namespace rsx

#endif  // RSX_HALFGCD_HPP_
