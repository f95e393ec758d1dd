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

#include "rsx/halfgcd.hpp"

#include <cassert>
#include <stdexcept>

namespace rsx {

namespace {

// deg with the zero polynomial collapsed to 0, the convention used by the
// matrix degree conditions.
[[maybe_unused]] std::size_t deg0(const PolyX& p) { return p.degree().value_or(0); }

// p * X_{2^e} when every index of p stays below 2^e (plain shift); otherwise
// a generic product.
PolyX shift_up(const BasisCtx& ctx, const PolyX& p, unsigned e) {
  if (p.is_zero()) return PolyX();
  const std::size_t cut = std::size_t(1) << e;
  if (*p.degree() < cut) {
    PolyX out;
    out.c.assign(cut + p.c.size(), 0);
    for (std::size_t i = 0; i < p.c.size(); ++i) out.c[cut + i] = p.c[i];
    out.trim();
    return out;
  }
  return mul(ctx, p, PolyX::unit(cut));
}

PolyX row_combine(const BasisCtx& ctx, const PolyX& m0, const PolyX& m1, const PolyX& x0,
                  const PolyX& x1) {
  return add(mul(ctx, m0, x0), mul(ctx, m1, x1));
}

PolyMat2 mat_mul(const BasisCtx& ctx, const PolyMat2& a, const PolyMat2& b) {
  return {row_combine(ctx, a.m00, a.m01, b.m00, b.m10),
          row_combine(ctx, a.m00, a.m01, b.m01, b.m11),
          row_combine(ctx, a.m10, a.m11, b.m00, b.m10),
          row_combine(ctx, a.m10, a.m11, b.m01, b.m11)};
}

}  // namespace

Split3 split3(const BasisCtx& ctx, const PolyX& a, unsigned g) {
  if (g < 2) throw std::invalid_argument("split3 requires g >= 2");
  if (!a.is_zero() && *a.degree() > (std::size_t(1) << g) - 1) {
    throw std::invalid_argument("split3: deg a exceeds 2^g - 1");
  }
  (void)ctx;
  const std::size_t quarter = std::size_t(1) << (g - 2);
  Split3 out;
  out.ll.c.assign(a.c.begin(), a.c.size() < quarter ? a.c.end() : a.c.begin() + quarter);
  if (a.c.size() > quarter) {
    const auto mid_end = a.c.size() < 2 * quarter ? a.c.end() : a.c.begin() + 2 * quarter;
    out.lh.c.assign(a.c.begin() + quarter, mid_end);
  }
  if (a.c.size() > 2 * quarter) out.h.c.assign(a.c.begin() + 2 * quarter, a.c.end());
  out.ll.trim();
  out.lh.trim();
  out.h.trim();
  return out;
}

HgcdResult hgcd(const BasisCtx& ctx, const PolyX& a0, const PolyX& b0, unsigned g) {
  PolyX a = a0, b = b0;
  a.trim();
  b.trim();
  const std::size_t half = g == 0 ? 0 : std::size_t(1) << (g - 1);

  // Crossover already reached: nothing to do.
  if (b.is_zero() || *b.degree() < half) {
    return {{std::move(a), std::move(b)}, PolyMat2::identity()};
  }
  if (g == 0) throw std::invalid_argument("hgcd: g = 0 admits only deg-0 inputs");

  const std::size_t da = a.degree().value_or(0);
  const std::size_t db = *b.degree();
  if (db > da || da < half || da > 2 * half - 1) {
    throw std::invalid_argument("hgcd: requires deg b <= deg a and 2^{g-1} <= deg a <= 2^g - 1");
  }

  if (g == 1) {
    // deg a = deg b = 1; a single division step finishes the crossover.
    auto [q, r] = divrem(ctx, a, b);
    return {{std::move(b), std::move(r)}, {PolyX(), PolyX::constant(1), PolyX::constant(1), std::move(q)}};
  }

  const std::size_t quarter = half >> 1;

  // First recursion on the high slices.
  PolyX a_low = low_slice(a, g - 1);
  PolyX b_low = low_slice(b, g - 1);
  HgcdResult hi = hgcd(ctx, shift_quotient(a, g - 1), shift_quotient(b, g - 1), g - 1);

  PolyX zm0 = add(shift_up(ctx, hi.z.z0, g - 1),
                  row_combine(ctx, hi.m.m00, hi.m.m01, a_low, b_low));
  PolyX zm1 = add(shift_up(ctx, hi.z.z1, g - 1),
                  row_combine(ctx, hi.m.m10, hi.m.m11, a_low, b_low));

  if (zm1.is_zero() || *zm1.degree() <= half - 1) {
    return {{std::move(zm0), std::move(zm1)}, std::move(hi.m)};
  }

  // One division step, then recurse on the quotient-by-s_{g-2} parts.
  auto [qm, rm] = divrem(ctx, zm0, zm1);
  assert(*zm1.degree() <= half + quarter - 1);

  PolyX z1_ll = low_slice(zm1, g - 2);
  PolyX rm_ll = low_slice(rm, g - 2);
  HgcdResult mid = hgcd(ctx, shift_quotient(zm1, g - 2), shift_quotient(rm, g - 2), g - 1);

  PolyVec2 z_out{add(shift_up(ctx, mid.z.z0, g - 2),
                     row_combine(ctx, mid.m.m00, mid.m.m01, z1_ll, rm_ll)),
                 add(shift_up(ctx, mid.z.z1, g - 2),
                     row_combine(ctx, mid.m.m10, mid.m.m11, z1_ll, rm_ll))};

  // M = M_mid * [[0, 1], [1, q]] * M_hi (characteristic 2: -q = q).
  PolyMat2 step{mid.m.m01, add(mid.m.m00, mul(ctx, mid.m.m01, qm)),
                mid.m.m11, add(mid.m.m10, mul(ctx, mid.m.m11, qm))};
  PolyMat2 m_out = mat_mul(ctx, step, hi.m);

  assert(z_out.z0.degree().value_or(0) >= half);
  assert(deg0(z_out.z1) <= half - 1);
  assert(deg0(m_out.m11) <= da - z_out.z0.degree().value_or(0));
  return {std::move(z_out), std::move(m_out)};
}

KeyEq solve_key_equation(const BasisCtx& ctx, const PolyX& s, unsigned t) {
  if (s.is_zero()) throw std::invalid_argument("solve_key_equation: zero syndrome");
  const std::size_t T = std::size_t(1) << t;
  if (t == 0 || T > ctx.n() / 2) {
    throw std::invalid_argument("solve_key_equation: requires 1 <= t <= m - 1");
  }
  const std::size_t ds = *s.degree();
  if (ds >= T) throw std::invalid_argument("solve_key_equation: deg s must be < 2^t");

  // A correctable pattern always produces deg s >= T/2 (otherwise the key
  // equation would force a zero numerator). Signal the beyond-capacity case
  // with a constant locator; the decoder turns that into a failure.
  if (ds < T / 2) return {PolyX::constant(1), PolyX()};

  auto [qt, rt] = divrem(ctx, PolyX::unit(T), s);
  if (rt.is_zero()) {
    // s divides s_t exactly; the identity-matrix extraction applies.
    return {std::move(qt), PolyX::constant(1)};
  }

  HgcdResult res = hgcd(ctx, s, rt, t);
  PolyX lambda = add(res.m.m10, mul(ctx, res.m.m11, qt));
  return {std::move(lambda), std::move(res.m.m11)};
}

}  // namespace rsx
