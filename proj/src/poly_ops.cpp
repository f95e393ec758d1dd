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

#include "rsx/poly_ops.hpp"

#include <bit>
#include <cassert>
#include <stdexcept>

namespace rsx {

namespace {

constexpr std::size_t kSchoolbookMaxDegree = 8;  // products below this skip the FFT

// ceil(lg(d + 1)) for d >= 1: the smallest k with d <= 2^k - 1.
unsigned ceil_lg1(std::size_t d) { return std::bit_width(d); }

// Accumulates c * X_i * X_j into out, resolving overlapping index bits with
// s_b(x)^2 = s_{b+1}(x) + s_b(v_b) * s_b(x). Every generated index is at most
// i + j, so out must have at least i + j + 1 entries.
void accum_pair(const BasisCtx& ctx, std::vector<FieldElem>& out, FieldElem c, std::uint32_t i,
                std::uint32_t j);

// Accumulates c * X_i * X_j * X_{2^e}; the extra factor may collide with both
// i and j, in which case the collision cascades upward like a carry.
void accum_triple(const BasisCtx& ctx, std::vector<FieldElem>& out, FieldElem c, std::uint32_t i,
                  std::uint32_t j, unsigned e) {
  const std::uint32_t bit = 1u << e;
  if (!(i & bit)) {
    accum_pair(ctx, out, c, i | bit, j);
  } else if (!(j & bit)) {
    accum_pair(ctx, out, c, i, j | bit);
  } else {
    accum_pair(ctx, out, ctx.field.mul(c, ctx.sv[e]), i, j);
    accum_triple(ctx, out, c, i ^ bit, j, e + 1);
  }
}

void accum_pair(const BasisCtx& ctx, std::vector<FieldElem>& out, FieldElem c, std::uint32_t i,
                std::uint32_t j) {
  if (c == 0) return;
  std::uint32_t overlap = i & j;
  if (overlap == 0) {
    out[i | j] ^= c;
    return;
  }
  const unsigned b = std::countr_zero(overlap);
  const std::uint32_t bit = 1u << b;
  const std::uint32_t i2 = i ^ bit;
  const std::uint32_t j2 = j ^ bit;
  accum_pair(ctx, out, ctx.field.mul(c, ctx.sv[b]), i2 | bit, j2);
  accum_triple(ctx, out, c, i2, j2, b + 1);
}

PolyX mul_schoolbook(const BasisCtx& ctx, const PolyX& a, const PolyX& b, std::size_t dq) {
  PolyX out;
  out.c.assign(dq + 1, 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) {
      if (b.c[j] == 0) continue;
      accum_pair(ctx, out.c, ctx.field.mul(a.c[i], b.c[j]), static_cast<std::uint32_t>(i),
                 static_cast<std::uint32_t>(j));
    }
  }
  out.trim();
  return out;
}

// True when b is c * X_y and every set index bit of a is disjoint from y, so
// the product is a plain coefficient shift.
bool disjoint_single_term(const PolyX& a, const PolyX& b, std::size_t db) {
  for (std::size_t j = 0; j + 1 < db + 1 && j < b.c.size(); ++j) {
    if (b.c[j] != 0) return false;
  }
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] != 0 && (i & db) != 0) return false;
  }
  return true;
}

PolyX mul_shifted(const FieldCtx& f, const PolyX& a, std::size_t y, FieldElem c) {
  PolyX out;
  out.c.assign(a.c.size() + y, 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i]) out.c[i | y] = f.mul(a.c[i], c);
  }
  out.trim();
  return out;
}

void derivative_rec(const BasisCtx& ctx, std::span<FieldElem> d, unsigned k) {
  if (k == 0) {
    d[0] = 0;
    return;
  }
  const std::size_t half = std::size_t(1) << (k - 1);
  const FieldElem sd = ctx.sderiv[k - 1];
  derivative_rec(ctx, d.subspan(0, half), k - 1);
  for (std::size_t i = 0; i < half; ++i) d[i] ^= ctx.field.mul(sd, d[half + i]);
  derivative_rec(ctx, d.subspan(half, half), k - 1);
}

DivRem divrem_newton(const BasisCtx& ctx, const PolyX& a, const PolyX& b, std::size_t da,
                     std::size_t db);

}  // namespace

PolyX shift_quotient(const PolyX& a, unsigned i) {
  const std::size_t cut = std::size_t(1) << i;
  PolyX out;
  if (a.c.size() > cut) out.c.assign(a.c.begin() + cut, a.c.end());
  out.trim();
  return out;
}

PolyX low_slice(const PolyX& a, unsigned i) {
  const std::size_t cut = std::size_t(1) << i;
  PolyX out;
  out.c.assign(a.c.begin(), a.c.size() < cut ? a.c.end() : a.c.begin() + cut);
  out.trim();
  return out;
}

PolyX mul(const BasisCtx& ctx, const PolyX& a, const PolyX& b) {
  const auto da_opt = a.degree();
  const auto db_opt = b.degree();
  if (!da_opt || !db_opt) return PolyX();
  const std::size_t da = *da_opt, db = *db_opt;
  const std::size_t dq = da + db;
  if (dq >= ctx.n()) {
    throw std::domain_error("polynomial product degree exceeds 2^m - 1");
  }
  if (db == 0) return scale(ctx.field, a, b.c[0]);
  if (da == 0) return scale(ctx.field, b, a.c[0]);
  if (disjoint_single_term(a, b, db)) return mul_shifted(ctx.field, a, db, b.c[db]);
  if (disjoint_single_term(b, a, da)) return mul_shifted(ctx.field, b, da, a.c[da]);
  if (dq < kSchoolbookMaxDegree) return mul_schoolbook(ctx, a, b, dq);

  const unsigned k = ceil_lg1(dq + 1);  // smallest k with 2^k > dq
  const std::size_t len = std::size_t(1) << k;
  std::vector<FieldElem> fa(len, 0), fb(len, 0);
  std::copy(a.c.begin(), a.c.begin() + da + 1, fa.begin());
  std::copy(b.c.begin(), b.c.begin() + db + 1, fb.begin());
  fft_x_inplace(ctx, fa, k, 0);
  fft_x_inplace(ctx, fb, k, 0);
  for (std::size_t i = 0; i < len; ++i) fa[i] = ctx.field.mul(fa[i], fb[i]);
  ifft_x_inplace(ctx, fa, k, 0);
  PolyX out{std::move(fa)};
  out.trim();
  return out;
}

PolyX formal_derivative(const BasisCtx& ctx, const PolyX& d) {
  const auto deg = d.degree();
  if (!deg || *deg == 0) return PolyX();
  const unsigned k = ceil_lg1(*deg + 1);
  std::vector<FieldElem> buf(std::size_t(1) << k, 0);
  std::copy(d.c.begin(), d.c.begin() + *deg + 1, buf.begin());
  derivative_rec(ctx, buf, k);
  PolyX out{std::move(buf)};
  out.trim();
  return out;
}

PolyX newton_lambda(const BasisCtx& ctx, const PolyX& B) {
  const auto deg = B.degree();
  if (!deg || !std::has_single_bit(*deg + 1)) {
    throw std::invalid_argument("newton_lambda: divisor degree must be 2^j - 1");
  }
  const unsigned dl = static_cast<unsigned>(std::bit_width(*deg));  // deg B = 2^dl - 1
  if (dl > ctx.m() - 1) {
    throw std::domain_error("newton_lambda: iteration exceeds the field size");
  }

  // Quotient chain B_i = shift_quotient(B_{i+1}, i), deg B_i = 2^i - 1.
  std::vector<PolyX> chain(dl + 1);
  chain[dl] = B;
  chain[dl].trim();
  for (unsigned i = dl; i-- > 0;) chain[i] = shift_quotient(chain[i + 1], i);

  const PolyX s1 = PolyX::unit(2);
  PolyX lambda = PolyX::constant(ctx.field.inv(B.c[*deg]));
  for (unsigned i = 1; i <= dl; ++i) {
    PolyX bar = mul(ctx, mul(ctx, mul(ctx, lambda, lambda), chain[i]), s1);
    PolyX l1 = shift_quotient(bar, i);
    lambda = add(l1, scale(ctx.field, shift_quotient(l1, i - 1), ctx.sv[i - 1]));
    assert(lambda.degree() && *lambda.degree() == (std::size_t(1) << i) - 1);
  }
  return lambda;
}

namespace {

DivRem divrem_newton(const BasisCtx& ctx, const PolyX& a, const PolyX& b, std::size_t da,
                     std::size_t db) {
  const unsigned dl = ceil_lg1(da);
  const unsigned dda = dl + 1;
  const std::size_t y = (std::size_t(1) << dl) - db - 1;
  const PolyX xy = PolyX::unit(y);
  const PolyX A = mul(ctx, a, xy);
  const PolyX B = mul(ctx, b, xy);
  assert(ceil_lg1(*A.degree()) == dda);  // deg A crosses into the next size class
  PolyX lambda = newton_lambda(ctx, B);

  // Quotient of A * lambda * s_1 by s_{dda}, split so no intermediate product
  // outgrows 2^dda - 1: the low half of A contributes only the possible
  // top-degree coefficient (a product of leading coefficients), the high half
  // contributes shift_quotient(A_H * lambda * s_1, dl).
  const PolyX a_hi = shift_quotient(A, dl);
  PolyX q;
  if (!a_hi.is_zero()) {
    q = shift_quotient(mul(ctx, mul(ctx, a_hi, lambda), PolyX::unit(2)), dl);
  }
  const FieldElem c0 = ctx.field.mul(A.at((std::size_t(1) << dl) - 1), lambda.lead());
  if (c0) {
    if (q.c.empty()) q.c.assign(1, 0);
    q.c[0] ^= c0;
    q.trim();
  }

  PolyX r = add(a, mul(ctx, q, b));
  assert(r.is_zero() || *r.degree() < db);
  return {q, r};
}

}  // namespace

DivRem divrem(const BasisCtx& ctx, const PolyX& a0, const PolyX& b) {
  if (b.is_zero()) throw std::domain_error("divrem: division by zero polynomial");
  const std::size_t db = *b.degree();
  PolyX a = a0;
  a.trim();
  PolyX q_total;

  for (;;) {
    const auto da_opt = a.degree();
    if (!da_opt || *da_opt < db) return {q_total, a};
    const std::size_t da = *da_opt;
    if (da == db) {
      const FieldElem c = ctx.field.div(a.lead(), b.lead());
      if (q_total.c.empty()) q_total.c.assign(1, 0);
      q_total.c[0] ^= c;
      q_total.trim();
      return {q_total, add(a, scale(ctx.field, b, c))};
    }
    if (ceil_lg1(da) <= ctx.m() - 1) {
      DivRem dr = divrem_newton(ctx, a, b, da, db);
      return {add(q_total, dr.q), dr.r};
    }
    // Dividend too large for the in-field fast path: cancel the leading term
    // classically and retry on the strictly smaller remainder.
    const std::size_t e = da - db;
    const FieldElem c = ctx.field.div(a.lead(), b.lead());
    if (q_total.c.size() <= e) q_total.c.resize(e + 1, 0);
    q_total.c[e] ^= c;
    a = add(a, mul(ctx, b, PolyX::unit(e, c)));
    assert(a.is_zero() || *a.degree() < da);
  }
}

}  // namespace rsx
