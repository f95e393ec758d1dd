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

#include "rsx/basis.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace rsx {

namespace {

bool coeffs_equal(const std::vector<FieldElem>& a, const std::vector<FieldElem>& b) {
  const std::size_t n = a.size() < b.size() ? b.size() : a.size();
  for (std::size_t i = 0; i < n; ++i) {
    FieldElem av = i < a.size() ? a[i] : 0;
    FieldElem bv = i < b.size() ? b[i] : 0;
    if (av != bv) return false;
  }
  return true;
}

}  // namespace

bool operator==(const PolyX& a, const PolyX& b) { return coeffs_equal(a.c, b.c); }
bool operator==(const PolyXbar& a, const PolyXbar& b) { return coeffs_equal(a.c, b.c); }

BasisCtx build_basis(FieldCtx field, std::span<const FieldElem> v) {
  const unsigned m = field.m();
  const std::uint32_t n = field.field_size();
  if (v.size() != m) {
    throw std::invalid_argument("basis must have exactly m = " + std::to_string(m) + " elements");
  }

  BasisCtx ctx{std::move(field), std::vector<FieldElem>(v.begin(), v.end()),
               {}, {}, {}, {}, {}, {}, {}, {}};
  const FieldCtx& f = ctx.field;

  // omega_table by the subset-sum recurrence; index_of as its inverse. A
  // repeated value means v is linearly dependent over F_2.
  ctx.omega_table.assign(n, 0);
  ctx.index_of.assign(n, 0);
  std::vector<std::uint8_t> seen(n, 0);
  seen[0] = 1;
  for (std::uint32_t i = 1; i < n; ++i) {
    std::uint32_t low = i & (i - 1);
    FieldElem w = add(ctx.omega_table[low], ctx.v[std::countr_zero(i)]);
    if (seen[w]) {
      throw std::invalid_argument("basis elements are linearly dependent over F_2");
    }
    seen[w] = 1;
    ctx.omega_table[i] = w;
    ctx.index_of[w] = static_cast<FieldElem>(i);
  }

  // Per-level evaluations S[i] = s_j(w_i), advanced with
  // s_{j+1}(x) = s_j(x) * (s_j(x) + s_j(v_j)).
  ctx.sv.assign(m, 0);
  ctx.sv_inv.assign(m, 0);
  ctx.twiddle.assign(m, {});
  std::vector<FieldElem> s(ctx.omega_table);
  for (unsigned j = 0; j < m; ++j) {
    FieldElem svj = s[std::uint32_t(1) << j];  // v_j = w_{2^j}
    if (svj == 0) throw std::invalid_argument("degenerate basis: s_j(v_j) = 0");
    ctx.sv[j] = svj;
    ctx.sv_inv[j] = f.inv(svj);
    auto& w = ctx.twiddle[j];
    w.assign(n, 0);
    for (std::uint32_t i = 0; i < n; ++i) w[i] = f.mul(s[i], ctx.sv_inv[j]);
    if (j + 1 < m) {
      for (std::uint32_t i = 0; i < n; ++i) s[i] = f.mul(s[i], add(s[i], svj));
    }
  }

  // s'_{j+1} = s_j(v_j) * s'_j; the square term drops out in characteristic 2.
  ctx.sderiv.assign(m + 1, 0);
  ctx.sderiv[0] = 1;
  for (unsigned j = 0; j < m; ++j) ctx.sderiv[j + 1] = f.mul(ctx.sderiv[j], ctx.sv[j]);

  ctx.pnorm.assign(n, 0);
  ctx.pnorm_inv.assign(n, 0);
  ctx.pnorm[0] = ctx.pnorm_inv[0] = 1;
  for (std::uint32_t i = 1; i < n; ++i) {
    ctx.pnorm[i] = f.mul(ctx.pnorm[i & (i - 1)], ctx.sv[std::countr_zero(i)]);
    ctx.pnorm_inv[i] = f.inv(ctx.pnorm[i]);
  }
  return ctx;
}

BasisCtx build_basis(FieldCtx field) {
  std::vector<FieldElem> v(field.m());
  for (unsigned j = 0; j < field.m(); ++j) v[j] = static_cast<FieldElem>(1u << j);
  return build_basis(std::move(field), v);
}

FieldElem omega(const BasisCtx& ctx, std::uint32_t i) { return ctx.omega_table[i]; }

FieldElem subspace_eval(const BasisCtx& ctx, unsigned j, FieldElem x) {
  FieldElem y = x;
  for (unsigned l = 0; l < j; ++l) y = ctx.field.mul(y, add(y, ctx.sv[l]));
  return y;
}

FieldElem norm_const(const BasisCtx& ctx, std::uint32_t i) {
  FieldElem p = 1;
  for (std::uint32_t bits = i; bits; bits &= bits - 1) {
    p = ctx.field.mul(p, ctx.sv[std::countr_zero(bits)]);
  }
  return p;
}

PolyX xbar_to_x(const BasisCtx& ctx, const PolyXbar& p) {
  PolyX out;
  out.c.resize(p.c.size());
  for (std::size_t i = 0; i < p.c.size(); ++i) {
    out.c[i] = ctx.field.mul(p.c[i], ctx.pnorm_inv[i]);
  }
  return out;
}

PolyXbar x_to_xbar(const BasisCtx& ctx, const PolyX& p) {
  PolyXbar out;
  out.c.resize(p.c.size());
  for (std::size_t i = 0; i < p.c.size(); ++i) {
    out.c[i] = ctx.field.mul(p.c[i], ctx.pnorm[i]);
  }
  return out;
}

PolyX add(const PolyX& a, const PolyX& b) {
  PolyX out;
  out.c.resize(a.c.size() > b.c.size() ? a.c.size() : b.c.size());
  for (std::size_t i = 0; i < out.c.size(); ++i) out.c[i] = add(a.at(i), b.at(i));
  out.trim();
  return out;
}

PolyX scale(const FieldCtx& f, const PolyX& p, FieldElem c) {
  if (c == 0) return PolyX();
  PolyX out;
  out.c.resize(p.c.size());
  for (std::size_t i = 0; i < p.c.size(); ++i) out.c[i] = f.mul(p.c[i], c);
  out.trim();
  return out;
}

}  // namespace rsx
