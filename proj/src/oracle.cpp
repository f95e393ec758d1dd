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

#include "rsx/oracle.hpp"

#include <bit>
#include <stdexcept>

namespace rsx::oracle {

bool operator==(const PolyMono& a, const PolyMono& b) {
  const std::size_t n = a.c.size() < b.c.size() ? b.c.size() : a.c.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (a.at(i) != b.at(i)) return false;
  }
  return true;
}

FieldElem carryless_mul(unsigned m, std::uint32_t reduction_poly, FieldElem a, FieldElem b) {
  std::uint64_t prod = 0;
  for (unsigned i = 0; i < m; ++i) {
    if (b & (1u << i)) prod ^= std::uint64_t(a) << i;
  }
  for (unsigned d = 2 * m; d-- > m;) {
    if (prod & (std::uint64_t(1) << d)) prod ^= std::uint64_t(reduction_poly) << (d - m);
  }
  return static_cast<FieldElem>(prod);
}

FieldElem eval_basis_fn(const BasisCtx& ctx, std::uint32_t i, FieldElem a, bool normalized) {
  FieldElem out = 1;
  for (std::uint32_t bits = i; bits; bits &= bits - 1) {
    unsigned j = std::countr_zero(bits);
    out = ctx.field.mul(out, subspace_eval(ctx, j, a));
  }
  if (normalized) out = ctx.field.div(out, norm_const(ctx, i));
  return out;
}

std::vector<FieldElem> naive_multipoint(const BasisCtx& ctx, std::span<const FieldElem> coeffs,
                                        std::span<const FieldElem> points, bool normalized) {
  const FieldCtx& f = ctx.field;
  std::vector<FieldElem> out(points.size(), 0);
  std::vector<FieldElem> sj(ctx.m() + 1);
  for (std::size_t t = 0; t < points.size(); ++t) {
    // s_j(point) for every level, once per point.
    sj[0] = points[t];
    for (unsigned j = 0; j + 1 <= ctx.m(); ++j) sj[j + 1] = f.mul(sj[j], add(sj[j], ctx.sv[j]));
    FieldElem acc = 0;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      if (coeffs[i] == 0) continue;
      FieldElem term = coeffs[i];
      for (std::uint32_t bits = static_cast<std::uint32_t>(i); bits; bits &= bits - 1) {
        term = f.mul(term, sj[std::countr_zero(bits)]);
      }
      if (normalized) term = f.div(term, norm_const(ctx, static_cast<std::uint32_t>(i)));
      acc = add(acc, term);
    }
    out[t] = acc;
  }
  return out;
}

SubspaceMono::SubspaceMono(const BasisCtx& ctx, unsigned max_j) {
  const FieldCtx& f = ctx.field;
  s_.resize(max_j + 1);
  s_[0] = PolyMono({0, 1});
  for (unsigned j = 0; j < max_j; ++j) {
    // s_{j+1} = s_j^2 + sv_j * s_j; squaring spreads coefficient i to 2i.
    PolyMono sq;
    sq.c.assign(2 * s_[j].c.size() - 1, 0);
    for (std::size_t i = 0; i < s_[j].c.size(); ++i) {
      sq.c[2 * i] = f.mul(s_[j].c[i], s_[j].c[i]);
    }
    s_[j + 1] = mono_add(sq, mono_scale(f, s_[j], ctx.sv[j]));
  }
}

XExpansion::XExpansion(const BasisCtx& ctx) : ctx_(&ctx) {
  cache_.resize(1);
  cache_[0] = PolyMono({1});
}

const PolyMono& XExpansion::xi(std::uint32_t i) {
  if (i < cache_.size() && !cache_[i].c.empty()) return cache_[i];
  if (i >= ctx_->n()) throw std::invalid_argument("basis index out of range");
  if (i >= cache_.size()) cache_.resize(std::size_t(i) + 1);
  SubspaceMono subs(*ctx_, ctx_->m() == 0 ? 0 : ctx_->m() - 1);
  for (std::uint32_t idx = 1; idx <= i; ++idx) {
    if (!cache_[idx].c.empty()) continue;
    std::uint32_t low = idx & (idx - 1);
    if (cache_[low].c.empty()) continue;  // filled on the pass that reaches it
    cache_[idx] = mono_mul(ctx_->field, cache_[low], subs.s(std::countr_zero(idx)));
  }
  return cache_[i];
}

PolyMono x_to_mono(XExpansion& table, const PolyX& p) {
  const FieldCtx& f = table.ctx().field;
  PolyMono out;
  out.c.assign(p.c.size(), 0);
  for (std::size_t i = 0; i < p.c.size(); ++i) {
    if (p.c[i] == 0) continue;
    const PolyMono& xi = table.xi(static_cast<std::uint32_t>(i));
    for (std::size_t l = 0; l < xi.c.size(); ++l) {
      out.c[l] = add(out.c[l], f.mul(p.c[i], xi.c[l]));
    }
  }
  out.trim();
  return out;
}

PolyMono x_to_mono(const BasisCtx& ctx, const PolyX& p) {
  XExpansion table(ctx);
  return x_to_mono(table, p);
}

PolyX mono_to_x(XExpansion& table, const PolyMono& p) {
  const FieldCtx& f = table.ctx().field;
  PolyMono rem = p;
  PolyX out;
  out.c.assign(p.c.size(), 0);
  while (!rem.is_zero()) {
    std::size_t d = *rem.degree();
    FieldElem c = rem.c[d];  // X_d is monic
    out.c[d] = c;
    const PolyMono& xd = table.xi(static_cast<std::uint32_t>(d));
    for (std::size_t l = 0; l < xd.c.size(); ++l) {
      rem.c[l] = add(rem.at(l), f.mul(c, xd.c[l]));
    }
    rem.trim();
  }
  out.trim();
  return out;
}

PolyX mono_to_x(const BasisCtx& ctx, const PolyMono& p) {
  XExpansion table(ctx);
  return mono_to_x(table, p);
}

PolyMono mono_add(const PolyMono& a, const PolyMono& b) {
  PolyMono out;
  out.c.resize(a.c.size() > b.c.size() ? a.c.size() : b.c.size());
  for (std::size_t i = 0; i < out.c.size(); ++i) out.c[i] = add(a.at(i), b.at(i));
  out.trim();
  return out;
}

PolyMono mono_scale(const FieldCtx& f, const PolyMono& p, FieldElem c) {
  if (c == 0) return PolyMono();
  PolyMono out;
  out.c.resize(p.c.size());
  for (std::size_t i = 0; i < p.c.size(); ++i) out.c[i] = f.mul(p.c[i], c);
  return out;
}

PolyMono mono_mul(const FieldCtx& f, const PolyMono& a, const PolyMono& b) {
  if (a.is_zero() || b.is_zero()) return PolyMono();
  PolyMono out;
  out.c.assign(a.c.size() + b.c.size() - 1, 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) {
      out.c[i + j] = add(out.c[i + j], f.mul(a.c[i], b.c[j]));
    }
  }
  out.trim();
  return out;
}

MonoDivRem mono_divrem(const FieldCtx& f, const PolyMono& a, const PolyMono& b) {
  if (b.is_zero()) throw std::domain_error("mono_divrem: division by zero polynomial");
  PolyMono r = a;
  r.trim();
  const std::size_t db = *b.degree();
  const FieldElem lead_inv = f.inv(b.lead());
  PolyMono q;
  if (!r.is_zero() && *r.degree() >= db) q.c.assign(*r.degree() - db + 1, 0);
  while (!r.is_zero() && *r.degree() >= db) {
    const std::size_t d = *r.degree();
    const FieldElem c = f.mul(r.c[d], lead_inv);
    q.c[d - db] = c;
    for (std::size_t i = 0; i <= db; ++i) {
      r.c[d - db + i] = add(r.at(d - db + i), f.mul(c, b.c[i]));
    }
    r.trim();
  }
  q.trim();
  return {q, r};
}

EeaRow mono_eea(const FieldCtx& f, const PolyMono& a, const PolyMono& b, std::size_t stop_degree) {
  EeaRow prev{a, PolyMono({1}), PolyMono()};
  EeaRow cur{b, PolyMono(), PolyMono({1})};
  while (!cur.r.is_zero() && *cur.r.degree() > stop_degree) {
    auto [q, r] = mono_divrem(f, prev.r, cur.r);
    EeaRow next{r, mono_add(prev.u, mono_mul(f, q, cur.u)),
                mono_add(prev.v, mono_mul(f, q, cur.v))};
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

FieldElem mono_eval(const FieldCtx& f, const PolyMono& p, FieldElem x) {
  FieldElem acc = 0;
  for (std::size_t i = p.c.size(); i-- > 0;) acc = add(f.mul(acc, x), p.c[i]);
  return acc;
}

PolyMono mono_derivative(const PolyMono& p) {
  PolyMono out;
  if (p.c.size() <= 1) return out;
  out.c.assign(p.c.size() - 1, 0);
  for (std::size_t i = 1; i < p.c.size(); i += 2) out.c[i - 1] = p.c[i];
  out.trim();
  return out;
}

}  // namespace rsx::oracle
