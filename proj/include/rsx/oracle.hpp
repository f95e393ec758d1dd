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

// Slow reference implementations used by tests and the self-test command.
// Nothing here may call the fast transform / polynomial / half-GCD code;
// this library links against the field and basis tables only.

#ifndef RSX_ORACLE_HPP_
#define RSX_ORACLE_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "rsx/basis.hpp"
#include "rsx/field.hpp"

namespace rsx::oracle {

/// Coefficients over the standard monomial basis, trailing zeros trimmed.
struct PolyMono {
  std::vector<FieldElem> c;

  PolyMono() = default;
  explicit PolyMono(std::vector<FieldElem> coeffs) : c(std::move(coeffs)) { trim(); }

  std::optional<std::size_t> degree() const { return detail::coeff_degree(c); }
  bool is_zero() const { return !degree().has_value(); }
  void trim() { detail::coeff_trim(c); }
  FieldElem at(std::size_t i) const { return i < c.size() ? c[i] : 0; }
  FieldElem lead() const { return c[*degree()]; }
};

bool operator==(const PolyMono& a, const PolyMono& b);

/// Shift-and-xor product of two GF(2)[y] bit patterns reduced modulo
/// reduction_poly; the non-table multiplication route.
FieldElem carryless_mul(unsigned m, std::uint32_t reduction_poly, FieldElem a, FieldElem b);

/// X_i(a) (normalized = false) or Xbar_i(a) (normalized = true), evaluated as
/// the product of s_j(a) over the set bits of i, divided by p_i when
/// normalized.
FieldElem eval_basis_fn(const BasisCtx& ctx, std::uint32_t i, FieldElem a, bool normalized);

/// values[t] = sum_i coeffs[i] * basis_i(points[t]); O(h^2 m).
std::vector<FieldElem> naive_multipoint(const BasisCtx& ctx, std::span<const FieldElem> coeffs,
                                        std::span<const FieldElem> points, bool normalized);

/// Monomial expansions of s_0 .. s_j, built by the squaring recursion with
/// schoolbook arithmetic. expansions()[j] has degree 2^j.
class SubspaceMono {
 public:
  SubspaceMono(const BasisCtx& ctx, unsigned max_j);
  const PolyMono& s(unsigned j) const { return s_[j]; }

 private:
  std::vector<PolyMono> s_;
};

/// Cache of monomial expansions of X_i, extended on demand. Reusing one
/// instance across a loop of conversions avoids re-expanding the basis.
class XExpansion {
 public:
  explicit XExpansion(const BasisCtx& ctx);
  const PolyMono& xi(std::uint32_t i);
  const BasisCtx& ctx() const { return *ctx_; }

 private:
  const BasisCtx* ctx_;
  std::vector<PolyMono> cache_;
};

PolyMono x_to_mono(XExpansion& table, const PolyX& p);
PolyMono x_to_mono(const BasisCtx& ctx, const PolyX& p);

/// Greedy top-down conversion: peel the leading coefficient against the monic
/// X_deg until nothing remains.
PolyX mono_to_x(XExpansion& table, const PolyMono& p);
PolyX mono_to_x(const BasisCtx& ctx, const PolyMono& p);

PolyMono mono_add(const PolyMono& a, const PolyMono& b);
PolyMono mono_scale(const FieldCtx& f, const PolyMono& p, FieldElem c);
PolyMono mono_mul(const FieldCtx& f, const PolyMono& a, const PolyMono& b);

struct MonoDivRem {
  PolyMono q, r;
};
/// Schoolbook long division; throws std::domain_error on b == 0.
MonoDivRem mono_divrem(const FieldCtx& f, const PolyMono& a, const PolyMono& b);

/// One row of the extended Euclidean iteration: r = a*u + b*v.
struct EeaRow {
  PolyMono r, u, v;
};
/// Classic extended Euclidean iteration on (a, b), stopping at the first
/// remainder with degree <= stop_degree (or the zero remainder). Returns that
/// row; cofactors satisfy a*u + b*v = r at every step.
EeaRow mono_eea(const FieldCtx& f, const PolyMono& a, const PolyMono& b, std::size_t stop_degree);

/// Horner evaluation.
FieldElem mono_eval(const FieldCtx& f, const PolyMono& p, FieldElem x);

/// Characteristic-2 derivative: even-power terms vanish.
PolyMono mono_derivative(const PolyMono& p);

}  // namespace rsx::oracle

#endif  // RSX_ORACLE_HPP_
