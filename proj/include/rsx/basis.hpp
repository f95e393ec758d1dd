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

#ifndef RSX_BASIS_HPP_
#define RSX_BASIS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rsx/field.hpp"

namespace rsx {

namespace detail {
inline std::optional<std::size_t> coeff_degree(const std::vector<FieldElem>& c) {
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] != 0) return i;
  }
  return std::nullopt;
}
inline void coeff_trim(std::vector<FieldElem>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}
}  // namespace detail

/// Coefficients over the monic basis X: coefficient i multiplies X_i(x), the
/// product of the subspace polynomials selected by the binary digits of i.
/// The zero polynomial has no degree (degree() returns nullopt) rather than a
/// -1 sentinel, so degree comparisons never wrap.
struct PolyX {
  std::vector<FieldElem> c;

  PolyX() = default;
  explicit PolyX(std::vector<FieldElem> coeffs) : c(std::move(coeffs)) {}

  static PolyX constant(FieldElem v) { return v ? PolyX({v}) : PolyX(); }
  /// v * X_index.
  static PolyX unit(std::size_t index, FieldElem v = 1) {
    PolyX p;
    if (v) {
      p.c.assign(index + 1, 0);
      p.c[index] = v;
    }
    return p;
  }

  std::optional<std::size_t> degree() const { return detail::coeff_degree(c); }
  bool is_zero() const { return !degree().has_value(); }
  void trim() { detail::coeff_trim(c); }
  FieldElem at(std::size_t i) const { return i < c.size() ? c[i] : 0; }
  FieldElem lead() const { return c[*degree()]; }
};

/// Coefficients over the normalized basis X-bar: coefficient i multiplies
/// Xbar_i(x) = X_i(x) / p_i. Same degree conventions as PolyX.
struct PolyXbar {
  std::vector<FieldElem> c;

  PolyXbar() = default;
  explicit PolyXbar(std::vector<FieldElem> coeffs) : c(std::move(coeffs)) {}

  std::optional<std::size_t> degree() const { return detail::coeff_degree(c); }
  bool is_zero() const { return !degree().has_value(); }
  void trim() { detail::coeff_trim(c); }
  FieldElem at(std::size_t i) const { return i < c.size() ? c[i] : 0; }
};

bool operator==(const PolyX& a, const PolyX& b);
bool operator==(const PolyXbar& a, const PolyXbar& b);

/// Everything derived from the choice of an F_2-basis v of GF(2^m):
///  - omega_table / index_of: the enumeration w_i = sum of v_j over the set
///    bits of i, and its inverse;
///  - sv[j]     = s_j(v_j), the per-level normalization constants;
///  - sderiv[j] = s'_j, the constant formal derivative of s_j (product of the
///    nonzero elements of V_j);
///  - twiddle[j][i] = s_j(w_i) / s_j(v_j), the butterfly constants, stored in
///    full so transforms never evaluate subspace polynomials;
///  - pnorm[i]  = p_i = prod of sv_j over the set bits of i (and inverses).
/// Immutable after build_basis; safe to share across threads.
struct BasisCtx {
  FieldCtx field;
  std::vector<FieldElem> v;
  std::vector<FieldElem> sv;
  std::vector<FieldElem> sv_inv;
  std::vector<FieldElem> sderiv;  // indices 0..m, sderiv[0] = 1
  std::vector<std::vector<FieldElem>> twiddle;
  std::vector<FieldElem> omega_table;
  std::vector<FieldElem> index_of;
  std::vector<FieldElem> pnorm;
  std::vector<FieldElem> pnorm_inv;

  unsigned m() const { return field.m(); }
  std::uint32_t n() const { return field.field_size(); }
};

/// Builds all tables for basis v (|v| = m). Throws std::invalid_argument if v
/// is not linearly independent over F_2.
BasisCtx build_basis(FieldCtx field, std::span<const FieldElem> v);

/// Default basis: unit bit vectors v_j = 1 << j, so omega(i) == i.
BasisCtx build_basis(FieldCtx field);

/// w_i = sum of v_j over the set bits of i. Requires i < 2^m.
FieldElem omega(const BasisCtx& ctx, std::uint32_t i);

/// s_j(x), evaluated by j steps of the recursion
/// s_{j+1}(x) = s_j(x) * (s_j(x) + s_j(v_j)). Requires 0 <= j <= m.
FieldElem subspace_eval(const BasisCtx& ctx, unsigned j, FieldElem x);

/// p_i, computed as the product of sv_j over the set bits of i. p_0 = 1.
FieldElem norm_const(const BasisCtx& ctx, std::uint32_t i);

/// Basis change: coefficient i is scaled by 1/p_i (X-bar to X) or by p_i
/// (X to X-bar). Round trip is the identity; degree is preserved.
PolyX xbar_to_x(const BasisCtx& ctx, const PolyXbar& p);
PolyXbar x_to_xbar(const BasisCtx& ctx, const PolyX& p);

/// Coefficient-wise sum (characteristic 2). Result is trimmed.
PolyX add(const PolyX& a, const PolyX& b);

/// c * p, trimmed.
PolyX scale(const FieldCtx& f, const PolyX& p, FieldElem c);

}  // namespace rsx

#endif  // RSX_BASIS_HPP_
