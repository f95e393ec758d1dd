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

#ifndef RSX_FIELD_HPP_
#define RSX_FIELD_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

namespace rsx {

/// An element of GF(2^m), 2 <= m <= 16. The value is the bit pattern of a
/// polynomial over GF(2) of degree < m; 0 is the additive identity and 1 the
/// multiplicative identity. Elements and code symbols share this type.
using FieldElem = std::uint16_t;

constexpr unsigned kMinM = 2;
constexpr unsigned kMaxM = 16;

/// Addition in characteristic 2 is XOR of bit patterns, and equals
/// subtraction. Independent of the reduction polynomial.
inline FieldElem add(FieldElem a, FieldElem b) { return static_cast<FieldElem>(a ^ b); }

/// Multiplication/inversion machinery for one GF(2^m).
///
/// Multiplication runs on discrete-log tables: log_table/exp_table are built
/// by cycling powers of y (the polynomial x, value 2) modulo reduction_poly.
/// Construction fails unless the cycle visits all 2^m - 1 nonzero elements,
/// which verifies that reduction_poly is primitive (hence irreducible).
/// Immutable after construction; safe to share across threads.
class FieldCtx {
 public:
  FieldCtx(unsigned m, std::uint32_t reduction_poly);

  unsigned m() const { return m_; }
  std::uint32_t reduction_poly() const { return poly_; }
  std::uint32_t field_size() const { return std::uint32_t(1) << m_; }
  std::uint32_t order() const { return order_; }  // 2^m - 1

  FieldElem mul(FieldElem a, FieldElem b) const {
    if (a == 0 || b == 0) return 0;
    std::uint32_t s = std::uint32_t(log_[a]) + log_[b];
    if (s >= order_) s -= order_;
    return exp_[s];
  }

  /// Multiplicative inverse. Throws std::domain_error on a == 0.
  FieldElem inv(FieldElem a) const;

  /// div(a, b) = a / b; div(0, b) = 0. Throws std::domain_error on b == 0.
  FieldElem div(FieldElem a, FieldElem b) const;

  FieldElem exp(std::uint32_t i) const { return exp_[i % order_]; }
  FieldElem log(FieldElem a) const { return log_[a]; }

 private:
  unsigned m_;
  std::uint32_t poly_;
  std::uint32_t order_;
  std::vector<FieldElem> log_;  // length 2^m; log_[0] is unused
  std::vector<FieldElem> exp_;  // length 2^m
};

/// Builds and validates a field context. Throws std::invalid_argument if m is
/// out of range or reduction_poly does not generate the full multiplicative
/// cycle.
FieldCtx build_ctx(unsigned m, std::uint32_t reduction_poly);

/// Default reduction polynomial for each m (fixed table so outputs are
/// bit-exact across builds).
std::uint32_t default_reduction_poly(unsigned m);

/// build_ctx(m, default_reduction_poly(m)).
FieldCtx build_ctx(unsigned m);

}  // namespace rsx

#endif  // RSX_FIELD_HPP_
