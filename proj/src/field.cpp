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

#include "rsx/field.hpp"

#include <stdexcept>
#include <string>

namespace rsx {

FieldCtx::FieldCtx(unsigned m, std::uint32_t reduction_poly)
    : m_(m), poly_(reduction_poly) {
  if (m < kMinM || m > kMaxM) {
    throw std::invalid_argument("field dimension m must be in [2, 16], got " +
                                std::to_string(m));
  }
  const std::uint32_t size = std::uint32_t(1) << m;
  if (reduction_poly >> m != 1u || (reduction_poly & 1u) == 0) {
    // An irreducible polynomial of degree m has its top and constant bits set.
    throw std::invalid_argument("reduction polynomial must be a monic degree-" +
                                std::to_string(m) + " polynomial with nonzero constant term");
  }
  order_ = size - 1;
  log_.assign(size, 0);
  exp_.assign(size, 0);

  // Cycle powers of y. If the polynomial is reducible (or irreducible but not
  // primitive) the cycle closes early and some element is visited twice.
  std::uint32_t x = 1;
  for (std::uint32_t i = 0; i < order_; ++i) {
    if (x == 1 && i != 0) {
      throw std::invalid_argument("reduction polynomial 0x" /* short cycle */ +
                                  std::to_string(reduction_poly) +
                                  " is not primitive over GF(2^" + std::to_string(m) + ")");
    }
    exp_[i] = static_cast<FieldElem>(x);
    log_[x] = static_cast<FieldElem>(i);
    x <<= 1;
    if (x & size) x ^= reduction_poly;
  }
  if (x != 1) {
    throw std::invalid_argument("reduction polynomial does not reduce to the identity after 2^m-1 steps");
  }
  exp_[order_] = 1;  // spare slot, keeps the table a power-of-two length
}

FieldElem FieldCtx::inv(FieldElem a) const {
  if (a == 0) throw std::domain_error("division by zero in GF(2^m): inv(0)");
  return exp_[order_ - log_[a]];
}

FieldElem FieldCtx::div(FieldElem a, FieldElem b) const {
  if (b == 0) throw std::domain_error("division by zero in GF(2^m)");
  if (a == 0) return 0;
  std::uint32_t s = std::uint32_t(log_[a]) + order_ - log_[b];
  if (s >= order_) s -= order_;
  return exp_[s];
}

FieldCtx build_ctx(unsigned m, std::uint32_t reduction_poly) {
  return FieldCtx(m, reduction_poly);
}

std::uint32_t default_reduction_poly(unsigned m) {
  // Primitive polynomials, one per dimension.
  static constexpr std::uint32_t kPolys[kMaxM + 1] = {
      0,       0,       0x7,     0xB,     0x13,    0x25,
      0x43,    0x89,    0x11D,   0x211,   0x409,   0x805,
      0x1053,  0x201B,  0x4443,  0x8003,  0x1100B,
  };
  if (m < kMinM || m > kMaxM) {
    throw std::invalid_argument("no default reduction polynomial for m = " + std::to_string(m));
  }
  return kPolys[m];
}

FieldCtx build_ctx(unsigned m) { return FieldCtx(m, default_reduction_poly(m)); }

}  // namespace rsx
