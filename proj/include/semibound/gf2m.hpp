// Copyright (c) 2026 The semibound authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

#include "semibound/errors.hpp"

namespace semibound {

/// Arithmetic context for GF(2^e), 1 <= e <= 16. Elements are uint16_t bit
/// vectors: bit i holds the coefficient of x^i in the polynomial
/// representation modulo a fixed irreducible polynomial per degree (listed
/// below and in the README), so matrices built over these fields are
/// bit-stable across runs and platforms.
class Gf2m {
 public:
  using Elem = std::uint16_t;

  explicit Gf2m(int degree) : e_(degree) {
    if (degree < 1 || degree > 16) throw UnsupportedDegree(degree);
    poly_ = kModulus[degree];
  }

  int degree() const { return e_; }
  std::uint32_t modulus() const { return poly_; }
  std::uint32_t order() const { return 1u << e_; }  // field size 2^e

  static Elem add(Elem a, Elem b) { return a ^ b; }

  Elem mul(Elem a, Elem b) const {
    std::uint32_t acc = 0, aa = a;
    while (b) {
      if (b & 1u) acc ^= aa;
      aa <<= 1;
      if (aa & (1u << e_)) aa ^= poly_;
      b >>= 1;
    }
    return static_cast<Elem>(acc);
  }

  Elem pow(Elem a, unsigned long long n) const {
    Elem result = 1, base = a;
    while (n) {
      if (n & 1ULL) result = mul(result, base);
      base = mul(base, base);
      n >>= 1;
    }
    return result;
  }

  Elem inv(Elem a) const {
    if (a == 0) throw InvalidArgument("0 has no multiplicative inverse");
    return pow(a, order() - 2);
  }

 private:
  // One irreducible polynomial per degree, low-weight and primitive (the
  // usual LFSR taps). Bit e is the leading coefficient.
  static constexpr std::uint32_t kModulus[17] = {
      0,
      0x3,      // x + 1
      0x7,      // x^2 + x + 1
      0xB,      // x^3 + x + 1
      0x13,     // x^4 + x + 1
      0x25,     // x^5 + x^2 + 1
      0x43,     // x^6 + x + 1
      0x89,     // x^7 + x^3 + 1
      0x11D,    // x^8 + x^4 + x^3 + x^2 + 1
      0x211,    // x^9 + x^4 + 1
      0x409,    // x^10 + x^3 + 1
      0x805,    // x^11 + x^2 + 1
      0x1053,   // x^12 + x^6 + x^4 + x + 1
      0x201B,   // x^13 + x^4 + x^3 + x + 1
      0x4443,   // x^14 + x^10 + x^6 + x + 1
      0x8003,   // x^15 + x + 1
      0x1100B,  // x^16 + x^12 + x^3 + x + 1
  };

  int e_;
  std::uint32_t poly_;
};

}  // namespace semibound
