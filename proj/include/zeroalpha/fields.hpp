#pragma once

/// GF(2^e) arithmetic on coefficient bitmasks, e <= 8.
///
/// Moduli are the Conway polynomials, so every field here is the standard
/// presentation and x (bitmask 2) is a primitive element.  Tests pin both
/// facts computationally.

#include <array>
#include <cstdint>

#include "zeroalpha/errors.hpp"

namespace za {

// Conway polynomial for GF(2^e), indexed by e; bit d = coefficient of x^d.
inline std::uint32_t conway_polynomial_2(int degree) {
  static constexpr std::array<std::uint32_t, 9> table = {
      0,
      0b11,         // x + 1
      0b111,        // x^2 + x + 1
      0b1011,       // x^3 + x + 1
      0b10011,      // x^4 + x + 1
      0b100101,     // x^5 + x^2 + 1
      0b1011011,    // x^6 + x^4 + x^3 + x + 1
      0b10000011,   // x^7 + x + 1
      0b100011101,  // x^8 + x^4 + x^3 + x^2 + 1
  };
  if (degree < 1 || degree >= static_cast<int>(table.size()))
    throw ParameterError("GF(2^e) supported for 1 <= e <= 8");
  return table[static_cast<std::size_t>(degree)];
}

class BinaryField {
 public:
  explicit BinaryField(int degree)
      : degree_(degree), modulus_(conway_polynomial_2(degree)) {}

  int degree() const { return degree_; }
  std::uint32_t order() const { return std::uint32_t(1) << degree_; }
  std::uint32_t modulus() const { return modulus_; }

  bool contains(std::uint32_t a) const { return a < order(); }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return a ^ b; }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t acc = 0;
    while (b) {
      if (b & 1) acc ^= a;
      b >>= 1;
      a <<= 1;
      if (a & order()) a ^= modulus_;
    }
    return acc;
  }

  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t acc = 1;
    while (e) {
      if (e & 1) acc = mul(acc, a);
      a = mul(a, a);
      e >>= 1;
    }
    return acc;
  }

 private:
  int degree_;
  std::uint32_t modulus_;
};

}  // namespace za
