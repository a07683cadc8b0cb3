#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>
#include <cstdint>
#include <string>

#include "zeroalpha/errors.hpp"

namespace za {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::rational<Int>;

inline Rat make_rat(Int num, Int den) {
  if (den == 0) throw ParameterError("rational with zero denominator");
  return Rat(std::move(num), std::move(den));
}

// Canonical "p/q" form, q > 0, gcd(p,q) = 1; integers render as "p/1".
inline std::string rat_str(const Rat& r) {
  return r.numerator().str() + "/" + r.denominator().str();
}

inline std::string int_str(const Int& v) { return v.str(); }

// Exact test: is v a perfect square?  If so *root gets the nonnegative root.
inline bool is_perfect_square(const Int& v, Int* root = nullptr) {
  if (v < 0) return false;
  Int r = boost::multiprecision::sqrt(v);
  if (r * r != v) return false;
  if (root) *root = r;
  return true;
}

inline std::int64_t to_int64(const Int& v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min())
    throw SizeError("value does not fit in 64 bits: " + v.str());
  return static_cast<std::int64_t>(v);
}

}  // namespace za
