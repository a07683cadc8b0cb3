#pragma once

/// Which intersection arrays meet the flat bounds with equality.
///
/// A diameter-four array {k, k-1, k-c2, k-c3; 1, c2, c3, k} yields n = k + k3
/// vectors in dimension k, so attaining the flat bound is a polynomial
/// condition on (k, c2, c3).  Clearing denominators from n = bound gives
///
///   real:     (6 - c2 c3) k^2 - (6 c2 + 6 - 3 c2 c3) k + (6 c2 - 2 c2 c3) = 0
///   complex:  (2 - c2 c3) k^2 - (2 c2 + 2 - c2 c3) k + 2 c2 = 0
///
/// search_tight sweeps all feasible arrays up to a valency cap and reports
/// the solutions, annotated with the graphs known to realize them and, over
/// the reals, with whether the forced angle can occur among +-1 vectors at
/// all (t^2 = alpha k^2 needs an integer t of the same parity as k).

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "zeroalpha/bounds.hpp"
#include "zeroalpha/errors.hpp"
#include "zeroalpha/numeric.hpp"
#include "zeroalpha/spectra.hpp"

namespace za {

struct Feasibility {
  bool ok = false;
  std::string reason;  // empty when ok
};

// Same conditions shells_from_array enforces, restated without exceptions so
// a search can discard millions of arrays cheaply.
inline Feasibility feasible(const IntersectionArray& ia) {
  if (ia.k < 2) return {false, "valency below two"};
  if (ia.c2 < 1 || ia.c2 > ia.c3) return {false, "need 1 <= c2 <= c3"};
  if (ia.c3 > ia.k - 1) return {false, "need c3 < k for diameter four"};
  Int shell(ia.k);
  const std::int64_t b[] = {ia.k - 1, ia.k - ia.c2, ia.k - ia.c3};
  const std::int64_t c[] = {ia.c2, ia.c3, ia.k};
  for (int i = 0; i < 3; ++i) {
    const Int num = shell * b[i];
    if (num % c[i] != 0) return {false, "fractional shell size"};
    shell = num / c[i];
  }
  return {true, ""};
}

inline bool real_tight(const IntersectionArray& ia) {
  const Int k(ia.k), c2(ia.c2), cc = Int(ia.c2) * Int(ia.c3);
  return (6 - cc) * k * k - (6 * c2 + 6 - 3 * cc) * k + (6 * c2 - 2 * cc) == 0;
}

inline bool complex_tight(const IntersectionArray& ia) {
  const Int k(ia.k), c2(ia.c2), cc = Int(ia.c2) * Int(ia.c3);
  return (2 - cc) * k * k - (2 * c2 + 2 - cc) * k + 2 * c2 == 0;
}

// Can a set of +-1/sqrt(k) vectors show squared cosine alpha at all?
// The inner product of two such vectors is (k - 2d)/k for an integer d, so
// alpha k^2 must be t^2 with t = |k - 2d|: an integer of k's parity, below k.
inline bool flat_angle_compatible_real(std::int64_t k, const Rat& alpha) {
  if (k < 1) throw ParameterError("dimension must be positive");
  const Rat scaled = alpha * Rat(Int(k) * Int(k));
  if (scaled.denominator() != 1) return false;
  const Int t2 = scaled.numerator();
  if (t2 < 1) return false;
  const Int t = boost::multiprecision::sqrt(t2);
  if (t * t != t2) return false;
  return t < k && (Int(k) - t) % 2 == 0;
}

struct TightnessReport {
  IntersectionArray array;
  Spectrum spectrum;
  Rat alpha;
  Int class_size;
  Field field = Field::real;
  std::string realization;  // named graph family, empty when none is known
  bool angle_compatible = true;
};

inline std::string known_realization(const IntersectionArray& ia) {
  if (ia.k == 2 && ia.c2 == 1 && ia.c3 == 1) return "8-cycle";
  if (ia.c2 == 2 && ia.c3 == 3) {
    if (ia.k == 4) return "4-cube";
    if (ia.k == 8) return "folded-8-cube";
    if (ia.k == 24) return "golay";
  }
  return "";
}

inline std::vector<TightnessReport> search_tight(std::int64_t max_k, Field f) {
  if (max_k < 2 || max_k > 100000) throw ParameterError("search cap must lie in [2, 100000]");
  std::vector<TightnessReport> out;
  for (std::int64_t k = 2; k <= max_k; ++k)
    for (std::int64_t c2 = 1; c2 < k; ++c2)
      for (std::int64_t c3 = c2; c3 < k; ++c3) {
        const IntersectionArray ia{k, c2, c3};
        if (!(f == Field::real ? real_tight(ia) : complex_tight(ia))) continue;
        if (!feasible(ia).ok) continue;
        TightnessReport r;
        r.array = ia;
        r.spectrum = spectrum_from_array(ia);
        r.alpha = r.spectrum.alpha();
        r.class_size = class_size_from_array(ia);
        r.field = f;
        r.realization = known_realization(ia);
        r.angle_compatible =
            f == Field::real ? flat_angle_compatible_real(k, r.alpha) : true;
        out.push_back(std::move(r));
      }
  return out;
}

}  // namespace za
