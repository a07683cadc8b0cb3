#pragma once

/// Exact arithmetic with sums of e-th roots of unity.
///
/// A sum sum_j c_j * zeta^j  (zeta = exp(2*pi*i/e)) is stored as the integer
/// coefficient vector (c_0 .. c_{e-1}).  Zero testing reduces the coefficient
/// polynomial modulo the e-th cyclotomic polynomial, which is exact: the
/// representation is a class in Z[x]/(x^e - 1) and zeta is a root of Phi_e.
///
/// Inner products of flat vectors only ever need e in {2, 3, 4}; for these the
/// sums are ordinary / Gaussian / Eisenstein integers and carry closed-form
/// squared moduli.  The general-e machinery exists for character identities.

#include <array>
#include <map>
#include <utility>
#include <vector>

#include "zeroalpha/errors.hpp"
#include "zeroalpha/numeric.hpp"

namespace za {

using Poly = std::vector<Int>;  // coefficient vector, index = degree

namespace detail {

inline void poly_trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder of a by monic b.
inline Poly poly_mod(Poly a, const Poly& b) {
  poly_trim(a);
  while (a.size() >= b.size()) {
    Int lead = a.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= lead * b[i];
    poly_trim(a);
  }
  return a;
}

// Exact quotient of a by monic b (remainder must vanish).
inline Poly poly_div_exact(Poly a, const Poly& b) {
  poly_trim(a);
  if (a.empty()) return {};
  Poly q(a.size() - b.size() + 1, Int(0));
  while (a.size() >= b.size()) {
    Int lead = a.back();
    std::size_t shift = a.size() - b.size();
    q[shift] = lead;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= lead * b[i];
    poly_trim(a);
  }
  if (!a.empty()) throw Error("polynomial division not exact");
  return q;
}

}  // namespace detail

// Phi_e, computed as (x^e - 1) / prod_{d | e, d < e} Phi_d.  Memoized.
inline const Poly& cyclotomic_polynomial(int e) {
  if (e < 1) throw ParameterError("cyclotomic index must be positive");
  static std::map<int, Poly> cache;
  auto it = cache.find(e);
  if (it != cache.end()) return it->second;
  Poly num(static_cast<std::size_t>(e) + 1, Int(0));
  num[0] = -1;
  num[static_cast<std::size_t>(e)] = 1;
  for (int d = 1; d < e; ++d) {
    if (e % d == 0) num = detail::poly_div_exact(std::move(num), cyclotomic_polynomial(d));
  }
  return cache.emplace(e, std::move(num)).first->second;
}

// Integer combination of e-th roots of unity.
class CycloSum {
 public:
  explicit CycloSum(int order) : e_(order), c_(static_cast<std::size_t>(order), Int(0)) {
    if (order < 1) throw ParameterError("root order must be positive");
  }

  int order() const { return e_; }

  void add_root(long exponent, const Int& count = Int(1)) {
    long r = exponent % e_;
    if (r < 0) r += e_;
    c_[static_cast<std::size_t>(r)] += count;
  }

  void add(const CycloSum& other) {
    if (other.e_ != e_) throw ParameterError("mixed root orders");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += other.c_[i];
  }

  const std::vector<Int>& coefficients() const { return c_; }

  bool is_zero() const {
    Poly rem = detail::poly_mod(c_, cyclotomic_polynomial(e_));
    return rem.empty();
  }

  bool equals_integer(const Int& n) const {
    CycloSum t = *this;
    t.c_[0] -= n;
    return t.is_zero();
  }

 private:
  int e_;
  std::vector<Int> c_;
};

// Value of a root sum for e in {2,3,4} over the basis {1} / {1, omega} /
// {1, i}: the pair (a, b) with sum = a + b*zeta.  norm = squared modulus.
struct QuadraticValue {
  Int a;
  Int b;
  Int norm;
};

// counts[r] = how many times zeta^r occurs in the sum.
inline QuadraticValue quadratic_value(const std::vector<Int>& counts, int e) {
  QuadraticValue v{Int(0), Int(0), Int(0)};
  switch (e) {
    case 1:
      v.a = counts.at(0);
      v.norm = v.a * v.a;
      return v;
    case 2:
      v.a = counts.at(0) - counts.at(1);
      v.norm = v.a * v.a;
      return v;
    case 3:  // omega^2 = -1 - omega
      v.a = counts.at(0) - counts.at(2);
      v.b = counts.at(1) - counts.at(2);
      v.norm = v.a * v.a - v.a * v.b + v.b * v.b;
      return v;
    case 4:  // i^2 = -1, i^3 = -i
      v.a = counts.at(0) - counts.at(2);
      v.b = counts.at(1) - counts.at(3);
      v.norm = v.a * v.a + v.b * v.b;
      return v;
    default:
      throw ParameterError("quadratic_value: root order must be 1..4");
  }
}

// Realification of a single root zeta^exp over the basis used above.
inline std::pair<int, int> realify_root(int exp, int e) {
  int r = exp % e;
  if (r < 0) r += e;
  switch (e) {
    case 1:
      return {1, 0};
    case 2:
      return {r == 0 ? 1 : -1, 0};
    case 3: {
      static constexpr std::array<std::pair<int, int>, 3> t{{{1, 0}, {0, 1}, {-1, -1}}};
      return t[static_cast<std::size_t>(r)];
    }
    case 4: {
      static constexpr std::array<std::pair<int, int>, 4> t{{{1, 0}, {0, 1}, {-1, 0}, {0, -1}}};
      return t[static_cast<std::size_t>(r)];
    }
    default:
      throw ParameterError("realify_root: root order must be 1..4");
  }
}

}  // namespace za
