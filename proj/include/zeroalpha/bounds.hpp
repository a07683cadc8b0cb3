#pragma once

/// Size bounds for {0, alpha}-sets of unit vectors and the tensor-rank
/// computation behind the improved (flat) bounds.
///
/// A set with squared inner products in {0, alpha} satisfies the classical
/// absolute bounds; when the vectors are additionally flat (all coordinates
/// of equal modulus), the cubic tensors x (x) x (x) conj(x) collapse onto far
/// fewer coordinates and the bound drops:
///
///   field     classical              flat
///   complex   m^2(m+1)/2             m(m^2 - m + 2)/2
///   real      m(m+1)(m+2)/6          m(m^2 - 3m + 8)/6
///
/// tensor_rank_check builds the collapsed coordinate matrix of a flat set,
/// verifies entry by entry that it really represents the full cubic tensor,
/// and certifies that the tensors are linearly independent (exact rank = n).

#include <algorithm>
#include <array>
#include <cstdint>
#include <vector>

#include "zeroalpha/construction.hpp"
#include "zeroalpha/cyclotomic.hpp"
#include "zeroalpha/errors.hpp"
#include "zeroalpha/linalg.hpp"
#include "zeroalpha/numeric.hpp"

namespace za {

enum class Field { real, complex };

inline Int dgs_bound(std::int64_t m, Field f) {
  if (m < 1) throw ParameterError("bound needs dimension >= 1");
  Int v(m);
  if (f == Field::complex) return v * v * (v + 1) / 2;
  return v * (v + 1) * (v + 2) / 6;
}

inline Int flat_bound(std::int64_t m, Field f) {
  if (m < 1) throw ParameterError("bound needs dimension >= 1");
  Int v(m);
  if (f == Field::complex) return v * (v * v - v + 2) / 2;
  return v * (v * v - 3 * v + 8) / 6;  // m(m^2-3m+8) = m(m+1)(m+2) mod 6
}

struct BoundReport {
  Field field = Field::complex;
  std::int64_t dim = 0;
  Int count;
  Int dgs;
  Int flat;
  bool satisfied = false;  // count <= flat
  bool flat_tight = false;
  bool dgs_tight = false;
};

inline BoundReport evaluate_bounds(const FlatVectorSet& s) {
  BoundReport r;
  r.field = is_real(s) ? Field::real : Field::complex;
  r.dim = s.dim;
  r.count = Int(s.vectors.size());
  r.dgs = dgs_bound(s.dim, r.field);
  r.flat = flat_bound(s.dim, r.field);
  r.satisfied = r.count <= r.flat;
  r.flat_tight = r.count == r.flat;
  r.dgs_tight = r.count == r.dgs;
  return r;
}

struct TensorRankReport {
  Field field = Field::complex;
  std::int64_t count = 0;
  std::int64_t reduced_dim = 0;  // number of surviving tensor coordinates
  std::int64_t rank = 0;
  bool independent = false;  // rank == count
};

namespace detail {

// Exponent of coordinate (a,b,c) of x (x) x (x) conj(x) for exponent row r.
inline int cubic_exponent(const std::vector<int>& r, int e, int a, int b, int c) {
  int v = (r[static_cast<std::size_t>(a)] + r[static_cast<std::size_t>(b)] -
           r[static_cast<std::size_t>(c)]) % e;
  return v < 0 ? v + e : v;
}

}  // namespace detail

// Collapsed cubic-tensor rank of a flat set.  Column scaling (the 1/k factors
// absorbed into repeated-index coordinates) never changes a rank, so columns
// hold bare root-of-unity exponents.  Complex ranks are certified through the
// standard quadratic-field doubling: appending each row multiplied by the
// generating root makes the rational rank exactly twice the complex one.
inline TensorRankReport tensor_rank_check(const FlatVectorSet& s) {
  const int m = static_cast<int>(s.dim);
  const int e = s.root_order;
  if (m < 1) throw ParameterError("tensor check needs dimension >= 1");
  if (e > 4) throw ParameterError("tensor check needs a quadratic root order");

  TensorRankReport rep;
  rep.field = is_real(s) ? Field::real : Field::complex;
  rep.count = static_cast<std::int64_t>(s.vectors.size());

  // Surviving coordinates: any repeated index turns |x_i|^2 into the constant
  // 1/k, so (a,b,c) collapses onto a single-index coordinate whenever c hits
  // a or b (and, over the reals, whenever any two indices agree).
  std::vector<std::array<int, 3>> columns;
  for (int c = 0; c < m; ++c) columns.push_back({c, -1, -1});
  if (rep.field == Field::real) {
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b)
        for (int c = b + 1; c < m; ++c) columns.push_back({a, b, c});
  } else {
    for (int a = 0; a < m; ++a)
      for (int b = a; b < m; ++b)
        for (int c = 0; c < m; ++c)
          if (c != a && c != b) columns.push_back({a, b, c});
  }
  rep.reduced_dim = static_cast<std::int64_t>(columns.size());
  if (Int(rep.reduced_dim) != flat_bound(m, rep.field))
    throw VerificationError("tensor coordinate count disagrees with the flat bound",
                            static_cast<int>(rep.reduced_dim), m);

  // Exponent of each reduced column per vector, plus the entry-wise collapse
  // check: every one of the m^3 full coordinates must agree with the reduced
  // column it collapses onto.
  auto column_exponent = [&](const std::vector<int>& r, const std::array<int, 3>& col) {
    if (col[1] < 0) return r[static_cast<std::size_t>(col[0])] % e;
    return detail::cubic_exponent(r, e, col[0], col[1], col[2]);
  };
  auto collapse_target = [&](int a, int b, int c) -> std::array<int, 3> {
    if (rep.field == Field::real) {
      if (a == b) return {c, -1, -1};
      if (a == c) return {b, -1, -1};
      if (b == c) return {a, -1, -1};
      int lo = std::min({a, b, c}), hi = std::max({a, b, c});
      return {lo, a + b + c - lo - hi, hi};
    }
    if (c == a) return {b, -1, -1};
    if (c == b) return {a, -1, -1};
    return {std::min(a, b), std::max(a, b), c};
  };
  for (std::size_t i = 0; i < s.vectors.size(); ++i) {
    const std::vector<int>& r = s.vectors[i];
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        for (int c = 0; c < m; ++c) {
          int full = detail::cubic_exponent(r, e, a, b, c);
          int want = column_exponent(r, collapse_target(a, b, c));
          // Entries are roots of unity, so exponent equality mod e is entry
          // equality.  Real sets have 2r = 0 mod e throughout, which is what
          // lets the sign-blind real targets match the conjugated exponent.
          if ((full - want) % e != 0)
            throw VerificationError("cubic tensor entry fails to collapse",
                                    static_cast<int>(i), (a * m + b) * m + c);
        }
  }

  const std::size_t n = s.vectors.size();
  const std::size_t rdim = columns.size();
  std::size_t raw_rank = 0;
  if (rep.field == Field::real) {
    IntMatrix mat(n, rdim);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < rdim; ++j) {
        auto [re, im] = realify_root(column_exponent(s.vectors[i], columns[j]), e);
        if (im != 0)
          throw VerificationError("real set produced a complex tensor entry",
                                  static_cast<int>(i), static_cast<int>(j));
        mat.at(i, j) = re;
      }
    raw_rank = exact_rank(mat);
    rep.rank = static_cast<std::int64_t>(raw_rank);
  } else {
    IntMatrix mat(2 * n, 2 * rdim);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < rdim; ++j) {
        int exp = column_exponent(s.vectors[i], columns[j]);
        auto [a0, b0] = realify_root(exp, e);
        auto [a1, b1] = realify_root(exp + 1, e);  // row times the root
        mat.at(i, 2 * j) = a0;
        mat.at(i, 2 * j + 1) = b0;
        mat.at(n + i, 2 * j) = a1;
        mat.at(n + i, 2 * j + 1) = b1;
      }
    raw_rank = exact_rank(mat);
    if (raw_rank % 2 != 0)
      throw VerificationError("doubled matrix has odd rank", static_cast<int>(raw_rank), 0);
    rep.rank = static_cast<std::int64_t>(raw_rank / 2);
  }
  rep.independent = rep.rank == rep.count;
  return rep;
}

}  // namespace za
