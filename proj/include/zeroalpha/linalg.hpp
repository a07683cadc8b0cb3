#pragma once

/// Exact rank computations.
///
/// bareiss_rank: fraction-free Gaussian elimination over Z (two-term Bareiss
/// update, every division exact).  rank_mod_m31: elimination over
/// GF(2^31 - 1); its result is a lower bound on the rational rank, so a full
/// modular rank is an exact certificate.  exact_rank combines the two:
/// certificate first on large inputs, Bareiss otherwise or as fallback.
///
/// fp_rref / fp_nullspace: dense row reduction over a small prime field,
/// used for code machinery (F2, F3).

#include <cstdint>
#include <vector>

#include "zeroalpha/errors.hpp"
#include "zeroalpha/numeric.hpp"

namespace za {

struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Int> data;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, Int(0)) {}

  Int& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const Int& at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

inline std::size_t bareiss_rank(IntMatrix m) {
  std::size_t rank = 0;
  Int prev = 1;
  for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
    std::size_t piv = rank;
    while (piv < m.rows && m.at(piv, col) == 0) ++piv;
    if (piv == m.rows) continue;
    if (piv != rank)
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(rank, j));
    const Int pivot = m.at(rank, col);
    for (std::size_t i = rank + 1; i < m.rows; ++i) {
      const Int head = m.at(i, col);
      for (std::size_t j = col + 1; j < m.cols; ++j) {
        Int num = pivot * m.at(i, j) - head * m.at(rank, j);
        Int q, r;
        boost::multiprecision::divide_qr(num, prev, q, r);
        if (r != 0) throw Error("fraction-free elimination: inexact division");
        m.at(i, j) = std::move(q);
      }
      m.at(i, col) = 0;
    }
    prev = pivot;
    ++rank;
  }
  return rank;
}

namespace detail {

constexpr std::uint64_t kM31 = (std::uint64_t(1) << 31) - 1;

inline std::uint64_t m31_reduce(std::uint64_t x) {
  x = (x & kM31) + (x >> 31);
  x = (x & kM31) + (x >> 31);
  return x >= kM31 ? x - kM31 : x;
}

inline std::uint64_t m31_of_int(const Int& v) {
  Int r = v % Int(kM31);
  if (r < 0) r += Int(kM31);
  return static_cast<std::uint64_t>(r);
}

inline std::uint64_t m31_pow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t acc = 1;
  while (e) {
    if (e & 1) acc = m31_reduce(acc * b);
    b = m31_reduce(b * b);
    e >>= 1;
  }
  return acc;
}

}  // namespace detail

inline std::size_t rank_mod_m31(const IntMatrix& m) {
  using namespace detail;
  std::vector<std::uint64_t> a(m.rows * m.cols);
  for (std::size_t i = 0; i < m.data.size(); ++i) a[i] = m31_of_int(m.data[i]);
  auto at = [&](std::size_t r, std::size_t c) -> std::uint64_t& { return a[r * m.cols + c]; };
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
    std::size_t piv = rank;
    while (piv < m.rows && at(piv, col) == 0) ++piv;
    if (piv == m.rows) continue;
    if (piv != rank)
      for (std::size_t j = col; j < m.cols; ++j) std::swap(at(piv, j), at(rank, j));
    const std::uint64_t inv = m31_pow(at(rank, col), kM31 - 2);
    for (std::size_t i = rank + 1; i < m.rows; ++i) {
      if (at(i, col) == 0) continue;
      const std::uint64_t f = m31_reduce(at(i, col) * inv);
      for (std::size_t j = col; j < m.cols; ++j) {
        std::uint64_t t = m31_reduce(f * at(rank, j));
        at(i, j) = m31_reduce(at(i, j) + kM31 - t);
      }
    }
    ++rank;
  }
  return rank;
}

inline std::size_t exact_rank(const IntMatrix& m) {
  const std::size_t lim = std::min(m.rows, m.cols);
  // Rough Bareiss cost; above this, try the cheap certificate first.
  if (m.rows * m.cols * lim > 50'000'000) {
    std::size_t r = rank_mod_m31(m);
    if (r == lim) return r;  // nonzero minor mod p => nonzero minor over Z
  }
  return bareiss_rank(m);
}

// ---- small prime fields ----------------------------------------------------

struct FpRref {
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
  std::vector<std::vector<std::uint8_t>> rows;  // nonzero rows, reduced echelon
};

inline int fp_inv(int a, int p) {
  a %= p;
  for (int x = 1; x < p; ++x)
    if (a * x % p == 1) return x;
  throw ParameterError("fp_inv of zero");
}

inline FpRref fp_rref(std::vector<std::vector<std::uint8_t>> rows, int p) {
  FpRref out;
  if (rows.empty()) return out;
  const std::size_t cols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows.size(); ++col) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    const int inv = fp_inv(rows[r][col], p);
    for (auto& x : rows[r]) x = static_cast<std::uint8_t>(x * inv % p);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col] == 0) continue;
      const int f = rows[i][col];
      for (std::size_t j = 0; j < cols; ++j)
        rows[i][j] = static_cast<std::uint8_t>((rows[i][j] + (p - f) * rows[r][j]) % p);
    }
    out.pivot_cols.push_back(col);
    ++r;
  }
  out.rank = r;
  rows.resize(r);
  out.rows = std::move(rows);
  return out;
}

// Basis of {x : M x = 0} over F_p; one vector per free column.
inline std::vector<std::vector<std::uint8_t>> fp_nullspace(
    const std::vector<std::vector<std::uint8_t>>& m, std::size_t cols, int p) {
  FpRref rref = fp_rref(m, p);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : rref.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<std::uint8_t>> basis;
  for (std::size_t free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<std::uint8_t> v(cols, 0);
    v[free_col] = 1;
    for (std::size_t r = 0; r < rref.rank; ++r) {
      // pivot_col entry must cancel rref.rows[r][free_col] * 1
      int val = rref.rows[r][free_col] % p;
      v[rref.pivot_cols[r]] = static_cast<std::uint8_t>((p - val) % p);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace za
