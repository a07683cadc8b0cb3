#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "zeroalpha/linalg.hpp"

using namespace za;

namespace {

// Independent oracle: plain Gaussian elimination over boost rationals.
std::size_t rational_rank(const IntMatrix& m) {
  std::vector<std::vector<Rat>> a(m.rows, std::vector<Rat>(m.cols));
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) a[i][j] = Rat(m.at(i, j));
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
    std::size_t piv = rank;
    while (piv < m.rows && a[piv][col] == Rat(0)) ++piv;
    if (piv == m.rows) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t i = rank + 1; i < m.rows; ++i) {
      if (a[i][col] == Rat(0)) continue;
      Rat f = a[i][col] / a[rank][col];
      for (std::size_t j = col; j < m.cols; ++j) a[i][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

IntMatrix from_rows(const std::vector<std::vector<long>>& rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
  return m;
}

}  // namespace

TEST_CASE("fraction-free rank on fixed matrices") {
  CHECK(bareiss_rank(from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) == 3);
  CHECK(bareiss_rank(from_rows({{1, 2}, {2, 4}})) == 1);
  CHECK(bareiss_rank(from_rows({{0, 0}, {0, 0}})) == 0);
  CHECK(bareiss_rank(from_rows({{1, 2, 3, 4}, {2, 4, 6, 8}, {1, 1, 1, 1}})) == 2);
  // Wide and tall orientations of the same rank-2 matrix.
  CHECK(bareiss_rank(from_rows({{1, 1, 1}, {1, 2, 4}})) == 2);
  CHECK(bareiss_rank(from_rows({{1, 1}, {1, 2}, {1, 4}})) == 2);
}

TEST_CASE("fraction-free rank agrees with rational elimination on random matrices") {
  std::mt19937 rng(20260816u);
  std::uniform_int_distribution<int> entry(-3, 3);
  std::uniform_int_distribution<std::size_t> dim(1, 9);
  for (int trial = 0; trial < 200; ++trial) {
    IntMatrix m(dim(rng), dim(rng));
    for (std::size_t i = 0; i < m.rows; ++i)
      for (std::size_t j = 0; j < m.cols; ++j) m.at(i, j) = entry(rng);
    std::size_t expected = rational_rank(m);
    CHECK(bareiss_rank(m) == expected);
    CHECK(exact_rank(m) == expected);
    CHECK(rank_mod_m31(m) <= expected);
  }
}

TEST_CASE("modular full-rank certificate closes on a structured matrix") {
  // 24x24 circulant-ish +-1 matrix, full rank; certificate path must agree.
  IntMatrix m(24, 24);
  for (std::size_t i = 0; i < 24; ++i)
    for (std::size_t j = 0; j < 24; ++j) m.at(i, j) = ((i * j + i + j) % 5 < 2) ? 1 : -1;
  std::size_t r = bareiss_rank(m);
  CHECK(rank_mod_m31(m) == r);
  CHECK(exact_rank(m) == r);
}

TEST_CASE("F_p row reduction and nullspace") {
  // F2: G = [[1,0,1],[0,1,1]] has nullspace spanned by (1,1,1).
  std::vector<std::vector<std::uint8_t>> g2 = {{1, 0, 1}, {0, 1, 1}};
  auto r2 = fp_rref(g2, 2);
  CHECK(r2.rank == 2);
  auto ns2 = fp_nullspace(g2, 3, 2);
  REQUIRE(ns2.size() == 1);
  CHECK(ns2[0] == std::vector<std::uint8_t>{1, 1, 1});

  // F3: all-ones length-6 row; nullspace has dimension 5 and every basis
  // vector is annihilated.
  std::vector<std::vector<std::uint8_t>> g3 = {{1, 1, 1, 1, 1, 1}};
  auto ns3 = fp_nullspace(g3, 6, 3);
  REQUIRE(ns3.size() == 5);
  for (const auto& v : ns3) {
    int dot = 0;
    for (std::uint8_t x : v) dot = (dot + x) % 3;
    CHECK(dot == 0);
  }

  // rank(G) + rank(nullspace basis) = ncols, and G * N^T = 0, over both fields.
  std::mt19937 rng(7u);
  for (int p : {2, 3}) {
    std::uniform_int_distribution<int> entry(0, p - 1);
    for (int trial = 0; trial < 50; ++trial) {
      std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 7;
      std::vector<std::vector<std::uint8_t>> g(rows, std::vector<std::uint8_t>(cols));
      for (auto& row : g)
        for (auto& x : row) x = static_cast<std::uint8_t>(entry(rng));
      auto rref = fp_rref(g, p);
      auto ns = fp_nullspace(g, cols, p);
      CHECK(rref.rank + ns.size() == cols);
      for (const auto& v : ns) {
        for (const auto& row : g) {
          int dot = 0;
          for (std::size_t j = 0; j < cols; ++j) dot = (dot + row[j] * v[j]) % p;
          CHECK(dot == 0);
        }
      }
      auto rref_ns = fp_rref(ns, p);
      CHECK(rref_ns.rank == ns.size());
    }
  }
}
