#pragma once

/// Eigenvalue data of a bipartite distance-regular graph of diameter four.
///
/// Such a graph has spectrum {±k, ±theta, 0} and the squared second
/// eigenvalue comes straight out of the intersection numbers:
/// theta^2 = k + c2(k - c3 - 1).  spectrum_from_array recomputes the
/// characteristic polynomial of the quotient matrix by its three-term
/// recurrence and insists it factors as x(x^2 - k^2)(x^2 - theta^2), so the
/// closed form is never taken on faith.

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "zeroalpha/errors.hpp"
#include "zeroalpha/graph_types.hpp"
#include "zeroalpha/graphs.hpp"
#include "zeroalpha/numeric.hpp"

namespace za {

struct Spectrum {
  std::int64_t k = 0;
  std::int64_t theta1_squared = 0;

  // cosine squared of the nonorthogonal angle realized by the construction
  Rat alpha() const { return make_rat(Int(theta1_squared), Int(k) * Int(k)); }
};

// Shell sizes (1, k, k2, k3, k4) around any vertex, or a throw when the
// counting identities k_i * b_i = k_{i+1} * c_{i+1} have no integer solution.
inline std::array<Int, 5> shells_from_array(const IntersectionArray& ia) {
  const std::int64_t k = ia.k, c2 = ia.c2, c3 = ia.c3;
  if (k < 2) throw InfeasibleArrayError("valency below two");
  if (c2 < 1 || c2 > c3) throw InfeasibleArrayError("need 1 <= c2 <= c3");
  if (c3 > k - 1) throw InfeasibleArrayError("need c3 < k for diameter four");
  std::array<Int, 5> shell{Int(1), Int(k), Int(0), Int(0), Int(0)};
  const std::array<std::int64_t, 4> b{k, k - 1, k - c2, k - c3};
  const std::array<std::int64_t, 4> c{1, c2, c3, k};
  for (int i = 1; i <= 3; ++i) {
    const Int num = shell[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(i)];
    if (num % c[static_cast<std::size_t>(i)] != 0)
      throw InfeasibleArrayError("fractional shell size");
    shell[static_cast<std::size_t>(i + 1)] = num / c[static_cast<std::size_t>(i)];
  }
  return shell;
}

// Vertices in one colour class, which is also the number of constructed
// vectors: 1 + k2 + k4 = k + k3 for any regular bipartite split.
inline Int class_size_from_array(const IntersectionArray& ia) {
  const auto shell = shells_from_array(ia);
  const Int even = shell[0] + shell[2] + shell[4];
  const Int odd = shell[1] + shell[3];
  if (even != odd)
    throw VerificationError("colour classes of unequal size", static_cast<int>(ia.k), static_cast<int>(ia.c2));
  return even;
}

namespace detail {

// p * x
inline std::vector<Int> poly_shift(const std::vector<Int>& p) {
  std::vector<Int> r(p.size() + 1, Int(0));
  for (std::size_t i = 0; i < p.size(); ++i) r[i + 1] = p[i];
  return r;
}

}  // namespace detail

inline Spectrum spectrum_from_array(const IntersectionArray& ia) {
  shells_from_array(ia);  // range and integrality gate
  const std::int64_t k = ia.k, c2 = ia.c2, c3 = ia.c3;
  const std::int64_t th = k + c2 * (k - c3 - 1);

  // minors of x*I - T for the tridiagonal quotient matrix T:
  // D_j = x * D_{j-1} - b_{j-2} c_{j-1} D_{j-2}
  const std::array<std::int64_t, 4> b{k, k - 1, k - c2, k - c3};
  const std::array<std::int64_t, 4> c{1, c2, c3, k};
  std::vector<Int> prev{Int(1)};
  std::vector<Int> cur{Int(0), Int(1)};
  for (int j = 0; j < 4; ++j) {
    std::vector<Int> next = detail::poly_shift(cur);
    const Int m = Int(b[static_cast<std::size_t>(j)]) * Int(c[static_cast<std::size_t>(j)]);
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= m * prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }

  // x(x^2 - k^2)(x^2 - th) = x^5 - (k^2 + th)x^3 + k^2 th x
  const Int k2 = Int(k) * Int(k);
  const std::vector<Int> target{Int(0), k2 * Int(th), Int(0), -(k2 + Int(th)), Int(0), Int(1)};
  if (cur != target)
    throw VerificationError("characteristic polynomial does not factor over the expected spectrum",
                            static_cast<int>(k), static_cast<int>(c2));

  return Spectrum{k, th};
}

// Exact check that A(A^2 - theta^2 I)(A^2 - k^2 I) annihilates every
// coordinate vector.  A^2 is expanded once into row storage; each column is
// then pushed through the three factors with 64-bit accumulators.  Returns
// false and reports a witness entry (column, row) instead of throwing, so
// callers can show where the identity breaks.
inline bool verify_spectral_identity(const Graph& g, const Spectrum& sp,
                                     std::pair<std::int32_t, std::int32_t>* witness = nullptr) {
  const std::size_t n = g.vertex_count();
  const std::int64_t k = sp.k;
  const std::int64_t th = sp.theta1_squared;
  if (k > 4096) throw SizeError("valency too large for the dense identity check");
  for (std::size_t v = 0; v < n; ++v)
    if (g.adj[v].size() != static_cast<std::size_t>(k)) {
      if (witness) *witness = {static_cast<std::int32_t>(v), static_cast<std::int32_t>(v)};
      return false;
    }

  // A^2 in row-compressed form
  std::vector<std::size_t> start(n + 1, 0);
  std::vector<std::int32_t> cols;
  std::vector<std::int32_t> vals;
  {
    std::vector<std::int32_t> cnt(n, 0);
    std::vector<std::int32_t> touched;
    for (std::size_t v = 0; v < n; ++v) {
      for (const auto u : g.adj[v])
        for (const auto w : g.adj[static_cast<std::size_t>(u)]) {
          if (cnt[static_cast<std::size_t>(w)] == 0) touched.push_back(w);
          ++cnt[static_cast<std::size_t>(w)];
        }
      for (const auto w : touched) {
        cols.push_back(w);
        vals.push_back(cnt[static_cast<std::size_t>(w)]);
        cnt[static_cast<std::size_t>(w)] = 0;
      }
      touched.clear();
      start[v + 1] = cols.size();
    }
  }

  std::vector<std::int64_t> t1(n, 0), t2(n, 0), t3(n, 0);
  std::vector<char> in2(n, 0), in3(n, 0);
  std::vector<std::int32_t> s1, s2, s3;

  for (std::size_t v = 0; v < n; ++v) {
    // t1 = (A^2 - k^2 I) e_v, supported on the second neighbourhood
    for (std::size_t i = start[v]; i < start[v + 1]; ++i) {
      t1[static_cast<std::size_t>(cols[i])] = vals[i];
      s1.push_back(cols[i]);
    }
    t1[v] -= k * k;  // diagonal of A^2 is k, so v is already in s1

    // t2 = (A^2 - th I) t1
    for (const auto x : s1) {
      const std::int64_t a = t1[static_cast<std::size_t>(x)];
      if (a == 0) continue;
      for (std::size_t i = start[static_cast<std::size_t>(x)]; i < start[static_cast<std::size_t>(x) + 1]; ++i) {
        const auto w = cols[i];
        if (!in2[static_cast<std::size_t>(w)]) {
          in2[static_cast<std::size_t>(w)] = 1;
          s2.push_back(w);
        }
        t2[static_cast<std::size_t>(w)] += a * vals[i];
      }
      if (!in2[static_cast<std::size_t>(x)]) {
        in2[static_cast<std::size_t>(x)] = 1;
        s2.push_back(x);
      }
      t2[static_cast<std::size_t>(x)] -= a * th;
    }

    // t3 = A t2
    for (const auto x : s2) {
      const std::int64_t a = t2[static_cast<std::size_t>(x)];
      if (a == 0) continue;
      for (const auto u : g.adj[static_cast<std::size_t>(x)]) {
        if (!in3[static_cast<std::size_t>(u)]) {
          in3[static_cast<std::size_t>(u)] = 1;
          s3.push_back(u);
        }
        t3[static_cast<std::size_t>(u)] += a;
      }
    }

    bool ok = true;
    std::int32_t bad = -1;
    for (const auto u : s3)
      if (t3[static_cast<std::size_t>(u)] != 0) {
        ok = false;
        bad = u;
        break;
      }

    for (const auto x : s1) t1[static_cast<std::size_t>(x)] = 0;
    for (const auto x : s2) {
      t2[static_cast<std::size_t>(x)] = 0;
      in2[static_cast<std::size_t>(x)] = 0;
    }
    for (const auto x : s3) {
      t3[static_cast<std::size_t>(x)] = 0;
      in3[static_cast<std::size_t>(x)] = 0;
    }
    s1.clear();
    s2.clear();
    s3.clear();

    if (!ok) {
      if (witness) *witness = {static_cast<std::int32_t>(v), bad};
      return false;
    }
  }
  return true;
}

}  // namespace za
