#pragma once

/// Character-sum line systems from a group acting on a bipartite graph.
///
/// Given classes Y, Z and an abelian group G regular on each, the connection
/// set D = { g : z^g ~ y } has |D| = valency k.  Restricting every character
/// of G to D and scaling by 1/sqrt(k) yields |G| unit vectors in C^k whose
/// pairwise |<u,v>|^2 land in a two-element set {0, alpha}.  Everything here
/// is exact: a vector is stored as its tuple of root-of-unity exponents.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <ostream>
#include <set>
#include <vector>

#include "zeroalpha/cyclotomic.hpp"
#include "zeroalpha/errors.hpp"
#include "zeroalpha/graphs.hpp"
#include "zeroalpha/groups.hpp"
#include "zeroalpha/numeric.hpp"

namespace za {

struct FlatVectorSet {
  std::int64_t dim = 0;  // common length k of the vectors
  int root_order = 1;    // e: entries are e-th roots of unity over sqrt(k)
  // vectors[i][j] = exponent of zeta_e in coordinate j of vector i.
  std::vector<std::vector<int>> vectors;
};

// Vectors from the characters of the acting group, restricted to the
// connection set of (y, z).  Coordinate order is the element order of the
// connection set; vector order is lex order of character exponent tuples.
inline FlatVectorSet godsil_roy(const BipartiteGraph& bg, const GroupAction& act,
                                std::int32_t y, std::int32_t z) {
  const std::vector<GroupElement> d = regular_action_difference_set(bg, act, y, z);
  const FiniteAbelianGroup& grp = act.group;

  FlatVectorSet out;
  out.dim = static_cast<std::int64_t>(d.size());
  out.root_order = grp.exponent();
  const std::vector<Character> chars = characters(grp);
  out.vectors.reserve(chars.size());
  for (const Character& ch : chars) {
    std::vector<int> row;
    row.reserve(d.size());
    for (const GroupElement& g : d) row.push_back(ch.exponent_of(grp, g));
    out.vectors.push_back(std::move(row));
  }

  // Connectivity makes differences of connection-set elements generate the
  // whole group, so distinct characters stay distinct after restriction.
  // A collision would mean the input graph lied about being connected.
  std::vector<std::vector<int>> sorted = out.vectors;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw StructureError("character collision on the connection set");
  return out;
}

// |sum_j zeta^(u_j - v_j)|^2 for vectors i and j, an exact integer.
// The squared cosine between the unit vectors is this over k^2.
inline Int pair_norm(const FlatVectorSet& s, std::size_t i, std::size_t j) {
  const int e = s.root_order;
  const std::vector<int>& u = s.vectors.at(i);
  const std::vector<int>& v = s.vectors.at(j);
  std::vector<Int> counts(static_cast<std::size_t>(e), Int(0));
  for (std::size_t t = 0; t < u.size(); ++t) {
    int r = (u[t] - v[t]) % e;
    if (r < 0) r += e;
    ++counts[static_cast<std::size_t>(r)];
  }
  return quadratic_value(counts, e).norm;
}

// All values |<u,v>|^2 over distinct pairs, as exact rationals.
inline std::set<Rat> angle_set(const FlatVectorSet& s) {
  const std::size_t n = s.vectors.size();
  const Int k2 = Int(s.dim) * Int(s.dim);
  std::set<Rat> out;
  if (s.root_order <= 2 && s.dim <= 64) {
    // Sign vectors pack into machine words: a disagreement count t gives
    // inner sum k - 2t.
    std::vector<std::uint64_t> packed(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t t = 0; t < s.vectors[i].size(); ++t)
        if (s.vectors[i][t] & 1) packed[i] |= std::uint64_t(1) << t;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        std::int64_t diff = s.dim - 2 * std::popcount(packed[i] ^ packed[j]);
        out.insert(make_rat(Int(diff) * Int(diff), k2));
      }
    return out;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      out.insert(make_rat(pair_norm(s, i, j), k2));
  return out;
}

// True when every entry is +-1, i.e. the set lives in real space.
inline bool is_real(const FlatVectorSet& s) {
  for (const std::vector<int>& row : s.vectors)
    for (int x : row)
      if ((2 * x) % s.root_order != 0) return false;
  return true;
}

// Partition the vectors into orthonormal bases (n/k groups of k pairwise
// orthogonal vectors) if one exists.  Backtracking; meant for small sets.
inline std::optional<std::vector<std::vector<int>>> mub_partition(const FlatVectorSet& s) {
  const std::size_t n = s.vectors.size();
  const std::size_t k = static_cast<std::size_t>(s.dim);
  if (n > 64) throw SizeError("basis partition search is limited to 64 vectors");
  if (k == 0 || n % k != 0) return std::nullopt;
  const std::size_t groups = n / k;

  std::vector<std::vector<bool>> orth(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      orth[i][j] = orth[j][i] = (pair_norm(s, i, j) == 0);

  std::vector<std::vector<int>> parts(groups);
  auto place = [&](auto&& self, std::size_t v) -> bool {
    if (v == n) return true;
    // Trying one empty group suffices; empty groups are interchangeable.
    bool tried_empty = false;
    for (std::vector<int>& part : parts) {
      if (part.empty()) {
        if (tried_empty) continue;
        tried_empty = true;
      }
      if (part.size() == k) continue;
      bool ok = true;
      for (int w : part)
        if (!orth[v][static_cast<std::size_t>(w)]) { ok = false; break; }
      if (!ok) continue;
      part.push_back(static_cast<int>(v));
      if (self(self, v + 1)) return true;
      part.pop_back();
    }
    return false;
  };
  if (!place(place, 0)) return std::nullopt;
  return parts;
}

// Plain-text export: header line, then one exponent row per vector.
inline void write_vectors(std::ostream& os, const FlatVectorSet& s, const Rat& alpha) {
  os << "n=" << s.vectors.size() << " k=" << s.dim << " e=" << s.root_order
     << " alpha=" << rat_str(alpha) << "\n";
  for (const std::vector<int>& row : s.vectors) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) os << ' ';
      os << row[j];
    }
    os << "\n";
  }
}

}  // namespace za
