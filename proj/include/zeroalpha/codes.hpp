#pragma once

/// Linear codes over small prime fields and their coset graphs.
///
/// A code is held through two reduced bases: `generator` spans the code and
/// `parity` spans its dual, both in reduced row echelon form.  The parity
/// basis always has full row rank, so syndromes identify cosets bijectively
/// and the coset space is Z_p^r with r = parity.size().

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "zeroalpha/errors.hpp"
#include "zeroalpha/fields.hpp"
#include "zeroalpha/graph_types.hpp"
#include "zeroalpha/groups.hpp"
#include "zeroalpha/linalg.hpp"

namespace za {

using Word = std::vector<std::uint8_t>;

class LinearCode {
 public:
  int p = 0;
  int length = 0;
  std::vector<Word> generator;  // rref basis of the code
  std::vector<Word> parity;     // rref basis of the dual, full row rank

  static LinearCode from_generator(int p, int length, std::vector<Word> rows) {
    validate_rows(p, length, rows);
    LinearCode c;
    c.p = p;
    c.length = length;
    FpRref g = fp_rref(std::move(rows), p);
    c.generator = std::move(g.rows);
    c.parity = fp_rref(fp_nullspace(c.generator, static_cast<std::size_t>(length), p), p).rows;
    return c;
  }

  static LinearCode from_parity(int p, int length, std::vector<Word> rows) {
    validate_rows(p, length, rows);
    LinearCode c;
    c.p = p;
    c.length = length;
    FpRref h = fp_rref(std::move(rows), p);
    c.parity = std::move(h.rows);
    c.generator = fp_rref(fp_nullspace(c.parity, static_cast<std::size_t>(length), p), p).rows;
    return c;
  }

  int dimension() const { return static_cast<int>(generator.size()); }
  int redundancy() const { return static_cast<int>(parity.size()); }

  std::vector<int> syndrome(const Word& word) const {
    if (word.size() != static_cast<std::size_t>(length)) throw ParameterError("word length mismatch");
    std::vector<int> s(parity.size(), 0);
    for (std::size_t t = 0; t < parity.size(); ++t) {
      int acc = 0;
      for (int i = 0; i < length; ++i) acc += parity[t][static_cast<std::size_t>(i)] * word[static_cast<std::size_t>(i)];
      s[t] = acc % p;
    }
    return s;
  }

  bool contains(const Word& word) const {
    auto s = syndrome(word);
    return std::all_of(s.begin(), s.end(), [](int x) { return x == 0; });
  }

  // Visits every codeword exactly once, the zero word first.
  template <class F>
  void for_each_codeword(F&& f) const {
    const int dim = dimension();
    std::uint64_t count = 1;
    for (int t = 0; t < dim; ++t) {
      count *= static_cast<std::uint64_t>(p);
      if (count > (1u << 20)) throw SizeError("codeword enumeration too large");
    }
    std::vector<int> coeff(static_cast<std::size_t>(dim), 0);
    Word word(static_cast<std::size_t>(length), 0);
    while (true) {
      f(std::as_const(word));
      int t = dim - 1;
      while (t >= 0 && coeff[static_cast<std::size_t>(t)] == p - 1) --t;
      if (t < 0) break;
      // incrementing digit t adds one copy of generator row t and strips
      // p-1 copies of every lower row
      add_row(word, generator[static_cast<std::size_t>(t)], 1);
      ++coeff[static_cast<std::size_t>(t)];
      for (int u = t + 1; u < dim; ++u) {
        add_row(word, generator[static_cast<std::size_t>(u)], 1);
        coeff[static_cast<std::size_t>(u)] = 0;
      }
    }
  }

  // Smallest weight of a nonzero codeword; 0 when the code is {0}.
  int min_weight() const {
    int best = 0;
    for_each_codeword([&](const Word& w) {
      int wt = 0;
      for (auto x : w) wt += (x != 0);
      if (wt > 0 && (best == 0 || wt < best)) best = wt;
    });
    return best;
  }

 private:
  static void validate_rows(int p, int length, const std::vector<Word>& rows) {
    if (p != 2 && p != 3) throw ParameterError("field must be F_2 or F_3");
    if (length < 1) throw ParameterError("code length must be positive");
    for (const auto& r : rows) {
      if (r.size() != static_cast<std::size_t>(length)) throw ParameterError("generator row length mismatch");
      for (auto x : r)
        if (x >= p) throw ParameterError("entry outside field");
    }
  }

  void add_row(Word& word, const Word& row, int times) const {
    for (int i = 0; i < length; ++i)
      word[static_cast<std::size_t>(i)] =
          static_cast<std::uint8_t>((word[static_cast<std::size_t>(i)] + times * row[static_cast<std::size_t>(i)]) % p);
  }
};

// Binary [24,12] code generated by [I | A]; every weight is divisible by 4.
inline LinearCode golay_code() {
  static const int A[12][12] = {
      {0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
      {1, 1, 1, 0, 1, 1, 1, 0, 0, 0, 1, 0},
      {1, 1, 0, 1, 1, 1, 0, 0, 0, 1, 0, 1},
      {1, 0, 1, 1, 1, 0, 0, 0, 1, 0, 1, 1},
      {1, 1, 1, 1, 0, 0, 0, 1, 0, 1, 1, 0},
      {1, 1, 1, 0, 0, 0, 1, 0, 1, 1, 0, 1},
      {1, 1, 0, 0, 0, 1, 0, 1, 1, 0, 1, 1},
      {1, 0, 0, 0, 1, 0, 1, 1, 0, 1, 1, 1},
      {1, 0, 0, 1, 0, 1, 1, 0, 1, 1, 1, 0},
      {1, 0, 1, 0, 1, 1, 0, 1, 1, 1, 0, 0},
      {1, 1, 0, 1, 1, 0, 1, 1, 1, 0, 0, 0},
      {1, 0, 1, 1, 0, 1, 1, 1, 0, 0, 0, 1},
  };
  std::vector<Word> rows(12, Word(24, 0));
  for (int i = 0; i < 12; ++i) {
    rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    for (int j = 0; j < 12; ++j)
      rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(12 + j)] = static_cast<std::uint8_t>(A[i][j]);
  }
  return LinearCode::from_generator(2, 24, std::move(rows));
}

// Ternary repetition code of length 6.
inline LinearCode vls_code() {
  return LinearCode::from_generator(3, 6, {Word(6, 1)});
}

// Parameters for the two binary Kasami families.  Both live inside
// F_2^F for a field F of order s and consist of the even-weight words x
// with sum x_a * a = 0 and sum x_a * a^(t+1) = 0:
//   variant 1: s = q^(2j+1), t = q^m with 1 <= m <= j and gcd(m, 2j+1) = 1
//   variant 2: s = q^2,      t = q
// where q is a power of two.
struct KasamiParams {
  int q = 0;
  int variant = 0;  // 1 or 2
  int j = 0;        // variant 1 only
  int m = 0;        // variant 1 only
};

namespace detail {
inline bool power_of_two(int x) { return x >= 2 && (x & (x - 1)) == 0; }
}  // namespace detail

inline LinearCode kasami_code(const KasamiParams& kp) {
  if (!detail::power_of_two(kp.q)) throw ParameterError("kasami: q must be a power of two, q >= 2");
  std::uint64_t s = 0, t = 0;
  if (kp.variant == 1) {
    if (kp.j < 1) throw ParameterError("kasami: variant 1 needs j >= 1");
    if (kp.m < 1 || kp.m > kp.j) throw ParameterError("kasami: variant 1 needs 1 <= m <= j");
    if (std::gcd(kp.m, 2 * kp.j + 1) != 1) throw ParameterError("kasami: m and 2j+1 must be coprime");
    s = 1;
    for (int i = 0; i < 2 * kp.j + 1; ++i) {
      s *= static_cast<std::uint64_t>(kp.q);
      if (s > 256) throw ParameterError("kasami: field order above 2^8");
    }
    t = 1;
    for (int i = 0; i < kp.m; ++i) t *= static_cast<std::uint64_t>(kp.q);
  } else if (kp.variant == 2) {
    if (kp.j != 0 || kp.m != 0) throw ParameterError("kasami: variant 2 takes only q");
    s = static_cast<std::uint64_t>(kp.q) * static_cast<std::uint64_t>(kp.q);
    if (s > 256) throw ParameterError("kasami: field order above 2^8");
    t = static_cast<std::uint64_t>(kp.q);
  } else {
    throw ParameterError("kasami: variant must be 1 or 2");
  }

  int e = 0;
  while ((1u << (e + 1)) <= s) ++e;
  BinaryField field(e);

  // One parity row for the weight condition, then e rows for each of the
  // two field-valued conditions, one row per bit.  The stack may be rank
  // deficient (a^(t+1) can land in a subfield); from_parity compresses it.
  std::vector<Word> h(static_cast<std::size_t>(1 + 2 * e), Word(static_cast<std::size_t>(s), 0));
  for (std::uint32_t a = 0; a < s; ++a) {
    h[0][a] = 1;
    const std::uint32_t b = field.pow(a, t + 1);
    for (int bit = 0; bit < e; ++bit) {
      h[static_cast<std::size_t>(1 + bit)][a] = static_cast<std::uint8_t>((a >> bit) & 1);
      h[static_cast<std::size_t>(1 + e + bit)][a] = static_cast<std::uint8_t>((b >> bit) & 1);
    }
  }
  return LinearCode::from_parity(2, static_cast<int>(s), std::move(h));
}

// Cosets of a code as graph vertices; two cosets are adjacent when they
// differ by a weight-one word.  Vertices are ordered by the lex order of
// their canonical representatives, where the representative of a coset is
// its (weight, lex) minimal member.
struct CosetGraph {
  Graph graph;
  int p = 0;
  int syndrome_length = 0;
  std::vector<Word> leader;                      // canonical member per vertex
  std::vector<std::vector<int>> syndrome;        // coset label per vertex
  std::vector<std::int32_t> vertex_by_syndrome;  // indexed by syndrome_rank

  std::int64_t syndrome_rank(const std::vector<int>& s) const {
    std::int64_t ix = 0;
    for (int d : s) ix = ix * p + d;
    return ix;
  }

  std::int32_t vertex_of_syndrome(const std::vector<int>& s) const {
    if (static_cast<int>(s.size()) != syndrome_length) throw ParameterError("syndrome length mismatch");
    return vertex_by_syndrome[static_cast<std::size_t>(syndrome_rank(s))];
  }

  // Vertex reached from v by adding delta to its coset label.
  std::int32_t translate(std::int32_t v, const std::vector<int>& delta) const {
    const auto& s = syndrome[static_cast<std::size_t>(v)];
    std::vector<int> u(s.size());
    for (std::size_t t = 0; t < s.size(); ++t) u[t] = (s[t] + delta[t]) % p;
    return vertex_of_syndrome(u);
  }
};

inline CosetGraph coset_graph(const LinearCode& code) {
  const int p = code.p;
  const int n = code.length;
  const int r = code.redundancy();

  std::int64_t cosets = 1;
  for (int i = 0; i < r; ++i) {
    cosets *= p;
    if (cosets > 65536) throw SizeError("more than 2^16 cosets");
  }

  // column i of the parity basis = syndrome of the i-th unit word
  std::vector<std::vector<int>> unit(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(r)));
  for (int i = 0; i < n; ++i) {
    bool zero = true;
    for (int t = 0; t < r; ++t) {
      unit[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)] =
          code.parity[static_cast<std::size_t>(t)][static_cast<std::size_t>(i)];
      zero = zero && unit[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)] == 0;
    }
    if (zero) throw DegenerateCodeError("code contains a weight-one word");
  }

  auto rank_of = [&](const std::vector<int>& s) {
    std::int64_t ix = 0;
    for (int d : s) ix = ix * p + d;
    return ix;
  };

  // canonical representatives by layered search: weight first, then lex
  std::vector<Word> rep(static_cast<std::size_t>(cosets));
  std::vector<int> rep_weight(static_cast<std::size_t>(cosets), -1);
  std::int64_t found = 0;
  for (int w = 0; w <= n && found < cosets; ++w) {
    std::vector<int> supp(static_cast<std::size_t>(w));
    std::iota(supp.begin(), supp.end(), 0);
    while (true) {
      std::vector<std::uint8_t> val(static_cast<std::size_t>(w), 1);
      while (true) {
        std::vector<int> s(static_cast<std::size_t>(r), 0);
        for (int idx = 0; idx < w; ++idx)
          for (int tt = 0; tt < r; ++tt)
            s[static_cast<std::size_t>(tt)] =
                (s[static_cast<std::size_t>(tt)] +
                 val[static_cast<std::size_t>(idx)] * unit[static_cast<std::size_t>(supp[static_cast<std::size_t>(idx)])]
                                                          [static_cast<std::size_t>(tt)]) %
                p;
        const auto ix = static_cast<std::size_t>(rank_of(s));
        if (rep_weight[ix] == -1 || rep_weight[ix] == w) {
          Word word(static_cast<std::size_t>(n), 0);
          for (int idx = 0; idx < w; ++idx)
            word[static_cast<std::size_t>(supp[static_cast<std::size_t>(idx)])] = val[static_cast<std::size_t>(idx)];
          if (rep_weight[ix] == -1) {
            rep[ix] = std::move(word);
            rep_weight[ix] = w;
            ++found;
          } else if (word < rep[ix]) {
            rep[ix] = std::move(word);
          }
        }
        int idx = w - 1;
        while (idx >= 0 && val[static_cast<std::size_t>(idx)] == p - 1) --idx;
        if (idx < 0) break;
        ++val[static_cast<std::size_t>(idx)];
        for (int u2 = idx + 1; u2 < w; ++u2) val[static_cast<std::size_t>(u2)] = 1;
      }
      // next support combination in lex order
      int idx = w - 1;
      while (idx >= 0 && supp[static_cast<std::size_t>(idx)] == n - w + idx) --idx;
      if (idx < 0) break;
      ++supp[static_cast<std::size_t>(idx)];
      for (int u2 = idx + 1; u2 < w; ++u2)
        supp[static_cast<std::size_t>(u2)] = supp[static_cast<std::size_t>(u2 - 1)] + 1;
    }
  }
  if (found < cosets) throw StructureError("coset leader search did not cover all cosets");

  std::vector<std::int64_t> order(static_cast<std::size_t>(cosets));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::int64_t a, std::int64_t b) { return rep[static_cast<std::size_t>(a)] < rep[static_cast<std::size_t>(b)]; });

  CosetGraph cg;
  cg.p = p;
  cg.syndrome_length = r;
  cg.leader.resize(static_cast<std::size_t>(cosets));
  cg.syndrome.resize(static_cast<std::size_t>(cosets));
  cg.vertex_by_syndrome.assign(static_cast<std::size_t>(cosets), -1);
  for (std::int64_t v = 0; v < cosets; ++v) {
    const auto ix = static_cast<std::size_t>(order[static_cast<std::size_t>(v)]);
    cg.leader[static_cast<std::size_t>(v)] = rep[ix];
    cg.syndrome[static_cast<std::size_t>(v)] = code.syndrome(rep[ix]);
    cg.vertex_by_syndrome[ix] = static_cast<std::int32_t>(v);
  }

  std::vector<std::vector<std::int32_t>> adj(static_cast<std::size_t>(cosets));
  std::vector<int> colour(static_cast<std::size_t>(cosets));
  for (std::int64_t v = 0; v < cosets; ++v) {
    const auto& s = cg.syndrome[static_cast<std::size_t>(v)];
    auto& nb = adj[static_cast<std::size_t>(v)];
    for (int i = 0; i < n; ++i)
      for (int c = 1; c < p; ++c) {
        std::vector<int> u(static_cast<std::size_t>(r));
        for (int tt = 0; tt < r; ++tt)
          u[static_cast<std::size_t>(tt)] =
              (s[static_cast<std::size_t>(tt)] + c * unit[static_cast<std::size_t>(i)][static_cast<std::size_t>(tt)]) % p;
        nb.push_back(cg.vertex_by_syndrome[static_cast<std::size_t>(rank_of(u))]);
      }
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    int sum = 0;
    for (auto x : cg.leader[static_cast<std::size_t>(v)]) sum += x;
    colour[static_cast<std::size_t>(v)] = sum % p;
  }
  cg.graph = Graph::create(std::move(adj), std::move(colour));
  if (!cg.graph.connected()) throw StructureError("coset graph is disconnected");
  return cg;
}

// The index-p subgroup of the coset space cut out by the coordinate-sum
// functional.  Only meaningful when every codeword has coordinate sum zero,
// so that the functional descends to cosets; in the rref parity basis it
// then reads off as the plain digit sum of the syndrome.
struct EvenCosetSubgroup {
  FiniteAbelianGroup group;  // Z_p^(r-1)
  int p = 0;
  std::vector<std::vector<int>> basis;  // syndrome of each group generator

  std::vector<int> syndrome_of(const GroupElement& g) const {
    std::vector<int> s(basis.empty() ? 0 : basis[0].size(), 0);
    for (std::size_t f = 0; f < basis.size(); ++f)
      for (std::size_t t = 0; t < s.size(); ++t)
        s[t] = (s[t] + g.coords[f] * basis[f][t]) % p;
    return s;
  }

  std::int32_t vertex_of(const CosetGraph& cg, const GroupElement& g) const {
    return cg.vertex_of_syndrome(syndrome_of(g));
  }
};

inline EvenCosetSubgroup even_coset_subgroup(const LinearCode& code, const CosetGraph& cg) {
  for (const auto& row : code.generator) {
    int sum = 0;
    for (auto x : row) sum += x;
    if (sum % code.p != 0) throw StructureError("code has a generator with nonzero coordinate sum");
  }
  // with even generators the rref parity rows must sum to the all-ones word
  for (int i = 0; i < code.length; ++i) {
    int sum = 0;
    for (const auto& row : code.parity) sum += row[static_cast<std::size_t>(i)];
    if (sum % code.p != 1) throw StructureError("parity basis does not carry the weight functional");
  }
  const int r = cg.syndrome_length;
  if (r < 2) throw StructureError("coset space too small to split");

  // kernel of the digit-sum functional on Z_p^r
  std::vector<Word> ones(1, Word(static_cast<std::size_t>(r), 1));
  auto null_basis = fp_nullspace(ones, static_cast<std::size_t>(r), code.p);
  EvenCosetSubgroup sub{make_group(std::vector<int>(static_cast<std::size_t>(r - 1), code.p)), code.p, {}};
  for (const auto& b : null_basis) sub.basis.emplace_back(b.begin(), b.end());
  return sub;
}

}  // namespace za
