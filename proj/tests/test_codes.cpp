#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "zeroalpha/codes.hpp"

namespace {

int weight_of(const za::Word& w) {
  int s = 0;
  for (auto x : w) s += (x != 0);
  return s;
}

bool rep_less(const za::Word& a, const za::Word& b) {
  const int wa = weight_of(a), wb = weight_of(b);
  if (wa != wb) return wa < wb;
  return a < b;
}

// Log table field oracle: pow_table[k] holds x^k for a fixed primitive x,
// worked out by hand from the defining relation and frozen here.
struct PowerField {
  std::vector<std::uint32_t> pow_table;

  std::uint32_t power(std::uint32_t a, int exp) const {
    if (a == 0) return 0;
    const int n1 = static_cast<int>(pow_table.size());
    int k = 0;
    while (pow_table[static_cast<std::size_t>(k)] != a) ++k;
    return pow_table[static_cast<std::size_t>((k * exp) % n1)];
  }
};

// x^3 = x + 1
const PowerField gf8{{1, 2, 4, 3, 6, 7, 5}};
// x^4 = x + 1
const PowerField gf16{{1, 2, 4, 8, 3, 6, 12, 11, 5, 10, 7, 14, 15, 13, 9}};

// Number of subsets S of the field of order s with |S| even,
// XOR of a over S zero and XOR of a^exp over S zero.  Field addition is
// plain XOR of bitmasks, so only the power map needs the field oracle.
std::uint64_t subset_solution_count(int s, int exp, const PowerField& f,
                                    std::set<std::uint32_t>* solutions = nullptr) {
  std::uint64_t count = 0;
  for (std::uint32_t mask = 0; mask < (1u << s); ++mask) {
    int parity = 0;
    std::uint32_t lin = 0, pw = 0;
    for (int a = 0; a < s; ++a) {
      if (!(mask >> a & 1)) continue;
      parity ^= 1;
      lin ^= static_cast<std::uint32_t>(a);
      pw ^= f.power(static_cast<std::uint32_t>(a), exp);
    }
    if (parity == 0 && lin == 0 && pw == 0) {
      ++count;
      if (solutions) solutions->insert(mask);
    }
  }
  return count;
}

std::uint32_t word_mask(const za::Word& w) {
  std::uint32_t m = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i]) m |= 1u << i;
  return m;
}

}  // namespace

TEST_CASE("fields from the modulus table are fields with primitive x") {
  for (int e = 2; e <= 8; ++e) {
    za::BinaryField f(e);
    const std::uint32_t n1 = f.order() - 1;

    std::uint32_t acc = 1;
    std::uint32_t steps = 0;
    do {
      acc = f.mul(acc, 2);
      ++steps;
    } while (acc != 1 && steps <= n1);
    INFO("degree " << e);
    CHECK(steps == n1);

    // squaring is additive in characteristic two
    std::size_t bad = 0;
    for (std::uint32_t a = 0; a < f.order(); ++a)
      for (std::uint32_t b = 0; b < f.order(); ++b) {
        const auto lhs = f.mul(a ^ b, a ^ b);
        const auto rhs = f.mul(a, a) ^ f.mul(b, b);
        if (lhs != rhs) ++bad;
      }
    CHECK(bad == 0);

    std::mt19937 rng(77u + static_cast<unsigned>(e));
    bad = 0;
    for (int trial = 0; trial < 2000; ++trial) {
      const std::uint32_t a = rng() % f.order();
      const std::uint32_t b = rng() % f.order();
      const std::uint32_t c = rng() % f.order();
      if (f.mul(a, b ^ c) != (f.mul(a, b) ^ f.mul(a, c))) ++bad;
      if (f.mul(a, f.mul(b, c)) != f.mul(f.mul(a, b), c)) ++bad;
      if (f.mul(a, b) != f.mul(b, a)) ++bad;
    }
    CHECK(bad == 0);
  }

  za::BinaryField f4(2);
  CHECK(f4.mul(2, 2) == 3);
  CHECK(f4.mul(2, 3) == 1);
  CHECK(f4.mul(3, 3) == 2);
  CHECK(f4.pow(2, 3) == 1);
}

TEST_CASE("power table oracles match their defining relations") {
  // closure and order sanity for the frozen tables themselves
  CHECK(gf8.pow_table.size() == 7);
  CHECK(gf16.pow_table.size() == 15);
  std::set<std::uint32_t> seen8(gf8.pow_table.begin(), gf8.pow_table.end());
  std::set<std::uint32_t> seen16(gf16.pow_table.begin(), gf16.pow_table.end());
  CHECK(seen8.size() == 7);
  CHECK(seen16.size() == 15);
  // x * x^6 = 1 and x * x^14 = 1: multiplying by x is shift, reduce by the relation
  for (std::size_t k = 0; k < 7; ++k) {
    std::uint32_t v = gf8.pow_table[k] << 1;
    if (v & 8) v ^= 0b1011;  // x^3 -> x + 1
    CHECK(v == gf8.pow_table[(k + 1) % 7]);
  }
  for (std::size_t k = 0; k < 15; ++k) {
    std::uint32_t v = gf16.pow_table[k] << 1;
    if (v & 16) v ^= 0b10011;  // x^4 -> x + 1
    CHECK(v == gf16.pow_table[(k + 1) % 15]);
  }
}

TEST_CASE("kasami parameter validation") {
  CHECK_THROWS_AS(za::kasami_code({3, 2, 0, 0}), za::ParameterError);
  CHECK_THROWS_AS(za::kasami_code({0, 2, 0, 0}), za::ParameterError);
  CHECK_THROWS_AS(za::kasami_code({2, 3, 0, 0}), za::ParameterError);
  CHECK_THROWS_AS(za::kasami_code({2, 1, 1, 2}), za::ParameterError);  // m > j
  CHECK_THROWS_AS(za::kasami_code({2, 1, 4, 3}), za::ParameterError);  // gcd(3, 9) = 3
  CHECK_THROWS_AS(za::kasami_code({2, 1, 0, 0}), za::ParameterError);
  CHECK_THROWS_AS(za::kasami_code({2, 2, 1, 0}), za::ParameterError);
  CHECK_THROWS_AS(za::kasami_code({4, 1, 2, 1}), za::ParameterError);  // field order 4^5
  CHECK_NOTHROW(za::kasami_code({2, 1, 1, 1}));
  CHECK_NOTHROW(za::kasami_code({4, 2, 0, 0}));
}

TEST_CASE("small kasami codes against subset enumeration") {
  SECTION("field order 4, t = 2: only the empty subset") {
    // cubes in the order-4 field: 1^3 = 1, 2^3 = 3*2 = 1, 3^3 = 2*3 = 1
    const std::uint32_t cube[4] = {0, 1, 1, 1};
    std::uint64_t count = 0;
    for (std::uint32_t mask = 0; mask < 16; ++mask) {
      int parity = 0;
      std::uint32_t lin = 0, pw = 0;
      for (int a = 0; a < 4; ++a) {
        if (!(mask >> a & 1)) continue;
        parity ^= 1;
        lin ^= static_cast<std::uint32_t>(a);
        pw ^= cube[a];
      }
      if (parity == 0 && lin == 0 && pw == 0) ++count;
    }
    CHECK(count == 1);

    auto code = za::kasami_code({2, 2, 0, 0});
    CHECK(code.length == 4);
    CHECK(code.dimension() == 0);
    CHECK(code.redundancy() == 4);
  }

  SECTION("field order 8, t = 2: the repetition code") {
    std::set<std::uint32_t> sols;
    CHECK(subset_solution_count(8, 3, gf8, &sols) == 2);
    CHECK(sols == std::set<std::uint32_t>{0, 0xFF});

    auto code = za::kasami_code({2, 1, 1, 1});
    CHECK(code.length == 8);
    CHECK(code.dimension() == 1);
    std::set<std::uint32_t> words;
    code.for_each_codeword([&](const za::Word& w) { words.insert(word_mask(w)); });
    CHECK(words == sols);
  }

  SECTION("field order 16, t = 4: dimension nine") {
    CHECK(subset_solution_count(16, 5, gf16) == 512);

    auto code = za::kasami_code({4, 2, 0, 0});
    CHECK(code.length == 16);
    CHECK(code.dimension() == 9);
    CHECK(code.redundancy() == 7);

    // every codeword passes the defining conditions under the oracle field
    std::size_t bad = 0, total = 0;
    code.for_each_codeword([&](const za::Word& w) {
      ++total;
      int parity = 0;
      std::uint32_t lin = 0, pw = 0;
      for (int a = 0; a < 16; ++a) {
        if (!w[static_cast<std::size_t>(a)]) continue;
        parity ^= 1;
        lin ^= static_cast<std::uint32_t>(a);
        pw ^= gf16.power(static_cast<std::uint32_t>(a), 5);
      }
      if (parity != 0 || lin != 0 || pw != 0) ++bad;
    });
    CHECK(total == 512);
    CHECK(bad == 0);
  }

  SECTION("field order 32: both exponents give redundancy eleven") {
    auto c2 = za::kasami_code({2, 1, 2, 1});
    CHECK(c2.length == 32);
    CHECK(c2.dimension() == 21);
    CHECK(c2.redundancy() == 11);
    auto c4 = za::kasami_code({2, 1, 2, 2});
    CHECK(c4.dimension() == 21);
    CHECK(c4.redundancy() == 11);
  }
}

TEST_CASE("golay code invariants") {
  auto code = za::golay_code();
  CHECK(code.dimension() == 12);
  CHECK(code.redundancy() == 12);

  // self dual: generator rows pairwise orthogonal and dim = length / 2
  int bad = 0;
  for (const auto& a : code.generator)
    for (const auto& b : code.generator) {
      int dot = 0;
      for (int i = 0; i < 24; ++i) dot += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(i)];
      if (dot % 2 != 0) ++bad;
    }
  CHECK(bad == 0);

  CHECK(code.min_weight() == 8);

  std::map<int, int> dist;
  code.for_each_codeword([&](const za::Word& w) { ++dist[weight_of(w)]; });
  const std::map<int, int> expected{{0, 1}, {8, 759}, {12, 2576}, {16, 759}, {24, 1}};
  CHECK(dist == expected);

  za::Word ones(24, 1);
  CHECK(code.contains(ones));
  za::Word corrupt = ones;
  corrupt[5] = 0;
  CHECK(!code.contains(corrupt));

  // parity rows annihilate generator rows
  bad = 0;
  for (const auto& h : code.parity)
    for (const auto& g : code.generator) {
      int dot = 0;
      for (int i = 0; i < 24; ++i) dot += h[static_cast<std::size_t>(i)] * g[static_cast<std::size_t>(i)];
      if (dot % 2 != 0) ++bad;
    }
  CHECK(bad == 0);
}

TEST_CASE("golay coset graph") {
  auto code = za::golay_code();
  auto cg = za::coset_graph(code);

  REQUIRE(cg.graph.vertex_count() == 4096);
  CHECK(cg.syndrome_length == 12);
  CHECK(cg.graph.connected());

  std::size_t wrong_degree = 0;
  for (const auto& nb : cg.graph.adj)
    if (nb.size() != 24) ++wrong_degree;
  CHECK(wrong_degree == 0);

  std::map<int, int> classes;
  for (int c : cg.graph.colour) ++classes[c];
  CHECK(classes == std::map<int, int>{{0, 2048}, {1, 2048}});

  std::map<int, int> leader_weights;
  for (const auto& l : cg.leader) ++leader_weights[weight_of(l)];
  const std::map<int, int> expected{{0, 1}, {1, 24}, {2, 276}, {3, 2024}, {4, 1771}};
  CHECK(leader_weights == expected);

  // vertex 0 carries the zero coset
  CHECK(weight_of(cg.leader[0]) == 0);
  CHECK(cg.vertex_of_syndrome(std::vector<int>(12, 0)) == 0);

  // each sampled leader is the (weight, lex) minimum of its whole coset
  std::size_t not_minimal = 0, moved = 0;
  for (std::size_t v = 0; v < 4096; v += 127) {
    const auto& l = cg.leader[v];
    const auto s = cg.syndrome[v];
    code.for_each_codeword([&](const za::Word& c) {
      za::Word member(24);
      for (int i = 0; i < 24; ++i)
        member[static_cast<std::size_t>(i)] =
            static_cast<std::uint8_t>(l[static_cast<std::size_t>(i)] ^ c[static_cast<std::size_t>(i)]);
      if (rep_less(member, l)) ++not_minimal;
      if (code.syndrome(member) != s) ++moved;
    });
  }
  CHECK(not_minimal == 0);
  CHECK(moved == 0);
}

TEST_CASE("ternary repetition cosets") {
  auto code = za::vls_code();
  CHECK(code.p == 3);
  CHECK(code.dimension() == 1);
  CHECK(code.min_weight() == 6);

  auto cg = za::coset_graph(code);
  REQUIRE(cg.graph.vertex_count() == 243);
  CHECK(cg.graph.connected());

  std::map<int, int> classes;
  for (int c : cg.graph.colour) ++classes[c];
  CHECK(classes == std::map<int, int>{{0, 81}, {1, 81}, {2, 81}});

  std::size_t wrong_degree = 0;
  for (const auto& nb : cg.graph.adj)
    if (nb.size() != 12) ++wrong_degree;
  CHECK(wrong_degree == 0);

  // exhaustive canonicalization oracle: a coset of the repetition code is
  // {w, w+1, w+2}, its representative the (weight, lex) smallest of the three
  std::size_t mismatches = 0;
  za::Word w(6, 0);
  for (int it = 0; it < 729; ++it) {
    za::Word best = w;
    for (int shift = 1; shift < 3; ++shift) {
      za::Word cand(6);
      for (int i = 0; i < 6; ++i)
        cand[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>((w[static_cast<std::size_t>(i)] + shift) % 3);
      if (rep_less(cand, best)) best = cand;
    }
    const auto v = cg.vertex_of_syndrome(code.syndrome(w));
    if (cg.leader[static_cast<std::size_t>(v)] != best) ++mismatches;
    int i = 5;
    while (i >= 0 && w[static_cast<std::size_t>(i)] == 2) w[static_cast<std::size_t>(i--)] = 0;
    if (i >= 0) ++w[static_cast<std::size_t>(i)];
  }
  CHECK(mismatches == 0);
}

TEST_CASE("trivial code cosets form a hypercube") {
  auto code = za::LinearCode::from_generator(2, 4, {});
  CHECK(code.dimension() == 0);
  CHECK(code.min_weight() == 0);
  auto cg = za::coset_graph(code);
  REQUIRE(cg.graph.vertex_count() == 16);
  for (std::int32_t v = 0; v < 16; ++v) {
    std::vector<std::int32_t> expect{v ^ 1, v ^ 2, v ^ 4, v ^ 8};
    std::sort(expect.begin(), expect.end());
    CHECK(cg.graph.adj[static_cast<std::size_t>(v)] == expect);
  }
}

TEST_CASE("even coset subgroups") {
  SECTION("golay: elementary abelian of order 2048 on one colour class") {
    auto code = za::golay_code();
    auto cg = za::coset_graph(code);
    auto sub = za::even_coset_subgroup(code, cg);
    CHECK(sub.group.order() == 2048);
    CHECK(za::is_elementary_2(sub.group));

    std::set<std::int32_t> vertices;
    std::size_t odd = 0;
    for (std::uint64_t i = 0; i < sub.group.order(); ++i) {
      const auto v = sub.vertex_of(cg, sub.group.element_at(i));
      vertices.insert(v);
      if (cg.graph.colour[static_cast<std::size_t>(v)] != 0) ++odd;
    }
    CHECK(vertices.size() == 2048);
    CHECK(odd == 0);
    CHECK(sub.vertex_of(cg, sub.group.identity()) == 0);

    std::mt19937 rng(123u);
    std::size_t bad = 0;
    for (int trial = 0; trial < 200; ++trial) {
      const auto a = sub.group.element_at(rng() % sub.group.order());
      const auto b = sub.group.element_at(rng() % sub.group.order());
      const auto sa = sub.syndrome_of(a);
      const auto sb = sub.syndrome_of(b);
      auto sum = sub.syndrome_of(sub.group.add(a, b));
      for (std::size_t t = 0; t < sum.size(); ++t)
        if (sum[t] != (sa[t] + sb[t]) % 2) ++bad;
      if (cg.translate(sub.vertex_of(cg, a), sb) != sub.vertex_of(cg, sub.group.add(a, b))) ++bad;
    }
    CHECK(bad == 0);
  }

  SECTION("ternary repetition: order 81") {
    auto code = za::vls_code();
    auto cg = za::coset_graph(code);
    auto sub = za::even_coset_subgroup(code, cg);
    CHECK(sub.group.order() == 81);
    CHECK(sub.group.exponent() == 3);

    std::set<std::int32_t> vertices;
    std::size_t off_class = 0;
    for (std::uint64_t i = 0; i < sub.group.order(); ++i) {
      const auto v = sub.vertex_of(cg, sub.group.element_at(i));
      vertices.insert(v);
      if (cg.graph.colour[static_cast<std::size_t>(v)] != 0) ++off_class;
    }
    CHECK(vertices.size() == 81);
    CHECK(off_class == 0);
  }

  SECTION("kasami fields of order 4 and 16") {
    auto c1 = za::kasami_code({2, 2, 0, 0});
    auto g1 = za::coset_graph(c1);
    CHECK(za::even_coset_subgroup(c1, g1).group.order() == 8);

    auto c2 = za::kasami_code({4, 2, 0, 0});
    auto g2 = za::coset_graph(c2);
    CHECK(za::even_coset_subgroup(c2, g2).group.order() == 64);
  }
}

TEST_CASE("coset graph guards") {
  // a weight-one codeword collapses adjacency
  auto bad = za::LinearCode::from_generator(2, 3, {za::Word{1, 0, 0}});
  CHECK_THROWS_AS(za::coset_graph(bad), za::DegenerateCodeError);

  // odd-sum generator: cosets exist but the subgroup split is refused
  auto odd = za::LinearCode::from_generator(2, 3, {za::Word{1, 1, 1}});
  auto odd_cg = za::coset_graph(odd);
  CHECK(odd_cg.graph.vertex_count() == 4);
  CHECK_THROWS_AS(za::even_coset_subgroup(odd, odd_cg), za::StructureError);

  // coset count is capped at 2^16 inclusive
  auto wide = za::LinearCode::from_generator(2, 17, {});
  CHECK_THROWS_AS(za::coset_graph(wide), za::SizeError);
  auto edge = za::LinearCode::from_generator(2, 16, {});
  auto edge_cg = za::coset_graph(edge);
  CHECK(edge_cg.graph.vertex_count() == 65536);
  std::size_t wrong_degree = 0;
  for (const auto& nb : edge_cg.graph.adj)
    if (nb.size() != 16) ++wrong_degree;
  CHECK(wrong_degree == 0);
}
