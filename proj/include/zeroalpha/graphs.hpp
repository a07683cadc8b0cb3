#pragma once

/// The graph families fed into the vector construction, together with the
/// checks that justify using them: distance regularity with diameter four,
/// and an abelian action that is regular on each colour class.

#include <cstdint>
#include <functional>
#include <memory>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "zeroalpha/codes.hpp"
#include "zeroalpha/errors.hpp"
#include "zeroalpha/graph_types.hpp"
#include "zeroalpha/groups.hpp"

namespace za {

struct GroupAction {
  FiniteAbelianGroup group;
  std::function<std::int32_t(const GroupElement&, std::int32_t)> apply;
};

struct Family {
  std::string name;
  BipartiteGraph graph;
  GroupAction action;
};

// Intersection numbers of a bipartite distance-regular graph of diameter
// four; c1 = 1 and c4 = k are forced, so only three numbers are free.
struct IntersectionArray {
  std::int64_t k = 0;
  std::int64_t c2 = 0;
  std::int64_t c3 = 0;
};

// Confirms that the graph is distance regular with diameter exactly four by
// classifying every neighbourhood from every source vertex, then replays the
// shell sizes against the counting identities they must satisfy.
inline IntersectionArray verify_distance_regular(const BipartiteGraph& bg) {
  const Graph& g = bg.graph();
  const std::size_t n = g.vertex_count();
  if (n == 0) throw StructureError("empty graph");
  const std::size_t k = g.adj[0].size();
  for (std::size_t v = 0; v < n; ++v)
    if (g.adj[v].size() != k)
      throw VerificationError("graph is not regular", static_cast<int>(v), -1);

  std::vector<std::int64_t> c(5, -1);  // c[1..4]
  std::vector<std::int64_t> shell(5, -1);
  std::vector<int> dist(n);
  std::vector<std::int32_t> queue(n);

  for (std::size_t s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    queue[0] = static_cast<std::int32_t>(s);
    std::size_t head = 0, tail = 1;
    int ecc = 0;
    while (head < tail) {
      const auto u = queue[head++];
      for (const auto w : g.adj[static_cast<std::size_t>(u)]) {
        if (dist[static_cast<std::size_t>(w)] != -1) continue;
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
        ecc = std::max(ecc, dist[static_cast<std::size_t>(w)]);
        queue[tail++] = w;
      }
    }
    if (tail != n)
      throw VerificationError("source does not reach every vertex", static_cast<int>(s), -1);
    if (ecc != 4)
      throw VerificationError("eccentricity differs from four", static_cast<int>(s), ecc);

    std::vector<std::int64_t> count(5, 0);
    for (std::size_t u = 0; u < n; ++u) ++count[static_cast<std::size_t>(dist[u])];
    for (int i = 0; i <= 4; ++i) {
      if (shell[static_cast<std::size_t>(i)] == -1) shell[static_cast<std::size_t>(i)] = count[static_cast<std::size_t>(i)];
      if (shell[static_cast<std::size_t>(i)] != count[static_cast<std::size_t>(i)])
        throw VerificationError("shell sizes depend on the source", static_cast<int>(s), i);
    }

    for (std::size_t u = 0; u < n; ++u) {
      if (u == s) continue;
      const int i = dist[u];
      std::int64_t towards = 0;
      for (const auto w : g.adj[u])
        if (dist[static_cast<std::size_t>(w)] == i - 1) ++towards;
      if (c[static_cast<std::size_t>(i)] == -1) c[static_cast<std::size_t>(i)] = towards;
      if (c[static_cast<std::size_t>(i)] != towards)
        throw VerificationError("inconsistent intersection number", static_cast<int>(s), static_cast<int>(u));
    }
  }

  if (c[1] != 1 || c[4] != static_cast<std::int64_t>(k))
    throw VerificationError("boundary intersection numbers are off", static_cast<int>(c[1]), static_cast<int>(c[4]));

  // shells must reproduce from k_i * b_i = k_{i+1} * c_{i+1}
  std::int64_t expect = 1;
  for (int i = 0; i <= 3; ++i) {
    if (shell[static_cast<std::size_t>(i)] != expect)
      throw VerificationError("shell size disagrees with the counting identity", i, static_cast<int>(shell[static_cast<std::size_t>(i)]));
    const std::int64_t ci = i == 0 ? 0 : c[static_cast<std::size_t>(i)];
    const std::int64_t num = expect * (static_cast<std::int64_t>(k) - ci);
    if (num % c[static_cast<std::size_t>(i + 1)] != 0)
      throw VerificationError("shell size is not integral", i + 1, static_cast<int>(c[static_cast<std::size_t>(i + 1)]));
    expect = num / c[static_cast<std::size_t>(i + 1)];
  }
  if (shell[4] != expect)
    throw VerificationError("shell size disagrees with the counting identity", 4, static_cast<int>(shell[4]));

  return IntersectionArray{static_cast<std::int64_t>(k), c[2], c[3]};
}

// Checks that the action is by colour-preserving automorphisms and is
// regular on each colour class, then reads off the connection set
// D = { g : z^g adjacent to y }, listed in the group's element order.
inline std::vector<GroupElement> regular_action_difference_set(const BipartiteGraph& bg,
                                                               const GroupAction& act,
                                                               std::int32_t y, std::int32_t z) {
  const Graph& g = bg.graph();
  const std::size_t n = g.vertex_count();
  const FiniteAbelianGroup& grp = act.group;
  if (bg.colour_of(y) != 0 || bg.colour_of(z) != 1)
    throw ParameterError("base vertices must come from opposite colour classes");
  if (grp.order() * 2 != n) throw ActionError("group order must be half the vertex count");

  const GroupElement id = grp.identity();
  for (std::size_t v = 0; v < n; ++v)
    if (act.apply(id, static_cast<std::int32_t>(v)) != static_cast<std::int32_t>(v))
      throw ActionError("identity element moves a vertex");

  auto check_automorphism = [&](const GroupElement& e) {
    std::vector<std::int32_t> image(n);
    std::vector<char> hit(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
      const auto w = act.apply(e, static_cast<std::int32_t>(v));
      if (w < 0 || static_cast<std::size_t>(w) >= n) throw ActionError("action leaves the vertex set");
      if (hit[static_cast<std::size_t>(w)]) throw ActionError("action is not injective");
      hit[static_cast<std::size_t>(w)] = 1;
      if (g.colour[static_cast<std::size_t>(w)] != g.colour[v])
        throw ActionError("action mixes the colour classes");
      image[v] = w;
    }
    for (std::size_t v = 0; v < n; ++v)
      for (const auto w : g.adj[v])
        if (!g.has_edge(image[v], image[static_cast<std::size_t>(w)]))
          throw ActionError("action breaks an edge");
  };

  for (std::size_t i = 0; i < grp.rank(); ++i) {
    GroupElement gen = grp.identity();
    gen.coords[i] = 1;
    check_automorphism(gen);
  }
  if (grp.order() <= 512) {
    for (std::uint64_t i = 0; i < grp.order(); ++i) check_automorphism(grp.element_at(i));
  } else {
    std::mt19937 rng(0xC0FFEE);
    for (int trial = 0; trial < 64; ++trial) {
      const auto a = grp.element_at(rng() % grp.order());
      const auto b = grp.element_at(rng() % grp.order());
      const auto v = static_cast<std::int32_t>(rng() % n);
      if (act.apply(grp.add(a, b), v) != act.apply(a, act.apply(b, v)))
        throw ActionError("action is not a homomorphism");
    }
  }

  std::vector<GroupElement> elements;
  elements.reserve(grp.order());
  for (std::uint64_t i = 0; i < grp.order(); ++i) elements.push_back(grp.element_at(i));

  // regular on each class: from any base, the orbit covers its class once
  std::vector<int> stamp(n, -1);
  for (std::size_t base = 0; base < n; ++base) {
    for (const auto& e : elements) {
      const auto v = act.apply(e, static_cast<std::int32_t>(base));
      if (g.colour[static_cast<std::size_t>(v)] != g.colour[base])
        throw ActionError("orbit leaves the colour class");
      if (stamp[static_cast<std::size_t>(v)] == static_cast<int>(base))
        throw ActionError("action has a nontrivial stabiliser");
      stamp[static_cast<std::size_t>(v)] = static_cast<int>(base);
    }
  }

  std::vector<GroupElement> d;
  for (const auto& e : elements)
    if (g.has_edge(act.apply(e, z), y)) d.push_back(e);
  if (d.size() != g.adj[static_cast<std::size_t>(y)].size())
    throw ActionError("connection set size differs from the valency");
  return d;
}

// ---- family builders --------------------------------------------------------

namespace detail {

// Coset graph of a binary code whose translations by even-sum cosets supply
// the group action.  Element syndromes are cached so the action stays cheap.
inline Family family_from_cosets(std::string name, const LinearCode& code) {
  auto cg = std::make_shared<const CosetGraph>(coset_graph(code));
  auto sub = std::make_shared<const EvenCosetSubgroup>(even_coset_subgroup(code, *cg));
  auto table = std::make_shared<std::vector<std::vector<int>>>();
  table->reserve(sub->group.order());
  for (std::uint64_t i = 0; i < sub->group.order(); ++i)
    table->push_back(sub->syndrome_of(sub->group.element_at(i)));
  GroupAction act{sub->group,
                  [cg, sub, table](const GroupElement& e, std::int32_t v) {
                    return cg->translate(v, (*table)[sub->group.index_of(e)]);
                  }};
  return Family{std::move(name), BipartiteGraph::from_graph(cg->graph), std::move(act)};
}

}  // namespace detail

// Cycle on eight vertices as the two-class presentation (x, a) with
// (0, a) ~ (1, b) iff a - b is 0 or 1 mod 4, vertex index 4x + a,
// translated by Z_4 in the second coordinate.
inline Family build_8_cycle() {
  std::vector<std::vector<std::int32_t>> adj(8);
  std::vector<int> colour(8, 0);
  for (int a = 0; a < 4; ++a) {
    colour[static_cast<std::size_t>(4 + a)] = 1;
    for (int b = 0; b < 4; ++b)
      if ((a - b + 4) % 4 <= 1) {
        adj[static_cast<std::size_t>(a)].push_back(static_cast<std::int32_t>(4 + b));
        adj[static_cast<std::size_t>(4 + b)].push_back(static_cast<std::int32_t>(a));
      }
  }
  GroupAction act{make_group({4}), [](const GroupElement& e, std::int32_t v) {
                    return static_cast<std::int32_t>(v - v % 4 + (v % 4 + e.coords[0]) % 4);
                  }};
  return Family{"8-cycle", BipartiteGraph::from_graph(Graph::create(std::move(adj), std::move(colour))), std::move(act)};
}

// Binary four-dimensional cube: cosets of the zero code of length four.
inline Family build_4_cube() {
  return detail::family_from_cosets("4-cube", LinearCode::from_generator(2, 4, {}));
}

// Eight-dimensional cube with antipodes identified: cosets of the length
// eight repetition code.
inline Family build_folded_8_cube() {
  return detail::family_from_cosets("folded-8-cube", LinearCode::from_generator(2, 8, {Word(8, 1)}));
}

inline Family build_golay() {
  return detail::family_from_cosets("golay", golay_code());
}

inline Family build_kasami(const KasamiParams& kp) {
  return detail::family_from_cosets("kasami", kasami_code(kp));
}

// Ternary repetition cosets carry three classes; the bipartite member of
// the family is the subgraph induced on the classes with sum 0 and 1, in
// the original vertex order, acted on by the sum-zero class.
inline Family build_vls() {
  const auto code = vls_code();
  auto cg = std::make_shared<const CosetGraph>(coset_graph(code));
  auto sub = std::make_shared<const EvenCosetSubgroup>(even_coset_subgroup(code, *cg));

  const auto total = cg->graph.vertex_count();
  auto back = std::make_shared<std::vector<std::int32_t>>(total, -1);
  std::vector<std::int32_t> keep;
  for (std::size_t v = 0; v < total; ++v)
    if (cg->graph.colour[v] <= 1) {
      (*back)[v] = static_cast<std::int32_t>(keep.size());
      keep.push_back(static_cast<std::int32_t>(v));
    }

  std::vector<std::vector<std::int32_t>> adj(keep.size());
  std::vector<int> colour(keep.size());
  for (std::size_t v = 0; v < keep.size(); ++v) {
    colour[v] = cg->graph.colour[static_cast<std::size_t>(keep[v])];
    for (const auto w : cg->graph.adj[static_cast<std::size_t>(keep[v])])
      if ((*back)[static_cast<std::size_t>(w)] != -1)
        adj[v].push_back((*back)[static_cast<std::size_t>(w)]);
  }

  auto keep_shared = std::make_shared<std::vector<std::int32_t>>(std::move(keep));
  auto table = std::make_shared<std::vector<std::vector<int>>>();
  table->reserve(sub->group.order());
  for (std::uint64_t i = 0; i < sub->group.order(); ++i)
    table->push_back(sub->syndrome_of(sub->group.element_at(i)));
  GroupAction act{sub->group,
                  [cg, sub, table, back, keep_shared](const GroupElement& e, std::int32_t v) {
                    const auto raw = (*keep_shared)[static_cast<std::size_t>(v)];
                    return (*back)[static_cast<std::size_t>(cg->translate(raw, (*table)[sub->group.index_of(e)]))];
                  }};
  return Family{"vls", BipartiteGraph::from_graph(Graph::create(std::move(adj), std::move(colour))), std::move(act)};
}

// Lowest-index vertex of each colour class, the default base pair.
inline std::pair<std::int32_t, std::int32_t> default_base_pair(const BipartiteGraph& bg) {
  std::int32_t y = -1, z = -1;
  for (std::size_t v = 0; v < bg.vertex_count() && (y == -1 || z == -1); ++v) {
    if (bg.colour_of(static_cast<std::int32_t>(v)) == 0 && y == -1) y = static_cast<std::int32_t>(v);
    if (bg.colour_of(static_cast<std::int32_t>(v)) == 1 && z == -1) z = static_cast<std::int32_t>(v);
  }
  if (y == -1 || z == -1) throw StructureError("a colour class is empty");
  return {y, z};
}

inline void write_adjacency(std::ostream& os, const BipartiteGraph& bg) {
  const Graph& g = bg.graph();
  os << "2n=" << g.vertex_count() << " k=" << g.adj[0].size() << "\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    os << v << ":";
    for (const auto w : g.adj[v]) os << " " << w;
    os << "\n";
  }
}

}  // namespace za
