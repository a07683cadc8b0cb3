#pragma once

/// Finite abelian groups in invariant-factor-style presentation
/// G = Z_{d_1} x ... x Z_{d_r}, elements as coordinate tuples.
///
/// Characters are indexed by the same coordinate space: the character with
/// exponent tuple h sends g to zeta_e^E(h,g) where e = exponent(G) and
///   E(h, g) = sum_i h_i * g_i * (e / d_i)  (mod e).
/// Every character arises exactly once this way and the map h -> chi_h is a
/// group isomorphism onto the dual.

#include <cstdint>
#include <numeric>
#include <vector>

#include "zeroalpha/cyclotomic.hpp"
#include "zeroalpha/errors.hpp"

namespace za {

struct GroupElement {
  std::vector<int> coords;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

class FiniteAbelianGroup {
 public:
  explicit FiniteAbelianGroup(std::vector<int> cyclic_orders)
      : orders_(std::move(cyclic_orders)) {
    if (orders_.empty()) throw InvalidGroupError("empty cyclic-order list");
    order_ = 1;
    std::uint64_t exp = 1;
    for (int d : orders_) {
      if (d < 2) throw InvalidGroupError("cyclic order < 2");
      if (order_ > (std::uint64_t(1) << 62) / static_cast<std::uint64_t>(d))
        throw InvalidGroupError("group order overflows");
      order_ *= static_cast<std::uint64_t>(d);
      exp = std::lcm(exp, static_cast<std::uint64_t>(d));
      if (exp > (std::uint64_t(1) << 30)) throw InvalidGroupError("group exponent overflows");
    }
    exponent_ = static_cast<int>(exp);
  }

  const std::vector<int>& cyclic_orders() const { return orders_; }
  std::size_t rank() const { return orders_.size(); }
  std::uint64_t order() const { return order_; }
  int exponent() const { return exponent_; }

  GroupElement identity() const { return {std::vector<int>(orders_.size(), 0)}; }

  bool contains(const GroupElement& g) const {
    if (g.coords.size() != orders_.size()) return false;
    for (std::size_t i = 0; i < orders_.size(); ++i)
      if (g.coords[i] < 0 || g.coords[i] >= orders_[i]) return false;
    return true;
  }

  void require(const GroupElement& g) const {
    if (!contains(g)) throw InvalidGroupError("element outside group");
  }

  // Lexicographic rank of the coordinate tuple (first coordinate most
  // significant); element_at is its inverse.  Elements enumerate in lex order.
  std::uint64_t index_of(const GroupElement& g) const {
    require(g);
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < orders_.size(); ++i)
      idx = idx * static_cast<std::uint64_t>(orders_[i]) + static_cast<std::uint64_t>(g.coords[i]);
    return idx;
  }

  GroupElement element_at(std::uint64_t idx) const {
    if (idx >= order_) throw InvalidGroupError("element index out of range");
    std::vector<int> c(orders_.size());
    for (std::size_t i = orders_.size(); i-- > 0;) {
      c[i] = static_cast<int>(idx % static_cast<std::uint64_t>(orders_[i]));
      idx /= static_cast<std::uint64_t>(orders_[i]);
    }
    return {std::move(c)};
  }

  GroupElement add(const GroupElement& a, const GroupElement& b) const {
    require(a);
    require(b);
    GroupElement r = a;
    for (std::size_t i = 0; i < orders_.size(); ++i) r.coords[i] = (r.coords[i] + b.coords[i]) % orders_[i];
    return r;
  }

  GroupElement negate(const GroupElement& a) const {
    require(a);
    GroupElement r = a;
    for (std::size_t i = 0; i < orders_.size(); ++i) r.coords[i] = (orders_[i] - r.coords[i]) % orders_[i];
    return r;
  }

 private:
  std::vector<int> orders_;
  std::uint64_t order_;
  int exponent_;
};

inline FiniteAbelianGroup make_group(std::vector<int> cyclic_orders) {
  return FiniteAbelianGroup(std::move(cyclic_orders));
}

inline bool is_elementary_2(const FiniteAbelianGroup& g) {
  for (int d : g.cyclic_orders())
    if (d != 2) return false;
  return true;
}

class Character {
 public:
  Character(const FiniteAbelianGroup& group, GroupElement exponents)
      : h_(std::move(exponents)) {
    group.require(h_);
  }

  const GroupElement& exponents() const { return h_; }

  // Exponent of zeta_e in chi_h(g), in [0, e).
  int exponent_of(const FiniteAbelianGroup& group, const GroupElement& g) const {
    group.require(g);
    const auto& d = group.cyclic_orders();
    const int e = group.exponent();
    std::int64_t acc = 0;
    for (std::size_t i = 0; i < d.size(); ++i) {
      std::int64_t step = e / d[i];
      acc = (acc + static_cast<std::int64_t>(h_.coords[i]) * g.coords[i] % e * step) % e;
    }
    return static_cast<int>(acc);
  }

 private:
  GroupElement h_;
};

// All |G| characters, in lex order of their exponent tuples.
inline std::vector<Character> characters(const FiniteAbelianGroup& group) {
  if (group.order() > (std::uint64_t(1) << 20))
    throw SizeError("refusing to materialize more than 2^20 characters");
  std::vector<Character> out;
  out.reserve(static_cast<std::size_t>(group.order()));
  for (std::uint64_t i = 0; i < group.order(); ++i)
    out.emplace_back(group, group.element_at(i));
  return out;
}

}  // namespace za
