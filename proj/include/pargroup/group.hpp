#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "pargroup/limits.hpp"
#include "pargroup/subset.hpp"

namespace pargroup {

// Finite group as a validated multiplication table over element indices
// 0..n-1. Construction checks the Latin-square property, a two-sided
// identity, two-sided inverses and full associativity; all later code may
// rely on the table being a group. Immutable after construction.
class FiniteGroup {
 public:
  FiniteGroup() = default;  // empty placeholder; build via the constructors below

  int order() const { return n_; }
  int identity() const { return e_; }
  int mul(int s, int t) const { return mul_[static_cast<std::size_t>(s) * n_ + t]; }
  int inv(int t) const { return inv_[t]; }
  bool is_abelian() const { return abelian_; }
  int element_order(int g) const;

  bool has_labels() const { return !labels_.empty(); }
  std::string label(int i) const;
  void set_labels(std::vector<std::string> labels);

 private:
  friend FiniteGroup group_from_table(int, const std::vector<std::vector<int>>&, const Limits&);

  int n_ = 0;
  int e_ = 0;
  bool abelian_ = true;
  std::vector<std::uint16_t> mul_;
  std::vector<std::uint16_t> inv_;
  std::vector<std::string> labels_;
};

FiniteGroup group_from_table(int n, const std::vector<std::vector<int>>& rows,
                             const Limits& lim = Limits::defaults());

// Z_n with elements 0..n-1 under addition mod n.
FiniteGroup group_cyclic(int n, const Limits& lim = Limits::defaults());

// Direct product of cyclic factors; elements are mixed-radix tuples in
// lexicographic order (leftmost factor most significant).
FiniteGroup group_abelian(const std::vector<int>& factors,
                          const Limits& lim = Limits::defaults());

// Elements are pairs (a, b) in lexicographic order: index = a*|G2| + b.
FiniteGroup group_direct_product(const FiniteGroup& g1, const FiniteGroup& g2,
                                 const Limits& lim = Limits::defaults());

// A permutation on `degree` points as an image vector, 0-based.
using Permutation = std::vector<int>;

// Closure of the generators in breadth-first discovery order from the
// identity, extending on the right by the generators in the given order.
FiniteGroup group_from_permutations(int degree, const std::vector<Permutation>& gens,
                                    const Limits& lim = Limits::defaults());

// <a, b, c | a^p = b^p = c^q = 1, ab = ba, c^-1 a c = a^r, c^-1 b c = b^s>
// of order p^2*q, elements encoded as triples (i, j, k) with
// index = (i*p + j)*q + k meaning a^i b^j c^k. Requires r^q = s^q = 1 mod p;
// the defining relations are re-verified exhaustively on the built table.
FiniteGroup group_metacyclic_pair(int p, int q, int r, int s,
                                  const Limits& lim = Limits::defaults());

// Orbits of conjugation, each sorted, ordered by minimal element.
std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g);

// {g*a : a in set}
Subset left_translate(const FiniteGroup& g, int t, const Subset& set);

bool subset_is_subgroup(const FiniteGroup& g, const Subset& set);

// A subgroup re-indexed as a standalone group. elements[i] is the ambient
// index of local element i; local order follows ascending ambient index.
struct SubgroupView {
  FiniteGroup group;
  std::vector<int> elements;
};
SubgroupView subgroup_as_group(const FiniteGroup& g, const Subset& set,
                               const Limits& lim = Limits::defaults());

// "mtab 1 <n>" header, n rows of n indices, optional "# label <i> <text>"
// trailer lines. Anything else is rejected.
FiniteGroup parse_mtab(std::istream& in, const Limits& lim = Limits::defaults());
FiniteGroup parse_mtab(const std::string& text, const Limits& lim = Limits::defaults());
std::string write_mtab(const FiniteGroup& g);

}  // namespace pargroup
