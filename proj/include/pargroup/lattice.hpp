#pragma once

#include <unordered_map>
#include <vector>

#include "pargroup/group.hpp"
#include "pargroup/limits.hpp"
#include "pargroup/subset.hpp"

namespace pargroup {

struct Subgroup {
  Subset elems;
  int order = 0;
};

// Every subgroup of a finite group, sorted by (order, bits): the trivial
// subgroup first, the whole group last. Normalizers, commutators and
// conjugacy classes are stored as indices into `subgroups`.
class SubgroupLattice {
 public:
  int group_order = 0;
  std::vector<Subgroup> subgroups;
  std::vector<int> normalizer;              // index of N(H) per subgroup
  std::vector<int> commutator;              // index of [H,H] per subgroup
  std::vector<int> class_id;                // conjugacy class per subgroup
  std::vector<std::vector<int>> classes;    // class -> ascending subgroup indices
  std::vector<std::vector<int>> supergroups;  // strict supergroups, ascending

  int size() const { return static_cast<int>(subgroups.size()); }
  int trivial_index() const { return 0; }
  int full_index() const { return size() - 1; }

  // H_i <= H_j
  bool includes(int i, int j) const { return subgroups[j].elems.contains(subgroups[i].elems); }
  int index_of(const Subset& elems) const;  // -1 when absent

  // Index of H_j in H_i for H_j <= H_i.
  int index_in(int i, int j) const { return subgroups[i].order / subgroups[j].order; }

  void build_index();

 private:
  std::unordered_map<Subset, int, SubsetHash> index_;
};

// Fixed-point closure: seed with all cyclic subgroups, then extend every
// known subgroup by every element outside it until nothing new appears.
SubgroupLattice subgroup_lattice(const FiniteGroup& g, const Limits& lim = Limits::defaults());

// Subgroup generated by a set of elements (semigroup closure; finite).
Subset generated_subgroup(const FiniteGroup& g, const std::vector<int>& gens);

Subgroup commutator_subgroup(const FiniteGroup& g);
Subgroup commutator_subgroup(const FiniteGroup& g, const Subset& h);
Subgroup normalizer(const FiniteGroup& g, const Subset& h);

// Right cosets H*g ordered by minimal representative.
std::vector<Subset> right_cosets(const FiniteGroup& g, const Subset& h);

// S(A) = {g : gA = A}; requires e in A, and then S(A) is a subgroup of G
// contained in A.
Subgroup stabilizer_of_subset(const FiniteGroup& g, const Subset& a);

}  // namespace pargroup
