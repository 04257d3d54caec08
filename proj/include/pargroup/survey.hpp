#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pargroup/decomp.hpp"
#include "pargroup/limits.hpp"

namespace pargroup {

// Isomorphism class of a finite abelian group: invariant factors
// d_1 | d_2 | ... | d_k, each >= 2. The trivial group is the empty chain.
struct AbelianType {
  std::vector<int> factors;

  int order() const;
  std::string to_string() const;  // e.g. "Z2 x Z6"
  friend bool operator==(const AbelianType& a, const AbelianType& b) {
    return a.factors == b.factors;
  }
};

// One entry per isomorphism class of abelian groups of order n, built from
// partitions of the prime exponents; ordered by (chain length, factors).
std::vector<AbelianType> enumerate_abelian(int n, const Limits& lim = Limits::defaults());

struct SurveyEntry {
  AbelianType type;
  WedderburnProfile profile;
};

struct SurveyReport {
  int order = 0;
  std::vector<SurveyEntry> entries;
  bool all_distinct = false;
  std::vector<std::pair<int, int>> collisions;  // entry index pairs
};

// Wedderburn profile of the partial group algebra of every abelian class of
// order n; all_distinct iff the profiles are pairwise different.
SurveyReport theorem_check(int n, const Limits& lim = Limits::defaults());

// The order-605 pair: (Z_11 x Z_11) semidirect Z_5 with the generator acting
// by exponent pairs (3, 9) and (3, 4). The two groups are nonisomorphic (a
// classical fact, taken from the literature, not verified here) yet share a
// subgroup-order census and a Wedderburn profile.
struct CounterexampleReport {
  std::map<int, int> census1, census2;        // subgroup order -> count
  int subgroup_count1 = 0, subgroup_count2 = 0;
  DegreeProfile group_algebra1, group_algebra2;  // Wedderburn sizes of KG_i
  WedderburnProfile profile1, profile2;          // full partial-algebra profiles
  bool censuses_equal = false;
  bool group_algebras_equal = false;
  bool profiles_equal = false;
  bool blocks_equal = false;  // per-(m, |H|, degree profile of H) multisets
};

CounterexampleReport counterexample_run(const Limits& lim = Limits::defaults());

}  // namespace pargroup
