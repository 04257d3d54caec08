#pragma once

#include <cstddef>

namespace pargroup {

// Resource caps shared by all operations. Every cap fails with an explicit
// error instead of degrading silently. The direct-enumeration bound can be
// raised (or lowered) with the PARGROUP_MAX_DIRECT environment variable;
// subset enumeration walks 2^(n-1) vertex sets, so each +1 doubles the work.
struct Limits {
  int max_group_order = 1024;      // full associativity check is O(n^3)
  int max_direct = 20;             // groupoid / direct decomposition bound
  std::size_t max_lattice = 100000;
  int max_algebra_dim = 1024;      // dense matrices over exact rationals
  int max_abelian_order = 128;     // abelian class enumeration
  int max_survey_order = 64;       // theorem_check; 2-group lattices dominate

  static const Limits& defaults();
};

}  // namespace pargroup
