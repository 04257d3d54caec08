#pragma once

#include <string>
#include <string_view>

#include "pargroup/group.hpp"
#include "pargroup/limits.hpp"

namespace pargroup {

// Group description grammar used by the command line:
//   cyclic:<n>                      Z_n
//   abelian:<d1>,<d2>,...           product of cyclic factors
//   perm:<degree>:<gen>;<gen>;...   gen = cycles like (1 2 3)(4 5), 1-based
//   metacyclic:<p>,<q>,<r>,<s>      the order p^2*q pair construction
//   product:(<spec>)x(<spec>)       direct product, recursive
//   anything else                   path of an mtab file
FiniteGroup parse_group_spec(std::string_view spec, const Limits& lim = Limits::defaults());

// One-line summary of the grammar for --help output.
std::string group_spec_grammar();

}  // namespace pargroup
