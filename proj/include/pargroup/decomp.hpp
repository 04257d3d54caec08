#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "pargroup/group.hpp"
#include "pargroup/lattice.hpp"
#include "pargroup/limits.hpp"
#include "pargroup/rational.hpp"

namespace pargroup {

// dim = 2^(n-2) * (n+1) for n >= 2; the order-1 group is the single unit
// arrow, dimension 1.
Int dim_partial_algebra(int n);

// Exact binomial coefficient; 0 outside 0 <= k <= top. Rows are cached.
Int binomial(int top, int k);

enum class DecompMethod { direct, formula };

// mult copies of the m x m matrix algebra over the group algebra of
// lattice subgroup `subgroup`.
struct Block {
  int m = 0;
  int subgroup = 0;
  Int mult;
};

// Exact block decomposition of the groupoid algebra of `group`. Blocks are
// sorted by (m*|H|, m, |H|, H bits) and all have positive multiplicity.
// `direct` attributes blocks to the exact stabilizer subgroup; `formula`
// attributes them to conjugacy-class representatives.
struct StructuralDecomposition {
  FiniteGroup group;
  SubgroupLattice lattice;
  std::vector<Block> blocks;
  DecompMethod method = DecompMethod::formula;
  std::vector<std::string> notes;
};

// Orbit enumeration over all subsets containing the identity. Requires the
// group order within the direct bound.
StructuralDecomposition decompose_direct(const FiniteGroup& g, const SubgroupLattice& lat,
                                         const Limits& lim = Limits::defaults());
StructuralDecomposition decompose_direct(const FiniteGroup& g,
                                         const Limits& lim = Limits::defaults());

// Number of level-(m*|H|) vertices whose stabilizer is exactly the subgroup
// with index h: binom((G:H)-1, m-1) minus the same count for every larger
// stabilizer, by recursion from the top of the lattice.
Int b_coeff(const SubgroupLattice& lat, int h, int m);

// b_coeff for every subgroup and every 1 <= m <= (G:H); table[h][m].
std::vector<std::vector<Int>> b_coeff_table(const SubgroupLattice& lat);

// Lattice recursion; scales far beyond the direct bound. Multiplicities are
// aggregated per conjugacy class of subgroups (sum of b_m over the class,
// divided by m, asserted integral) and attributed to the class
// representative. Per-subgroup non-divisibility is recorded in `notes`.
StructuralDecomposition decompose_formula(const FiniteGroup& g, const SubgroupLattice& lat,
                                          const Limits& lim = Limits::defaults());
StructuralDecomposition decompose_formula(const FiniteGroup& g,
                                          const Limits& lim = Limits::defaults());

// Sum of (H : [H,H]) over the subgroups of order m, and the number of such
// subgroups.
Int beta_m(const SubgroupLattice& lat, int m);
Int gamma_m(const SubgroupLattice& lat, int m);

// Multiplicity of the size-(|G|/k - 1) full matrix block in the Wedderburn
// decomposition, evaluated from beta_m alone. Preconditions: k divides |G|,
// |G| != 2k, and every prime dividing |G| divides |G|/k.
Int multiplicity_formula(const FiniteGroup& g, const SubgroupLattice& lat, int k);

// Matrix sizes with multiplicities in the Wedderburn decomposition of a
// group algebra over an algebraically closed field of characteristic zero.
struct DegreeProfile {
  std::map<int, Int> degrees;

  Int count_at(int d) const;
  friend bool operator==(const DegreeProfile& a, const DegreeProfile& b) {
    return a.degrees == b.degrees;
  }
};

// Externally supplied degree profiles keyed by (order, class count,
// commutator index), for the case the constraint solver reports ambiguity.
struct DegreeOverrides {
  std::map<std::tuple<int, int, int>, std::map<int, Int>> profiles;
};

// Unique multiset of degrees > 1 with: class_count - linear_count entries,
// every entry dividing `order`, squares summing to order - linear_count.
// Throws AmbiguousDegrees when zero or several multisets qualify.
DegreeProfile solve_degree_profile(int order, int class_count, int linear_count);

// Abelian groups: |H| linear degrees. Otherwise the constraint solver above
// on (|H|, #classes, (H:[H,H])), unless an override matches.
DegreeProfile degree_profile(const FiniteGroup& h, const DegreeOverrides& ov = {});

struct WedderburnProfile {
  std::map<int, Int> sizes;

  Int count_at(int size) const;
  Int dimension() const;  // sum of size^2 * mult
  friend bool operator==(const WedderburnProfile& a, const WedderburnProfile& b) {
    return a.sizes == b.sizes;
  }
};

WedderburnProfile wedderburn_expand(const StructuralDecomposition& d,
                                    const DegreeOverrides& ov = {});

// Center dimension: each block contributes mult * (#conjugacy classes of H).
Int center_dimension(const StructuralDecomposition& d);

// Families with closed binomial formulas; built without any enumeration of
// subsets. The underlying groups are group_cyclic(p), group_abelian({p,p}),
// group_abelian({p,q}) and group_cyclic(p^2).
enum class ClosedFormFamily { Zp, ZpZp, Zpq, Zp2 };
StructuralDecomposition closed_form(ClosedFormFamily family, int p, int q = 0,
                                    const Limits& lim = Limits::defaults());

// Equality of the expanded Wedderburn profiles. The witness is the first
// size, scanning downward from the largest, whose multiplicities differ
// (counts at smaller sizes are forced once the larger ones agree, by the
// dimension identity).
struct CompareResult {
  bool equal = false;
  int witness_size = 0;
};
CompareResult compare_decompositions(const StructuralDecomposition& d1,
                                     const StructuralDecomposition& d2,
                                     const DegreeOverrides& ov = {});

// Block multiset with conjugate subgroups merged onto class representatives;
// the common refinement of the two methods over one lattice.
std::map<std::pair<int, int>, Int> merged_class_blocks(const StructuralDecomposition& d);
bool same_block_structure(const StructuralDecomposition& d1, const StructuralDecomposition& d2);

Int decomposition_dimension(const StructuralDecomposition& d);

// "block m=<m> H=<order>:<hex-bits> mult=<int>" lines, canonical order.
std::string decomposition_text(const StructuralDecomposition& d);
// "M<size> x <mult>" lines, ascending size.
std::string wedderburn_text(const WedderburnProfile& p);

}  // namespace pargroup
