#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pargroup/group.hpp"
#include "pargroup/groupoid.hpp"
#include "pargroup/limits.hpp"
#include "pargroup/linalg.hpp"

namespace pargroup {

// Candidate partial representation: one square exact-rational matrix per
// group element. Nothing is assumed valid until verify_partial_rep says so.
struct PartialRep {
  FiniteGroup group;
  int dim = 0;
  std::vector<RatMatrix> mats;  // mats[g]

  const RatMatrix& at(int g) const { return mats[g]; }
};

// axiom: 'e' for pi(e) != 1, 'a' for pi(s)pi(t)pi(t^-1) != pi(st)pi(t^-1),
// 'b' for pi(s^-1)pi(s)pi(t) != pi(s^-1)pi(st); (s, t) is the first
// violating pair in scan order.
struct RepVerdict {
  bool valid = false;
  int s = 0;
  int t = 0;
  char axiom = ' ';
};

RepVerdict verify_partial_rep(const PartialRep& rep);

PartialRep trivial_representation(const FiniteGroup& g);
PartialRep regular_representation(const FiniteGroup& g);

// Permutation action on right cosets of a subgroup; the regular
// representation when the subgroup is trivial.
PartialRep permutation_representation(const FiniteGroup& g, const Subset& subgroup);

PartialRep direct_sum(const PartialRep& a, const PartialRep& b);

// g -> matrix of lambda_par(g) in the canonical arrow basis; the left
// regular partial representation.
PartialRep lambda_partial_rep(const FiniteGroup& g, const Limits& lim = Limits::defaults());

// pi~(g) = pi(g) on the subgroup, 0 elsewhere. rep_on_h lives over
// subgroup_as_group(g, h); must verify as a partial representation of H.
PartialRep extend_by_zero(const FiniteGroup& g, const Subset& h, const PartialRep& rep_on_h);

// eps(t) = pi(t)pi(t^-1) and P_S = prod_{s in S} eps(s) prod_{s not in S}
// (1 - eps(s)) for every subset S of G. Construction verifies: idempotence,
// commutation, the exchange rule pi(t)eps(s) = eps(ts)pi(t), sum_S P_S = 1,
// pairwise orthogonality, and P_S = 0 when e is not in S.
struct ProjectionFamily {
  int dim = 0;
  std::vector<RatMatrix> eps;  // eps[t]
  std::vector<RatMatrix> p;    // p[mask] over all 2^n subsets

  const RatMatrix& p_of(const Subset& s) const { return p[s.mask64()]; }
};

ProjectionFamily projection_family(const PartialRep& rep, const Limits& lim = Limits::defaults());

// pi~(A, g) = pi(g) * P_A for every arrow, in canonical arrow order; the
// unique unital homomorphism of the groupoid algebra with pi~ o lambda = pi.
struct LiftedRep {
  int dim = 0;
  std::vector<GroupoidArrow> arrows;
  std::vector<RatMatrix> mats;

  const RatMatrix& at(const GroupoidArrow& a) const;
  RatMatrix apply(const AlgebraElement& x) const;  // linear extension
};

LiftedRep lift(const PartialRep& rep, const Limits& lim = Limits::defaults());

// Gram matrix of <xi, eta> = sum_S sum_t [P_S pi(t) xi, P_S pi(t) eta]
// starting from the standard inner product. Symmetric, positive definite,
// and equivariant: pi(g)^T M = M pi(g^-1).
RatMatrix invariant_inner_product(const PartialRep& rep, const Limits& lim = Limits::defaults());

bool is_equivariant(const PartialRep& rep, const RatMatrix& gram);

// "prep 1 <n> <d>" header, then per element d lines of d rationals.
std::string write_partial_rep(const PartialRep& rep);
PartialRep parse_partial_rep(const FiniteGroup& g, std::istream& in);
PartialRep parse_partial_rep(const FiniteGroup& g, const std::string& text);

}  // namespace pargroup
