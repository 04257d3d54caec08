#include "pargroup/parrep.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <unordered_map>

#include "pargroup/error.hpp"

namespace pargroup {

namespace {

void check_shape(const PartialRep& rep) {
  if (rep.dim < 1 || static_cast<int>(rep.mats.size()) != rep.group.order())
    throw Error(Errc::InvalidInput, "malformed representation");
  for (const auto& m : rep.mats)
    if (m.rows() != rep.dim || m.cols() != rep.dim)
      throw Error(Errc::InvalidInput, "matrix size mismatch");
}

void require_valid(const PartialRep& rep, const char* who) {
  RepVerdict v = verify_partial_rep(rep);
  if (!v.valid)
    throw Error(Errc::NotAPartialRep, std::string(who) + ": axioms fail at (s,t) = (" +
                                          std::to_string(v.s) + "," + std::to_string(v.t) +
                                          "), axiom " + v.axiom);
}

std::vector<RatMatrix> epsilon_family(const PartialRep& rep) {
  const int n = rep.group.order();
  std::vector<RatMatrix> eps(n);
  for (int t = 0; t < n; ++t) eps[t] = rep.at(t) * rep.at(rep.group.inv(t));
  return eps;
}

// P_S for one subset mask over a precomputed epsilon family.
RatMatrix subset_projection(const std::vector<RatMatrix>& eps, int d, std::uint64_t mask) {
  RatMatrix p = RatMatrix::Identity(d, d);
  for (std::size_t t = 0; t < eps.size(); ++t) {
    if (mask >> t & 1)
      p = p * eps[t];
    else
      p = p * (RatMatrix::Identity(d, d) - eps[t]);
  }
  return p;
}

}  // namespace

RepVerdict verify_partial_rep(const PartialRep& rep) {
  check_shape(rep);
  const FiniteGroup& g = rep.group;
  const int n = g.order();
  const RatMatrix id = RatMatrix::Identity(rep.dim, rep.dim);
  if (!(rep.at(g.identity()) == id)) return RepVerdict{false, g.identity(), g.identity(), 'e'};

  std::vector<RatMatrix> eps(n), nu(n);
  for (int t = 0; t < n; ++t) {
    eps[t] = rep.at(t) * rep.at(g.inv(t));      // pi(t) pi(t^-1)
    nu[t] = rep.at(g.inv(t)) * rep.at(t);       // pi(t^-1) pi(t)
  }
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) {
      const int st = g.mul(s, t);
      RatMatrix lhs = rep.at(s) * eps[t];
      RatMatrix rhs = rep.at(st) * rep.at(g.inv(t));
      if (!(lhs == rhs)) return RepVerdict{false, s, t, 'a'};
      lhs = nu[s] * rep.at(t);
      rhs = rep.at(g.inv(s)) * rep.at(st);
      if (!(lhs == rhs)) return RepVerdict{false, s, t, 'b'};
    }
  }
  return RepVerdict{true, 0, 0, ' '};
}

PartialRep trivial_representation(const FiniteGroup& g) {
  PartialRep rep{g, 1, {}};
  rep.mats.assign(g.order(), RatMatrix::Identity(1, 1));
  return rep;
}

PartialRep regular_representation(const FiniteGroup& g) {
  const int n = g.order();
  PartialRep rep{g, n, {}};
  rep.mats.assign(n, RatMatrix::Zero(n, n));
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) rep.mats[s](g.mul(s, t), t) = 1;
  return rep;
}

PartialRep permutation_representation(const FiniteGroup& g, const Subset& subgroup) {
  if (!subset_is_subgroup(g, subgroup))
    throw Error(Errc::InvalidInput, "permutation action needs a subgroup");
  const int n = g.order();
  // left cosets xK, indexed by minimal representative
  std::vector<int> coset_of(n, -1);
  int count = 0;
  for (int x = 0; x < n; ++x) {
    if (coset_of[x] >= 0) continue;
    subgroup.for_each([&](int a) { coset_of[g.mul(x, a)] = count; });
    ++count;
  }
  PartialRep rep{g, count, {}};
  rep.mats.assign(n, RatMatrix::Zero(count, count));
  for (int s = 0; s < n; ++s)
    for (int x = 0; x < n; ++x) rep.mats[s](coset_of[g.mul(s, x)], coset_of[x]) = 1;
  return rep;
}

PartialRep direct_sum(const PartialRep& a, const PartialRep& b) {
  if (a.group.order() != b.group.order())
    throw Error(Errc::GroupMismatch, "direct sum over different groups");
  PartialRep rep{a.group, a.dim + b.dim, {}};
  rep.mats.reserve(a.mats.size());
  for (int g = 0; g < a.group.order(); ++g) {
    RatMatrix m = RatMatrix::Zero(rep.dim, rep.dim);
    m.topLeftCorner(a.dim, a.dim) = a.at(g);
    m.bottomRightCorner(b.dim, b.dim) = b.at(g);
    rep.mats.push_back(std::move(m));
  }
  return rep;
}

PartialRep lambda_partial_rep(const FiniteGroup& g, const Limits& lim) {
  PartialRep rep{g, 0, {}};
  for (int x = 0; x < g.order(); ++x)
    rep.mats.push_back(left_regular_matrix(g, lambda_par(g, x, lim), lim));
  rep.dim = static_cast<int>(rep.mats.front().rows());
  return rep;
}

PartialRep extend_by_zero(const FiniteGroup& g, const Subset& h, const PartialRep& rep_on_h) {
  SubgroupView view = subgroup_as_group(g, h);
  const FiniteGroup& hg = view.group;
  if (rep_on_h.group.order() != hg.order())
    throw Error(Errc::InvalidInput, "representation order does not match the subgroup");
  for (int a = 0; a < hg.order(); ++a)
    for (int b = 0; b < hg.order(); ++b)
      if (rep_on_h.group.mul(a, b) != hg.mul(a, b))
        throw Error(Errc::InvalidInput, "representation group differs from the subgroup");
  RepVerdict v = verify_partial_rep(rep_on_h);
  if (!v.valid) throw Error(Errc::InvalidInput, "input is not a partial representation of H");

  PartialRep rep{g, rep_on_h.dim, {}};
  rep.mats.assign(g.order(), RatMatrix::Zero(rep.dim, rep.dim));
  for (int i = 0; i < hg.order(); ++i) rep.mats[view.elements[i]] = rep_on_h.at(i);
  return rep;
}

ProjectionFamily projection_family(const PartialRep& rep, const Limits& lim) {
  require_valid(rep, "projection_family");
  const FiniteGroup& g = rep.group;
  const int n = g.order();
  const int d = rep.dim;
  if (n > lim.max_direct || n > 63)
    throw Error(Errc::DirectBoundExceeded, "projection family enumerates 2^n subsets");

  ProjectionFamily fam;
  fam.dim = d;
  fam.eps = epsilon_family(rep);
  const RatMatrix id = RatMatrix::Identity(d, d);

  auto fail = [](const char* what) {
    throw Error(Errc::InvalidInput, std::string("projection family invariant failed: ") + what);
  };
  for (int t = 0; t < n; ++t)
    if (!(fam.eps[t] * fam.eps[t] == fam.eps[t])) fail("idempotence");
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      if (!(fam.eps[s] * fam.eps[t] == fam.eps[t] * fam.eps[s])) fail("commutation");
      if (!(rep.at(t) * fam.eps[s] == fam.eps[g.mul(t, s)] * rep.at(t))) fail("exchange");
    }

  const std::uint64_t total = std::uint64_t{1} << n;
  fam.p.reserve(total);
  RatMatrix sum = RatMatrix::Zero(d, d);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    fam.p.push_back(subset_projection(fam.eps, d, mask));
    sum += fam.p.back();
    if (!(mask >> g.identity() & 1) && !fam.p.back().isZero(Rat(0)))
      fail("P_S without the identity");
  }
  if (!(sum == id)) fail("partition of unity");
  for (std::uint64_t a = 0; a < total; ++a) {
    if (fam.p[a].isZero(Rat(0))) continue;
    for (std::uint64_t b = a + 1; b < total; ++b)
      if (!(fam.p[a] * fam.p[b]).isZero(Rat(0))) fail("orthogonality");
  }
  return fam;
}

const RatMatrix& LiftedRep::at(const GroupoidArrow& a) const {
  auto it = std::lower_bound(arrows.begin(), arrows.end(), a, ArrowLess{});
  if (it == arrows.end() || !(*it == a))
    throw Error(Errc::InvalidInput, "arrow outside the groupoid");
  return mats[static_cast<std::size_t>(it - arrows.begin())];
}

RatMatrix LiftedRep::apply(const AlgebraElement& x) const {
  RatMatrix out = RatMatrix::Zero(dim, dim);
  for (const auto& [a, c] : x.terms()) out += at(a) * c;
  return out;
}

LiftedRep lift(const PartialRep& rep, const Limits& lim) {
  require_valid(rep, "lift");
  const FiniteGroup& g = rep.group;
  const int d = rep.dim;
  LiftedRep out;
  out.dim = d;
  out.arrows = canonical_arrows(g, lim);
  out.mats.reserve(out.arrows.size());
  std::vector<RatMatrix> eps = epsilon_family(rep);
  std::unordered_map<std::uint64_t, RatMatrix> p_cache;
  for (const GroupoidArrow& a : out.arrows) {
    std::uint64_t mask = a.set.mask64();
    auto it = p_cache.find(mask);
    if (it == p_cache.end())
      it = p_cache.emplace(mask, subset_projection(eps, d, mask)).first;
    out.mats.push_back(rep.at(a.g) * it->second);
  }
  return out;
}

RatMatrix invariant_inner_product(const PartialRep& rep, const Limits& lim) {
  require_valid(rep, "invariant_inner_product");
  const FiniteGroup& g = rep.group;
  const int n = g.order();
  const int d = rep.dim;
  if (n > lim.max_direct || n > 63)
    throw Error(Errc::DirectBoundExceeded, "inner product sums over 2^n subsets");

  std::vector<RatMatrix> eps = epsilon_family(rep);
  RatMatrix gram = RatMatrix::Zero(d, d);
  // P_S vanishes without the identity, and P_S pi(t) vanishes for t not in S.
  const std::uint64_t bit_e = std::uint64_t{1} << g.identity();
  const std::uint64_t free = ((n == 63 ? (std::uint64_t{1} << 63) : std::uint64_t{1} << n) - 1) &
                             ~bit_e;
  std::uint64_t sub = free;
  while (true) {
    const std::uint64_t mask = sub | bit_e;
    RatMatrix p = subset_projection(eps, d, mask);
    if (!p.isZero(Rat(0))) {
      for (int t = 0; t < n; ++t) {
        if (!(mask >> t & 1)) continue;
        RatMatrix q = p * rep.at(t);
        gram += q.transpose() * q;
      }
    }
    if (sub == 0) break;
    sub = (sub - 1) & free;
  }
  return gram;
}

bool is_equivariant(const PartialRep& rep, const RatMatrix& gram) {
  const FiniteGroup& g = rep.group;
  for (int x = 0; x < g.order(); ++x) {
    RatMatrix lhs = rep.at(x).transpose() * gram;
    RatMatrix rhs = gram * rep.at(g.inv(x));
    if (!(lhs == rhs)) return false;
  }
  return true;
}

std::string write_partial_rep(const PartialRep& rep) {
  std::ostringstream out;
  out << "prep 1 " << rep.group.order() << " " << rep.dim << "\n";
  for (int g = 0; g < rep.group.order(); ++g) {
    for (int i = 0; i < rep.dim; ++i) {
      for (int j = 0; j < rep.dim; ++j) out << (j ? " " : "") << format_rat(rep.at(g)(i, j));
      out << "\n";
    }
  }
  return out.str();
}

PartialRep parse_partial_rep(const FiniteGroup& g, std::istream& in) {
  std::string word;
  int version = 0, n = 0, d = 0;
  if (!(in >> word) || word != "prep" || !(in >> version) || version != 1 || !(in >> n) ||
      !(in >> d) || d < 1)
    throw Error(Errc::ParseError, "expected header 'prep 1 <n> <d>'");
  if (n != g.order()) throw Error(Errc::ParseError, "representation order does not match group");
  PartialRep rep{g, d, {}};
  rep.mats.assign(n, RatMatrix::Zero(d, d));
  for (int x = 0; x < n; ++x)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        std::string tok;
        if (!(in >> tok)) throw Error(Errc::ParseError, "truncated representation file");
        rep.mats[x](i, j) = parse_rat(tok);
      }
  std::string rest;
  if (in >> rest) throw Error(Errc::ParseError, "trailing garbage: '" + rest + "'");
  return rep;
}

PartialRep parse_partial_rep(const FiniteGroup& g, const std::string& text) {
  std::istringstream in(text);
  return parse_partial_rep(g, in);
}

}  // namespace pargroup
