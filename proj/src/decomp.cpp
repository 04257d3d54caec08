#include "pargroup/decomp.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <unordered_map>

#include "pargroup/error.hpp"
#include "pargroup/groupoid.hpp"

namespace pargroup {

Int dim_partial_algebra(int n) {
  if (n < 1) throw Error(Errc::InvalidInput, "group order must be positive");
  if (n == 1) return 1;
  return (Int(1) << (n - 2)) * (n + 1);
}

Int binomial(int top, int k) {
  if (k < 0 || top < 0 || k > top) return 0;
  static std::map<int, std::vector<Int>> rows;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = rows.find(top);
  if (it == rows.end()) {
    std::vector<Int> row(top + 1);
    row[0] = 1;
    for (int j = 0; j < top; ++j) row[j + 1] = row[j] * (top - j) / (j + 1);
    it = rows.emplace(top, std::move(row)).first;
  }
  return it->second[k];
}

namespace {

void check_lattice(const FiniteGroup& g, const SubgroupLattice& lat) {
  if (lat.group_order != g.order())
    throw Error(Errc::GroupMismatch, "lattice built for a different group order");
}

void sort_blocks(const SubgroupLattice& lat, std::vector<Block>& blocks) {
  std::sort(blocks.begin(), blocks.end(), [&](const Block& a, const Block& b) {
    int la = a.m * lat.subgroups[a.subgroup].order;
    int lb = b.m * lat.subgroups[b.subgroup].order;
    if (la != lb) return la < lb;
    if (a.m != b.m) return a.m < b.m;
    const Subgroup& ha = lat.subgroups[a.subgroup];
    const Subgroup& hb = lat.subgroups[b.subgroup];
    if (ha.order != hb.order) return ha.order < hb.order;
    return Subset::bits_less(ha.elems, hb.elems);
  });
}

Int exact_div(const Int& num, int den, const char* what) {
  if (num % den != 0)
    throw Error(Errc::NonIntegralMultiplicity,
                std::string(what) + ": " + num.str() + " not divisible by " + std::to_string(den));
  return num / den;
}

}  // namespace

StructuralDecomposition decompose_direct(const FiniteGroup& g, const SubgroupLattice& lat,
                                         const Limits& lim) {
  check_lattice(g, lat);
  std::map<std::pair<int, int>, Int> acc;  // (m, subgroup) -> count
  scan_components(
      g,
      [&](int /*level*/, std::uint64_t /*base*/,
          const std::vector<std::pair<std::uint64_t, int>>& verts, std::uint64_t stab) {
        int idx = lat.index_of(Subset::from_mask(g.order(), stab));
        if (idx < 0) throw Error(Errc::InvalidInput, "stabilizer missing from the lattice");
        acc[{static_cast<int>(verts.size()), idx}] += 1;
      },
      lim);
  StructuralDecomposition d{g, lat, {}, DecompMethod::direct, {}};
  for (const auto& [key, mult] : acc) d.blocks.push_back(Block{key.first, key.second, mult});
  sort_blocks(lat, d.blocks);
  return d;
}

StructuralDecomposition decompose_direct(const FiniteGroup& g, const Limits& lim) {
  return decompose_direct(g, subgroup_lattice(g, lim), lim);
}

std::vector<std::vector<Int>> b_coeff_table(const SubgroupLattice& lat) {
  const int count = lat.size();
  std::vector<std::vector<Int>> table(count);
  for (int i = count - 1; i >= 0; --i) {
    const int index = lat.group_order / lat.subgroups[i].order;  // (G:H)
    table[i].assign(index + 1, Int(0));
    for (int m = 1; m <= index; ++m) {
      Int v = binomial(index - 1, m - 1);
      for (int j : lat.supergroups[i]) {
        int q = lat.subgroups[j].order / lat.subgroups[i].order;
        if (m % q == 0) v -= table[j][m / q];
      }
      table[i][m] = v;
    }
  }
  return table;
}

Int b_coeff(const SubgroupLattice& lat, int h, int m) {
  if (h < 0 || h >= lat.size()) throw Error(Errc::InvalidInput, "subgroup index out of range");
  int index = lat.group_order / lat.subgroups[h].order;
  if (m < 1 || m > index) throw Error(Errc::InvalidInput, "m outside 1..(G:H)");
  return b_coeff_table(lat)[h][m];
}

StructuralDecomposition decompose_formula(const FiniteGroup& g, const SubgroupLattice& lat,
                                          const Limits& /*lim*/) {
  check_lattice(g, lat);
  auto table = b_coeff_table(lat);
  StructuralDecomposition d{g, lat, {}, DecompMethod::formula, {}};
  for (const auto& cls : lat.classes) {
    const int rep = cls.front();
    const int index = lat.group_order / lat.subgroups[rep].order;
    for (int m = 1; m <= index; ++m) {
      Int total = 0;
      for (int i : cls) {
        total += table[i][m];
        if (table[i][m] % m != 0)
          d.notes.push_back("b_" + std::to_string(m) + " of subgroup " + std::to_string(i) +
                            " = " + table[i][m].str() + " is not divisible by m; class total used");
      }
      if (total == 0) continue;
      d.blocks.push_back(Block{m, rep, exact_div(total, m, "class multiplicity")});
    }
  }
  sort_blocks(lat, d.blocks);
  return d;
}

StructuralDecomposition decompose_formula(const FiniteGroup& g, const Limits& lim) {
  return decompose_formula(g, subgroup_lattice(g, lim), lim);
}

Int beta_m(const SubgroupLattice& lat, int m) {
  Int total = 0;
  for (int i = 0; i < lat.size(); ++i) {
    if (lat.subgroups[i].order != m) continue;
    total += lat.subgroups[i].order / lat.subgroups[lat.commutator[i]].order;
  }
  return total;
}

Int gamma_m(const SubgroupLattice& lat, int m) {
  Int total = 0;
  for (const auto& h : lat.subgroups)
    if (h.order == m) ++total;
  return total;
}

Int multiplicity_formula(const FiniteGroup& g, const SubgroupLattice& lat, int k) {
  check_lattice(g, lat);
  const int n = g.order();
  if (k < 1 || n % k != 0)
    throw PreconditionError(PreconditionReason::NotDivisor,
                            "k = " + std::to_string(k) + " does not divide " + std::to_string(n));
  if (n == 2 * k)
    throw PreconditionError(PreconditionReason::OrderTwiceK, "|G| = 2k is excluded");
  if (n == 1) return 0;  // no blocks of size |G|/k - 1 = 0 exist
  int rest = n;
  for (int p = 2; p <= rest; ++p) {
    if (rest % p != 0) continue;
    if ((n / k) % p != 0)
      throw PreconditionError(PreconditionReason::PrimeCondition,
                              "prime " + std::to_string(p) + " divides |G| but not |G|/k");
    while (rest % p == 0) rest /= p;
  }
  Int sum = 0;
  for (int m = 1; m <= n; ++m) {
    if (n % m != 0) continue;
    // m < k*n/(n-k), kept in integers
    if (static_cast<long long>(m) * (n - k) >= static_cast<long long>(k) * n) continue;
    sum += binomial(n / m - 1, n / k - 2) * beta_m(lat, m);
  }
  return exact_div(sum * k, n - k, "multiplicity");
}

Int DegreeProfile::count_at(int d) const {
  auto it = degrees.find(d);
  return it == degrees.end() ? Int(0) : it->second;
}

DegreeProfile solve_degree_profile(int order, int class_count, int linear_count) {
  const int need = class_count - linear_count;
  const int target = order - linear_count;
  if (need < 0 || target < 0 || linear_count < 1 || order % linear_count != 0)
    throw Error(Errc::InvalidInput, "inconsistent degree constraints");
  if (need == 0) {
    if (target != 0) throw Error(Errc::InvalidInput, "inconsistent degree constraints");
    DegreeProfile p;
    p.degrees[1] = linear_count;
    return p;
  }
  std::vector<int> divisors;
  for (int d = 2; d * d <= target && d <= order; ++d)
    if (order % d == 0) divisors.push_back(d);

  std::vector<std::vector<int>> solutions;
  std::vector<int> current;
  auto dfs = [&](auto&& self, std::size_t from, int slots, int rest) -> void {
    if (solutions.size() > 1) return;
    if (slots == 0) {
      if (rest == 0) solutions.push_back(current);
      return;
    }
    for (std::size_t i = from; i < divisors.size(); ++i) {
      const int d = divisors[i];
      if (static_cast<long long>(slots) * d * d > rest) break;  // non-decreasing degrees
      current.push_back(d);
      self(self, i, slots - 1, rest - d * d);
      current.pop_back();
    }
  };
  dfs(dfs, 0, need, target);

  if (solutions.empty())
    throw Error(Errc::AmbiguousDegrees, "no degree multiset satisfies the constraints");
  if (solutions.size() > 1)
    throw Error(Errc::AmbiguousDegrees,
                "several degree multisets satisfy the constraints; supply an override");
  DegreeProfile p;
  p.degrees[1] = linear_count;
  for (int d : solutions.front()) p.degrees[d] += 1;
  return p;
}

DegreeProfile degree_profile(const FiniteGroup& h, const DegreeOverrides& ov) {
  const int order = h.order();
  const int class_count = static_cast<int>(conjugacy_classes(h).size());
  const int linear_count =
      h.is_abelian() ? order : order / commutator_subgroup(h).order;
  auto it = ov.profiles.find({order, class_count, linear_count});
  if (it != ov.profiles.end()) {
    DegreeProfile p;
    Int count = 0, dim = 0;
    for (const auto& [d, mult] : it->second) {
      if (d < 1 || mult < 0) throw Error(Errc::InvalidInput, "bad degree override");
      if (mult > 0) p.degrees[d] = mult;
      count += mult;
      dim += Int(d) * d * mult;
    }
    if (count != class_count || dim != order || p.count_at(1) != linear_count)
      throw Error(Errc::InvalidInput, "degree override violates the constraints");
    return p;
  }
  if (h.is_abelian()) {
    DegreeProfile p;
    p.degrees[1] = order;
    return p;
  }
  return solve_degree_profile(order, class_count, linear_count);
}

Int WedderburnProfile::count_at(int size) const {
  auto it = sizes.find(size);
  return it == sizes.end() ? Int(0) : it->second;
}

Int WedderburnProfile::dimension() const {
  Int total = 0;
  for (const auto& [size, mult] : sizes) total += Int(size) * size * mult;
  return total;
}

namespace {

// Profiles of conjugate subgroups coincide; computed once per class.
class ProfileCache {
 public:
  ProfileCache(const StructuralDecomposition& d, const DegreeOverrides& ov) : d_(d), ov_(ov) {}

  const DegreeProfile& of_subgroup(int subgroup) {
    int cls = d_.lattice.class_id[subgroup];
    auto it = cache_.find(cls);
    if (it == cache_.end()) {
      auto view = subgroup_as_group(d_.group, d_.lattice.subgroups[subgroup].elems);
      it = cache_.emplace(cls, degree_profile(view.group, ov_)).first;
    }
    return it->second;
  }

 private:
  const StructuralDecomposition& d_;
  const DegreeOverrides& ov_;
  std::unordered_map<int, DegreeProfile> cache_;
};

}  // namespace

WedderburnProfile wedderburn_expand(const StructuralDecomposition& d, const DegreeOverrides& ov) {
  ProfileCache cache(d, ov);
  WedderburnProfile out;
  for (const Block& b : d.blocks) {
    for (const auto& [deg, mu] : cache.of_subgroup(b.subgroup).degrees)
      out.sizes[b.m * deg] += b.mult * mu;
  }
  return out;
}

Int center_dimension(const StructuralDecomposition& d) {
  std::unordered_map<int, int> class_counts;  // lattice class -> #classes of H
  Int total = 0;
  for (const Block& b : d.blocks) {
    int cls = d.lattice.class_id[b.subgroup];
    auto it = class_counts.find(cls);
    if (it == class_counts.end()) {
      const Subgroup& h = d.lattice.subgroups[b.subgroup];
      int cc = h.order;
      if (!d.group.is_abelian()) {
        auto view = subgroup_as_group(d.group, h.elems);
        cc = view.group.is_abelian()
                 ? h.order
                 : static_cast<int>(conjugacy_classes(view.group).size());
      }
      it = class_counts.emplace(cls, cc).first;
    }
    total += b.mult * it->second;
  }
  return total;
}

namespace {

bool closed_form_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

int subgroup_of_order(const SubgroupLattice& lat, int order, int nth = 0) {
  int seen = 0;
  for (int i = 0; i < lat.size(); ++i)
    if (lat.subgroups[i].order == order && seen++ == nth) return i;
  throw Error(Errc::InvalidInput, "expected subgroup order missing from the lattice");
}

}  // namespace

StructuralDecomposition closed_form(ClosedFormFamily family, int p, int q, const Limits& lim) {
  if (!closed_form_prime(p)) throw Error(Errc::InvalidInput, "p must be prime");
  if (family == ClosedFormFamily::Zpq && (!closed_form_prime(q) || q == p))
    throw Error(Errc::InvalidInput, "q must be a prime different from p");

  FiniteGroup g;
  switch (family) {
    case ClosedFormFamily::Zp: g = group_cyclic(p, lim); break;
    case ClosedFormFamily::Zp2: g = group_cyclic(p * p, lim); break;
    case ClosedFormFamily::ZpZp: g = group_abelian({p, p}, lim); break;
    case ClosedFormFamily::Zpq: g = group_abelian({p, q}, lim); break;
  }
  SubgroupLattice lat = subgroup_lattice(g, lim);
  StructuralDecomposition d{g, lat, {}, DecompMethod::formula, {}};
  const int trivial = lat.trivial_index();
  auto push = [&](int m, int subgroup, Int mult) {
    if (mult != 0) d.blocks.push_back(Block{m, subgroup, std::move(mult)});
  };

  switch (family) {
    case ClosedFormFamily::Zp: {
      for (int k = 1; k <= p - 1; ++k)
        push(k, trivial, exact_div(binomial(p - 1, k - 1), k, "closed form"));
      push(1, lat.full_index(), 1);
      break;
    }
    case ClosedFormFamily::Zp2: {
      const int h = subgroup_of_order(lat, p);
      for (int k = 1; k <= p * p - 1; ++k)
        if (k % p != 0) push(k, trivial, exact_div(binomial(p * p - 1, k - 1), k, "closed form"));
      for (int m = 1; m <= p - 1; ++m)
        push(m, h, exact_div(binomial(p - 1, m - 1), m, "closed form"));
      for (int m = 1; m <= p - 1; ++m)
        push(m * p, trivial,
             exact_div(binomial(p * p - 1, m * p - 1) - binomial(p - 1, m - 1), m * p,
                       "closed form"));
      push(1, lat.full_index(), 1);
      break;
    }
    case ClosedFormFamily::ZpZp: {
      for (int k = 1; k <= p * p - 1; ++k)
        if (k % p != 0) push(k, trivial, exact_div(binomial(p * p - 1, k - 1), k, "closed form"));
      for (int nth = 0; nth < p + 1; ++nth) {
        const int h = subgroup_of_order(lat, p, nth);
        for (int m = 1; m <= p - 1; ++m)
          push(m, h, exact_div(binomial(p - 1, m - 1), m, "closed form"));
      }
      for (int m = 1; m <= p - 1; ++m)
        push(m * p, trivial,
             exact_div(binomial(p * p - 1, m * p - 1) - (p + 1) * binomial(p - 1, m - 1), m * p,
                       "closed form"));
      push(1, lat.full_index(), 1);
      break;
    }
    case ClosedFormFamily::Zpq: {
      const int hp = subgroup_of_order(lat, p);
      const int hq = subgroup_of_order(lat, q);
      for (int k = 1; k <= p * q - 1; ++k)
        if (k % p != 0 && k % q != 0)
          push(k, trivial, exact_div(binomial(p * q - 1, k - 1), k, "closed form"));
      for (int m = 1; m <= p - 1; ++m)
        push(m, hq, exact_div(binomial(p - 1, m - 1), m, "closed form"));
      for (int m = 1; m <= q - 1; ++m)
        push(m, hp, exact_div(binomial(q - 1, m - 1), m, "closed form"));
      for (int m = 1; m <= q - 1; ++m)
        push(m * p, trivial,
             exact_div(binomial(p * q - 1, m * p - 1) - binomial(q - 1, m - 1), m * p,
                       "closed form"));
      for (int m = 1; m <= p - 1; ++m)
        push(m * q, trivial,
             exact_div(binomial(p * q - 1, m * q - 1) - binomial(p - 1, m - 1), m * q,
                       "closed form"));
      push(1, lat.full_index(), 1);
      break;
    }
  }
  sort_blocks(lat, d.blocks);
  return d;
}

CompareResult compare_decompositions(const StructuralDecomposition& d1,
                                     const StructuralDecomposition& d2,
                                     const DegreeOverrides& ov) {
  WedderburnProfile p1 = wedderburn_expand(d1, ov);
  WedderburnProfile p2 = wedderburn_expand(d2, ov);
  if (p1 == p2) return CompareResult{true, 0};
  int top = 0;
  if (!p1.sizes.empty()) top = std::max(top, p1.sizes.rbegin()->first);
  if (!p2.sizes.empty()) top = std::max(top, p2.sizes.rbegin()->first);
  for (int size = top; size >= 1; --size) {
    if (p1.count_at(size) != p2.count_at(size)) return CompareResult{false, size};
  }
  return CompareResult{false, 0};
}

std::map<std::pair<int, int>, Int> merged_class_blocks(const StructuralDecomposition& d) {
  std::map<std::pair<int, int>, Int> out;
  for (const Block& b : d.blocks) {
    int rep = d.lattice.classes[d.lattice.class_id[b.subgroup]].front();
    out[{b.m, rep}] += b.mult;
  }
  return out;
}

bool same_block_structure(const StructuralDecomposition& d1, const StructuralDecomposition& d2) {
  return d1.group.order() == d2.group.order() &&
         merged_class_blocks(d1) == merged_class_blocks(d2);
}

Int decomposition_dimension(const StructuralDecomposition& d) {
  Int total = 0;
  for (const Block& b : d.blocks)
    total += b.mult * b.m * b.m * d.lattice.subgroups[b.subgroup].order;
  return total;
}

std::string decomposition_text(const StructuralDecomposition& d) {
  std::ostringstream out;
  for (const Block& b : d.blocks) {
    const Subgroup& h = d.lattice.subgroups[b.subgroup];
    out << "block m=" << b.m << " H=" << h.order << ":" << h.elems.to_hex()
        << " mult=" << b.mult.str() << "\n";
  }
  return out.str();
}

std::string wedderburn_text(const WedderburnProfile& p) {
  std::ostringstream out;
  for (const auto& [size, mult] : p.sizes) out << "M" << size << " x " << mult.str() << "\n";
  return out.str();
}

}  // namespace pargroup
