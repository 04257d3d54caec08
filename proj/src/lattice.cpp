#include "pargroup/lattice.hpp"

#include <algorithm>

#include "pargroup/error.hpp"

namespace pargroup {

namespace {

Subset conjugate_subgroup(const FiniteGroup& g, const Subset& h, int t) {
  Subset out(h.width());
  int ti = g.inv(t);
  h.for_each([&](int x) { out.set(g.mul(g.mul(t, x), ti)); });
  return out;
}

Subset normalizer_mask(const FiniteGroup& g, const Subset& h) {
  Subset out(g.order());
  for (int t = 0; t < g.order(); ++t) {
    if (conjugate_subgroup(g, h, t) == h) out.set(t);
  }
  return out;
}

}  // namespace

Subset generated_subgroup(const FiniteGroup& g, const std::vector<int>& gens) {
  Subset elems(g.order());
  elems.set(g.identity());
  std::vector<int> stack{g.identity()};
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int gen : gens) {
      int y = g.mul(x, gen);
      if (!elems.test(y)) {
        elems.set(y);
        stack.push_back(y);
      }
    }
  }
  return elems;
}

int SubgroupLattice::index_of(const Subset& elems) const {
  auto it = index_.find(elems);
  return it == index_.end() ? -1 : it->second;
}

void SubgroupLattice::build_index() {
  index_.clear();
  for (int i = 0; i < size(); ++i) index_.emplace(subgroups[i].elems, i);
}

SubgroupLattice subgroup_lattice(const FiniteGroup& g, const Limits& lim) {
  const int n = g.order();
  std::vector<Subset> found;
  std::vector<std::vector<int>> gens;
  std::unordered_map<Subset, int, SubsetHash> seen;
  auto add = [&](Subset s, std::vector<int> gen_set) {
    if (seen.emplace(s, found.size()).second) {
      found.push_back(std::move(s));
      gens.push_back(std::move(gen_set));
      if (found.size() > lim.max_lattice)
        throw Error(Errc::LatticeTooLarge, "subgroup count exceeds limit");
    }
  };

  for (int x = 0; x < n; ++x) add(generated_subgroup(g, {x}), {x});

  // Fixed point under H, g -> <H u {g}>. Elements of an already-processed
  // right coset H*g generate the same extension as g and are skipped.
  for (std::size_t i = 0; i < found.size(); ++i) {
    Subset covered = found[i];
    std::vector<int> base = gens[i];
    for (int x = 0; x < n; ++x) {
      if (covered.test(x)) continue;
      std::vector<int> ext = base;
      ext.push_back(x);
      add(generated_subgroup(g, ext), std::move(ext));
      found[i].for_each([&](int h) { covered.set(g.mul(h, x)); });
    }
  }

  SubgroupLattice lat;
  lat.group_order = n;
  lat.subgroups.reserve(found.size());
  for (auto& s : found) lat.subgroups.push_back(Subgroup{s, s.count()});
  std::sort(lat.subgroups.begin(), lat.subgroups.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order != b.order) return a.order < b.order;
    return Subset::bits_less(a.elems, b.elems);
  });
  lat.build_index();

  const int count = lat.size();
  lat.supergroups.assign(count, {});
  for (int i = 0; i < count; ++i)
    for (int j = i + 1; j < count; ++j)
      if (lat.subgroups[i].order < lat.subgroups[j].order &&
          lat.subgroups[j].elems.contains(lat.subgroups[i].elems))
        lat.supergroups[i].push_back(j);

  lat.normalizer.assign(count, lat.full_index());
  lat.commutator.assign(count, lat.trivial_index());
  lat.class_id.assign(count, -1);
  if (g.is_abelian()) {
    lat.classes.resize(count);
    for (int i = 0; i < count; ++i) {
      lat.class_id[i] = i;
      lat.classes[i] = {i};
    }
    return lat;
  }

  auto must_find = [&](const Subset& s) {
    int j = lat.index_of(s);
    if (j < 0) throw Error(Errc::InvalidInput, "lattice closure is incomplete");
    return j;
  };
  for (int i = 0; i < count; ++i) {
    lat.normalizer[i] = must_find(normalizer_mask(g, lat.subgroups[i].elems));
    lat.commutator[i] = must_find(commutator_subgroup(g, lat.subgroups[i].elems).elems);
  }
  for (int i = 0; i < count; ++i) {
    if (lat.class_id[i] >= 0) continue;
    std::vector<int> orbit;
    for (int t = 0; t < n; ++t) {
      int j = must_find(conjugate_subgroup(g, lat.subgroups[i].elems, t));
      if (lat.class_id[j] < 0) {
        lat.class_id[j] = static_cast<int>(lat.classes.size());
        orbit.push_back(j);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    lat.classes.push_back(std::move(orbit));
  }
  return lat;
}

Subgroup commutator_subgroup(const FiniteGroup& g, const Subset& h) {
  Subset comm(g.order());
  h.for_each([&](int a) {
    h.for_each([&](int b) {
      comm.set(g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b))));
    });
  });
  Subset elems = generated_subgroup(g, comm.elements());
  return Subgroup{elems, elems.count()};
}

Subgroup commutator_subgroup(const FiniteGroup& g) {
  return commutator_subgroup(g, Subset::full(g.order()));
}

Subgroup normalizer(const FiniteGroup& g, const Subset& h) {
  if (!subset_is_subgroup(g, h)) throw Error(Errc::InvalidInput, "normalizer of a non-subgroup");
  Subset mask = normalizer_mask(g, h);
  return Subgroup{mask, mask.count()};
}

std::vector<Subset> right_cosets(const FiniteGroup& g, const Subset& h) {
  if (!subset_is_subgroup(g, h)) throw Error(Errc::InvalidInput, "cosets of a non-subgroup");
  std::vector<Subset> out;
  Subset visited(g.order());
  for (int x = 0; x < g.order(); ++x) {
    if (visited.test(x)) continue;
    Subset coset(g.order());
    h.for_each([&](int a) { coset.set(g.mul(a, x)); });
    visited |= coset;
    out.push_back(std::move(coset));
  }
  return out;
}

Subgroup stabilizer_of_subset(const FiniteGroup& g, const Subset& a) {
  if (a.width() != g.order() || !a.test(g.identity()))
    throw Error(Errc::SubsetMissingIdentity, "subset must contain the identity");
  Subset stab(g.order());
  for (int t = 0; t < g.order(); ++t) {
    if (left_translate(g, t, a) == a) stab.set(t);
  }
  return Subgroup{stab, stab.count()};
}

}  // namespace pargroup
