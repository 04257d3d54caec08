#include "pargroup/survey.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>
#include <unordered_map>

#include "pargroup/error.hpp"

namespace pargroup {

int AbelianType::order() const {
  int n = 1;
  for (int d : factors) n *= d;
  return n;
}

std::string AbelianType::to_string() const {
  if (factors.empty()) return "Z1";
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out += " x ";
    out += "Z" + std::to_string(factors[i]);
  }
  return out;
}

namespace {

std::vector<std::pair<int, int>> factorize(int n) {
  std::vector<std::pair<int, int>> out;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) { n /= p; ++e; }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

// Partitions of n with non-increasing parts.
std::vector<std::vector<int>> partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest, int max_part) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int part = std::min(rest, max_part); part >= 1; --part) {
      cur.push_back(part);
      self(self, rest - part, part);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

int int_pow(int base, int exp) {
  int v = 1;
  while (exp--) v *= base;
  return v;
}

}  // namespace

std::vector<AbelianType> enumerate_abelian(int n, const Limits& lim) {
  if (n < 1 || n > lim.max_abelian_order)
    throw Error(Errc::BoundExceeded, "order outside the abelian enumeration bound");
  if (n == 1) return {AbelianType{}};

  auto primes = factorize(n);
  std::vector<std::vector<std::vector<int>>> per_prime;
  per_prime.reserve(primes.size());
  for (auto [p, e] : primes) per_prime.push_back(partitions(e));

  std::vector<AbelianType> out;
  std::vector<std::size_t> pick(primes.size(), 0);
  while (true) {
    // invariant factors: align the per-prime partitions from the largest part
    std::size_t length = 0;
    for (std::size_t i = 0; i < primes.size(); ++i)
      length = std::max(length, per_prime[i][pick[i]].size());
    std::vector<int> chain(length, 1);
    for (std::size_t i = 0; i < primes.size(); ++i) {
      const auto& parts = per_prime[i][pick[i]];
      for (std::size_t j = 0; j < parts.size(); ++j)
        chain[j] *= int_pow(primes[i].first, parts[j]);
    }
    std::reverse(chain.begin(), chain.end());  // ascending divisibility chain
    out.push_back(AbelianType{std::move(chain)});

    std::size_t i = 0;
    for (; i < pick.size(); ++i) {
      if (++pick[i] < per_prime[i].size()) break;
      pick[i] = 0;
    }
    if (i == pick.size()) break;
  }
  std::sort(out.begin(), out.end(), [](const AbelianType& a, const AbelianType& b) {
    if (a.factors.size() != b.factors.size()) return a.factors.size() < b.factors.size();
    return a.factors < b.factors;
  });
  return out;
}

SurveyReport theorem_check(int n, const Limits& lim) {
  if (n < 1 || n > lim.max_survey_order)
    throw Error(Errc::BoundExceeded,
                "order outside the survey bound (raise max_survey_order; the cost is "
                "dominated by the subgroup lattices of elementary abelian 2-groups)");
  SurveyReport report;
  report.order = n;
  Limits survey_lim = lim;
  survey_lim.max_abelian_order = std::max(lim.max_abelian_order, n);
  for (const AbelianType& type : enumerate_abelian(n, survey_lim)) {
    FiniteGroup g = type.factors.empty() ? group_cyclic(1, lim) : group_abelian(type.factors, lim);
    StructuralDecomposition d = decompose_formula(g, lim);
    report.entries.push_back(SurveyEntry{type, wedderburn_expand(d)});
  }
  report.all_distinct = true;
  for (std::size_t i = 0; i < report.entries.size(); ++i)
    for (std::size_t j = i + 1; j < report.entries.size(); ++j)
      if (report.entries[i].profile == report.entries[j].profile) {
        report.all_distinct = false;
        report.collisions.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
  return report;
}

namespace {

std::string profile_key(const DegreeProfile& p) {
  std::ostringstream out;
  for (const auto& [d, mult] : p.degrees) out << d << ":" << mult.str() << ",";
  return out.str();
}

// Block multiset keyed by (m, |H|, degree profile of H).
std::map<std::tuple<int, int, std::string>, Int> block_census(const StructuralDecomposition& d) {
  std::map<std::tuple<int, int, std::string>, Int> out;
  std::unordered_map<int, std::string> keys;  // per lattice class
  for (const Block& b : d.blocks) {
    int cls = d.lattice.class_id[b.subgroup];
    auto it = keys.find(cls);
    if (it == keys.end()) {
      auto view = subgroup_as_group(d.group, d.lattice.subgroups[b.subgroup].elems);
      it = keys.emplace(cls, profile_key(degree_profile(view.group))).first;
    }
    out[{b.m, d.lattice.subgroups[b.subgroup].order, it->second}] += b.mult;
  }
  return out;
}

}  // namespace

CounterexampleReport counterexample_run(const Limits& lim) {
  FiniteGroup g1 = group_metacyclic_pair(11, 5, 3, 9, lim);
  FiniteGroup g2 = group_metacyclic_pair(11, 5, 3, 4, lim);
  SubgroupLattice lat1 = subgroup_lattice(g1, lim);
  SubgroupLattice lat2 = subgroup_lattice(g2, lim);

  CounterexampleReport report;
  for (const Subgroup& h : lat1.subgroups) report.census1[h.order] += 1;
  for (const Subgroup& h : lat2.subgroups) report.census2[h.order] += 1;
  report.subgroup_count1 = lat1.size();
  report.subgroup_count2 = lat2.size();
  report.group_algebra1 = degree_profile(g1);
  report.group_algebra2 = degree_profile(g2);

  StructuralDecomposition d1 = decompose_formula(g1, lat1, lim);
  StructuralDecomposition d2 = decompose_formula(g2, lat2, lim);
  report.profile1 = wedderburn_expand(d1);
  report.profile2 = wedderburn_expand(d2);
  report.censuses_equal = report.census1 == report.census2;
  report.group_algebras_equal = report.group_algebra1 == report.group_algebra2;
  report.profiles_equal = report.profile1 == report.profile2;
  report.blocks_equal = block_census(d1) == block_census(d2);
  return report;
}

}  // namespace pargroup
