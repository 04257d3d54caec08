#include "pargroup/groupoid.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "pargroup/error.hpp"

namespace pargroup {

namespace {

void check_direct_bound(const FiniteGroup& g, const Limits& lim) {
  if (g.order() > lim.max_direct || g.order() > 63)
    throw Error(Errc::DirectBoundExceeded,
                "group order " + std::to_string(g.order()) +
                    " exceeds the direct enumeration bound " + std::to_string(lim.max_direct));
}

std::uint64_t translate64(const FiniteGroup& g, int t, std::uint64_t mask) {
  std::uint64_t out = 0;
  while (mask) {
    int a = std::countr_zero(mask);
    out |= std::uint64_t{1} << g.mul(t, a);
    mask &= mask - 1;
  }
  return out;
}

}  // namespace

GroupoidArrow make_arrow(const FiniteGroup& g, const Subset& set, int elem) {
  if (set.width() != g.order()) throw Error(Errc::GroupMismatch, "arrow subset width mismatch");
  if (elem < 0 || elem >= g.order()) throw Error(Errc::InvalidInput, "arrow element out of range");
  if (!set.test(g.identity()) || !set.test(g.inv(elem)))
    throw Error(Errc::InvalidInput, "arrow subset must contain e and g^-1");
  return GroupoidArrow{set, elem};
}

GroupoidArrow arrow_source(const FiniteGroup& g, const GroupoidArrow& x) {
  return GroupoidArrow{x.set, g.identity()};
}

GroupoidArrow arrow_range(const FiniteGroup& g, const GroupoidArrow& x) {
  return GroupoidArrow{left_translate(g, x.g, x.set), g.identity()};
}

GroupoidArrow arrow_inverse(const FiniteGroup& g, const GroupoidArrow& x) {
  return GroupoidArrow{left_translate(g, x.g, x.set), g.inv(x.g)};
}

std::optional<GroupoidArrow> arrow_compose(const FiniteGroup& g, const GroupoidArrow& x,
                                           const GroupoidArrow& y) {
  if (x.set.width() != g.order() || y.set.width() != g.order())
    throw Error(Errc::GroupMismatch, "arrows over a different group");
  if (left_translate(g, y.g, y.set) != x.set) return std::nullopt;
  return GroupoidArrow{y.set, g.mul(x.g, y.g)};
}

void scan_components(const FiniteGroup& g, const ComponentFn& fn, const Limits& lim) {
  check_direct_bound(g, lim);
  const int n = g.order();
  const int e = g.identity();
  const std::uint64_t bit_e = std::uint64_t{1} << e;
  const std::uint64_t low = bit_e - 1;
  const std::uint64_t total = std::uint64_t{1} << (n - 1);
  auto expand = [&](std::uint64_t c) { return ((c >> e) << (e + 1)) | (c & low) | bit_e; };
  auto compress = [&](std::uint64_t m) { return ((m >> (e + 1)) << e) | (m & low); };

  std::vector<std::vector<std::uint64_t>> by_level(n + 1);
  for (std::uint64_t c = 0; c < total; ++c) {
    std::uint64_t m = expand(c);
    by_level[std::popcount(m)].push_back(m);
  }

  std::vector<bool> visited(total, false);
  std::vector<std::pair<std::uint64_t, int>> verts;
  for (int k = 1; k <= n; ++k) {
    for (std::uint64_t base : by_level[k]) {
      if (visited[compress(base)]) continue;
      verts.clear();
      std::uint64_t stab = 0;
      std::uint64_t rest = base;
      while (rest) {
        int t = std::countr_zero(rest);
        rest &= rest - 1;
        std::uint64_t v = translate64(g, g.inv(t), base);
        if (v == base) stab |= std::uint64_t{1} << t;
        verts.emplace_back(v, t);
      }
      std::sort(verts.begin(), verts.end());
      verts.erase(std::unique(verts.begin(), verts.end(),
                              [](const auto& a, const auto& b) { return a.first == b.first; }),
                  verts.end());
      verts.front().second = e;  // the base is reached by the identity
      for (const auto& [v, t] : verts) visited[compress(v)] = true;
      fn(k, base, verts, stab);
    }
  }
}

PartialGroupoid build_groupoid(const FiniteGroup& g, const Limits& lim) {
  check_direct_bound(g, lim);
  const int n = g.order();
  PartialGroupoid gpd;
  gpd.group = g;
  gpd.levels.resize(n);
  gpd.arrow_count = 0;

  scan_components(
      g,
      [&](int level, std::uint64_t /*base*/,
          const std::vector<std::pair<std::uint64_t, int>>& verts, std::uint64_t stab) {
        GroupoidComponent comp;
        comp.level = level;
        Subset stab_set = Subset::from_mask(n, stab);
        comp.isotropy = Subgroup{stab_set, stab_set.count()};
        Subset base_set = Subset::from_mask(n, verts.front().first);
        for (const auto& [v, t] : verts) {
          comp.vertices.push_back(Subset::from_mask(n, v));
          comp.transversal.push_back(GroupoidArrow{base_set, g.inv(t)});
        }
        gpd.arrow_count += Int(comp.m()) * comp.m() * comp.isotropy.order;
        gpd.components.push_back(std::move(comp));
      },
      lim);

  for (const auto& comp : gpd.components)
    for (const auto& v : comp.vertices) gpd.levels[comp.level - 1].push_back(v);
  for (auto& level : gpd.levels) std::sort(level.begin(), level.end(), Subset::bits_less);
  return gpd;
}

Rat AlgebraElement::coeff(const GroupoidArrow& a) const {
  auto it = terms_.find(a);
  return it == terms_.end() ? Rat(0) : it->second;
}

void AlgebraElement::add_term(const GroupoidArrow& a, const Rat& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(a, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

AlgebraElement algebra_unit(const FiniteGroup& g, const Limits& lim) {
  check_direct_bound(g, lim);
  const int n = g.order();
  const int e = g.identity();
  AlgebraElement out;
  std::uint64_t free = (n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1) &
                       ~(std::uint64_t{1} << e);
  std::uint64_t sub = free;
  while (true) {
    out.add_term(GroupoidArrow{Subset::from_mask(n, sub | (std::uint64_t{1} << e)), e}, Rat(1));
    if (sub == 0) break;
    sub = (sub - 1) & free;
  }
  return out;
}

AlgebraElement algebra_add(const AlgebraElement& x, const AlgebraElement& y) {
  AlgebraElement out = x;
  for (const auto& [a, c] : y.terms()) out.add_term(a, c);
  return out;
}

AlgebraElement algebra_scale(const Rat& c, const AlgebraElement& x) {
  AlgebraElement out;
  if (c.is_zero()) return out;
  for (const auto& [a, v] : x.terms()) out.add_term(a, c * v);
  return out;
}

AlgebraElement algebra_mul(const FiniteGroup& g, const AlgebraElement& x,
                           const AlgebraElement& y) {
  AlgebraElement out;
  for (const auto& [ax, cx] : x.terms()) {
    for (const auto& [ay, cy] : y.terms()) {
      if (auto comp = arrow_compose(g, ax, ay)) out.add_term(*comp, cx * cy);
    }
  }
  return out;
}

AlgebraElement lambda_par(const FiniteGroup& g, int elem, const Limits& lim) {
  check_direct_bound(g, lim);
  if (elem < 0 || elem >= g.order()) throw Error(Errc::InvalidInput, "element out of range");
  const int n = g.order();
  std::uint64_t fixed =
      (std::uint64_t{1} << g.identity()) | (std::uint64_t{1} << g.inv(elem));
  std::uint64_t free = ((n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1)) & ~fixed;
  AlgebraElement out;
  std::uint64_t sub = free;
  while (true) {
    out.add_term(GroupoidArrow{Subset::from_mask(n, sub | fixed), elem}, Rat(1));
    if (sub == 0) break;
    sub = (sub - 1) & free;
  }
  return out;
}

std::vector<GroupoidArrow> canonical_arrows(const FiniteGroup& g, const Limits& lim) {
  check_direct_bound(g, lim);
  const int n = g.order();
  const int e = g.identity();
  const std::uint64_t bit_e = std::uint64_t{1} << e;
  const std::uint64_t low = bit_e - 1;
  const std::uint64_t total = std::uint64_t{1} << (n - 1);
  auto expand = [&](std::uint64_t c) { return ((c >> e) << (e + 1)) | (c & low) | bit_e; };

  std::vector<std::vector<std::uint64_t>> by_level(n + 1);
  for (std::uint64_t c = 0; c < total; ++c) {
    std::uint64_t m = expand(c);
    by_level[std::popcount(m)].push_back(m);
  }
  std::vector<GroupoidArrow> arrows;
  for (int k = 1; k <= n; ++k) {
    for (std::uint64_t m : by_level[k]) {
      Subset set = Subset::from_mask(n, m);
      for (int elem = 0; elem < n; ++elem)
        if (m >> g.inv(elem) & 1) arrows.push_back(GroupoidArrow{set, elem});
    }
  }
  return arrows;
}

RatMatrix left_regular_matrix(const FiniteGroup& g, const AlgebraElement& x, const Limits& lim) {
  const int n = g.order();
  Int algebra_dim = n == 1 ? Int(1) : (Int(1) << (n - 2)) * (n + 1);
  if (algebra_dim > lim.max_algebra_dim)
    throw Error(Errc::DimensionBoundExceeded,
                "algebra dimension " + algebra_dim.str() + " exceeds the matrix bound");
  std::vector<GroupoidArrow> basis = canonical_arrows(g, lim);
  const int dim = static_cast<int>(basis.size());
  std::map<GroupoidArrow, int, ArrowLess> index;
  for (int i = 0; i < dim; ++i) index.emplace(basis[i], i);
  RatMatrix m = RatMatrix::Zero(dim, dim);
  for (int j = 0; j < dim; ++j) {
    for (const auto& [a, c] : x.terms()) {
      if (auto comp = arrow_compose(g, a, basis[j])) m(index.at(*comp), j) += c;
    }
  }
  return m;
}

std::string write_algebra_element(const AlgebraElement& x) {
  std::ostringstream out;
  for (const auto& [a, c] : x.terms())
    out << format_rat(c) << " " << a.set.to_hex() << " " << a.g << "\n";
  return out.str();
}

AlgebraElement parse_algebra_element(const FiniteGroup& g, const std::string& text) {
  AlgebraElement out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    std::string coeff, hex;
    int elem;
    if (!(ls >> coeff >> hex >> elem))
      throw Error(Errc::ParseError, "bad algebra term: '" + line + "'");
    std::string rest;
    if (ls >> rest) throw Error(Errc::ParseError, "trailing garbage: '" + line + "'");
    out.add_term(make_arrow(g, Subset::from_hex(g.order(), hex), elem), parse_rat(coeff));
  }
  return out;
}

}  // namespace pargroup
