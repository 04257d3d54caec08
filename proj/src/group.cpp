#include "pargroup/group.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <sstream>

#include "pargroup/error.hpp"

namespace pargroup {

namespace {

std::string cell(int s, int t) { return "(" + std::to_string(s) + "," + std::to_string(t) + ")"; }

}  // namespace

int FiniteGroup::element_order(int g) const {
  int ord = 1;
  int x = g;
  while (x != e_) {
    x = mul(x, g);
    ++ord;
  }
  return ord;
}

std::string FiniteGroup::label(int i) const {
  if (i >= 0 && i < static_cast<int>(labels_.size()) && !labels_[i].empty()) return labels_[i];
  return std::to_string(i);
}

void FiniteGroup::set_labels(std::vector<std::string> labels) { labels_ = std::move(labels); }

FiniteGroup group_from_table(int n, const std::vector<std::vector<int>>& rows,
                             const Limits& lim) {
  if (n < 1 || n > lim.max_group_order)
    throw Error(Errc::BoundExceeded,
                "group order " + std::to_string(n) + " outside [1, " +
                    std::to_string(lim.max_group_order) + "]");
  if (static_cast<int>(rows.size()) != n)
    throw Error(Errc::ParseError, "expected " + std::to_string(n) + " rows");

  FiniteGroup g;
  g.n_ = n;
  g.mul_.resize(static_cast<std::size_t>(n) * n);
  for (int s = 0; s < n; ++s) {
    if (static_cast<int>(rows[s].size()) != n)
      throw Error(Errc::ParseError, "row " + std::to_string(s) + " has wrong length");
    for (int t = 0; t < n; ++t) {
      int v = rows[s][t];
      if (v < 0 || v >= n)
        throw Error(Errc::NotLatinSquare, "entry out of range at " + cell(s, t));
      g.mul_[static_cast<std::size_t>(s) * n + t] = static_cast<std::uint16_t>(v);
    }
  }

  // Latin square: rows and columns are permutations.
  std::vector<char> seen(n);
  for (int s = 0; s < n; ++s) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int t = 0; t < n; ++t) {
      int v = g.mul(s, t);
      if (seen[v]) throw Error(Errc::NotLatinSquare, "row repeat at " + cell(s, t));
      seen[v] = 1;
    }
  }
  for (int t = 0; t < n; ++t) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int s = 0; s < n; ++s) {
      int v = g.mul(s, t);
      if (seen[v]) throw Error(Errc::NotLatinSquare, "column repeat at " + cell(s, t));
      seen[v] = 1;
    }
  }

  int e = -1;
  for (int c = 0; c < n && e < 0; ++c) {
    bool ok = true;
    for (int t = 0; t < n && ok; ++t) ok = g.mul(c, t) == t && g.mul(t, c) == t;
    if (ok) e = c;
  }
  if (e < 0) throw Error(Errc::NoIdentity, "no two-sided identity");
  g.e_ = e;

  g.inv_.resize(n);
  for (int t = 0; t < n; ++t) {
    int r = -1;
    for (int u = 0; u < n; ++u) {
      if (g.mul(t, u) == e) { r = u; break; }
    }
    if (r < 0 || g.mul(r, t) != e)
      throw Error(Errc::NoInverse, "no two-sided inverse for element " + std::to_string(t));
    g.inv_[t] = static_cast<std::uint16_t>(r);
  }

  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      int st = g.mul(s, t);
      for (int u = 0; u < n; ++u)
        if (g.mul(st, u) != g.mul(s, g.mul(t, u)))
          throw Error(Errc::NotAssociative, "associativity fails at (" + std::to_string(s) + "," +
                                                std::to_string(t) + "," + std::to_string(u) + ")");
    }

  g.abelian_ = true;
  for (int s = 0; s < n && g.abelian_; ++s)
    for (int t = s + 1; t < n; ++t)
      if (g.mul(s, t) != g.mul(t, s)) { g.abelian_ = false; break; }

  return g;
}

FiniteGroup group_cyclic(int n, const Limits& lim) {
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rows[i][j] = (i + j) % n;
  return group_from_table(n, rows, lim);
}

FiniteGroup group_abelian(const std::vector<int>& factors, const Limits& lim) {
  long long n = 1;
  for (int d : factors) {
    if (d < 2) throw Error(Errc::InvalidInput, "abelian factor " + std::to_string(d) + " < 2");
    n *= d;
    if (n > lim.max_group_order)
      throw Error(Errc::BoundExceeded, "abelian group order exceeds limit");
  }
  int order = static_cast<int>(n);
  int k = static_cast<int>(factors.size());
  // mixed radix, leftmost factor most significant
  std::vector<int> scale(k, 1);
  for (int i = k - 2; i >= 0; --i) scale[i] = scale[i + 1] * factors[i + 1];
  auto add = [&](int x, int y) {
    int out = 0;
    for (int i = 0; i < k; ++i) {
      int xi = (x / scale[i]) % factors[i];
      int yi = (y / scale[i]) % factors[i];
      out += ((xi + yi) % factors[i]) * scale[i];
    }
    return out;
  };
  std::vector<std::vector<int>> rows(order, std::vector<int>(order));
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j) rows[i][j] = add(i, j);
  return group_from_table(order, rows, lim);
}

FiniteGroup group_direct_product(const FiniteGroup& g1, const FiniteGroup& g2,
                                 const Limits& lim) {
  long long n = static_cast<long long>(g1.order()) * g2.order();
  if (n > lim.max_group_order) throw Error(Errc::BoundExceeded, "product order exceeds limit");
  int n1 = g1.order(), n2 = g2.order(), order = static_cast<int>(n);
  std::vector<std::vector<int>> rows(order, std::vector<int>(order));
  for (int a = 0; a < n1; ++a)
    for (int b = 0; b < n2; ++b)
      for (int c = 0; c < n1; ++c)
        for (int d = 0; d < n2; ++d)
          rows[a * n2 + b][c * n2 + d] = g1.mul(a, c) * n2 + g2.mul(b, d);
  return group_from_table(order, rows, lim);
}

namespace {

Permutation compose(const Permutation& p, const Permutation& q) {
  Permutation r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
  return r;
}

std::string cycle_string(const Permutation& p) {
  std::string out;
  std::vector<char> done(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (done[i] || p[i] == static_cast<int>(i)) continue;
    out += "(";
    std::size_t j = i;
    bool head = true;
    while (!done[j]) {
      done[j] = 1;
      out += (head ? "" : " ") + std::to_string(j + 1);
      head = false;
      j = static_cast<std::size_t>(p[j]);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

}  // namespace

FiniteGroup group_from_permutations(int degree, const std::vector<Permutation>& gens,
                                    const Limits& lim) {
  if (degree < 1) throw Error(Errc::InvalidInput, "degree must be positive");
  for (const auto& p : gens) {
    if (static_cast<int>(p.size()) != degree)
      throw Error(Errc::InvalidInput, "generator degree mismatch");
    std::vector<char> seen(degree);
    for (int v : p) {
      if (v < 0 || v >= degree || seen[v])
        throw Error(Errc::InvalidInput, "generator is not a permutation");
      seen[v] = 1;
    }
  }

  Permutation id(degree);
  for (int i = 0; i < degree; ++i) id[i] = i;
  std::vector<Permutation> elems{id};
  std::map<Permutation, int> index{{id, 0}};
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& gen : gens) {
      Permutation next = compose(elems[head], gen);
      if (index.emplace(next, elems.size()).second) {
        elems.push_back(std::move(next));
        if (static_cast<int>(elems.size()) > lim.max_group_order)
          throw Error(Errc::ClosureTooLarge, "permutation closure exceeds group order limit");
      }
    }
  }

  int n = static_cast<int>(elems.size());
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rows[i][j] = index.at(compose(elems[i], elems[j]));
  FiniteGroup g = group_from_table(n, rows, lim);
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = cycle_string(elems[i]);
  g.set_labels(std::move(labels));
  return g;
}

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

int pow_mod(int base, int exp, int mod) {
  long long r = 1, b = base % mod;
  while (exp) {
    if (exp & 1) r = r * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return static_cast<int>(r);
}

}  // namespace

FiniteGroup group_metacyclic_pair(int p, int q, int r, int s, const Limits& lim) {
  if (!is_prime(p) || !is_prime(q))
    throw Error(Errc::InvalidInput, "p and q must be prime");
  if (pow_mod(r, q, p) != 1 || pow_mod(s, q, p) != 1)
    throw Error(Errc::BadAction, "r^q and s^q must be 1 mod p");
  long long order = static_cast<long long>(p) * p * q;
  if (order > lim.max_group_order)
    throw Error(Errc::BoundExceeded, "metacyclic order exceeds limit");

  int n = static_cast<int>(order);
  auto idx = [&](int i, int j, int k) { return (i * p + j) * q + k; };
  // a^i b^j c^k with c^k a = a^{r^-k} c^k; inverse powers via r^q = 1 mod p.
  std::vector<int> rinv(q), sinv(q);
  for (int k = 0; k < q; ++k) {
    rinv[k] = pow_mod(r, (q - k) % q, p);
    sinv[k] = pow_mod(s, (q - k) % q, p);
  }
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j)
      for (int k = 0; k < q; ++k)
        for (int i2 = 0; i2 < p; ++i2)
          for (int j2 = 0; j2 < p; ++j2)
            for (int k2 = 0; k2 < q; ++k2)
              rows[idx(i, j, k)][idx(i2, j2, k2)] =
                  idx((i + i2 * rinv[k]) % p, (j + j2 * sinv[k]) % p, (k + k2) % q);
  FiniteGroup g = group_from_table(n, rows, lim);

  int a = idx(1, 0, 0), b = idx(0, 1, 0), c = idx(0, 0, 1);
  auto power = [&](int x, int e) {
    int y = g.identity();
    for (int t = 0; t < e; ++t) y = g.mul(y, x);
    return y;
  };
  bool ok = power(a, p) == g.identity() && power(b, p) == g.identity() &&
            power(c, q) == g.identity() && g.mul(a, b) == g.mul(b, a) &&
            g.mul(g.mul(g.inv(c), a), c) == power(a, r) &&
            g.mul(g.mul(g.inv(c), b), c) == power(b, s);
  if (!ok) throw Error(Errc::BadAction, "presentation relations failed on the built table");

  std::vector<std::string> labels(n);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j)
      for (int k = 0; k < q; ++k) {
        std::string l;
        if (i) l += "a" + std::to_string(i);
        if (j) l += "b" + std::to_string(j);
        if (k) l += "c" + std::to_string(k);
        labels[idx(i, j, k)] = l.empty() ? "e" : l;
      }
  g.set_labels(std::move(labels));
  return g;
}

std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g) {
  int n = g.order();
  std::vector<std::vector<int>> classes;
  std::vector<char> visited(n);
  for (int x = 0; x < n; ++x) {
    if (visited[x]) continue;
    std::vector<int> orbit;
    for (int t = 0; t < n; ++t) {
      int y = g.mul(g.mul(t, x), g.inv(t));
      if (!visited[y]) {
        visited[y] = 1;
        orbit.push_back(y);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    classes.push_back(std::move(orbit));
  }
  return classes;
}

Subset left_translate(const FiniteGroup& g, int t, const Subset& set) {
  Subset out(set.width());
  set.for_each([&](int a) { out.set(g.mul(t, a)); });
  return out;
}

bool subset_is_subgroup(const FiniteGroup& g, const Subset& set) {
  if (set.width() != g.order() || !set.test(g.identity())) return false;
  // A nonempty subset of a finite group closed under the product is a
  // subgroup.
  auto elems = set.elements();
  for (int a : elems)
    for (int b : elems)
      if (!set.test(g.mul(a, b))) return false;
  return true;
}

SubgroupView subgroup_as_group(const FiniteGroup& g, const Subset& set, const Limits& lim) {
  if (!subset_is_subgroup(g, set))
    throw Error(Errc::InvalidInput, "subset is not a subgroup");
  std::vector<int> elems = set.elements();
  int h = static_cast<int>(elems.size());
  if (h == g.order()) {
    std::vector<int> ident(h);
    for (int i = 0; i < h; ++i) ident[i] = i;
    return SubgroupView{g, std::move(ident)};
  }
  std::vector<int> local(g.order(), -1);
  for (int i = 0; i < h; ++i) local[elems[i]] = i;
  std::vector<std::vector<int>> rows(h, std::vector<int>(h));
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < h; ++j) rows[i][j] = local[g.mul(elems[i], elems[j])];
  return SubgroupView{group_from_table(h, rows, lim), std::move(elems)};
}

FiniteGroup parse_mtab(std::istream& in, const Limits& lim) {
  std::string word;
  int version = 0, n = 0;
  if (!(in >> word) || word != "mtab" || !(in >> version) || version != 1 || !(in >> n) || n < 1)
    throw Error(Errc::ParseError, "expected header 'mtab 1 <n>'");
  if (n > lim.max_group_order) throw Error(Errc::BoundExceeded, "mtab order exceeds limit");
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!(in >> rows[i][j]))
        throw Error(Errc::ParseError, "truncated multiplication table");
  // Only "# label <i> <text>" trailer lines may follow.
  std::vector<std::string> labels(n);
  bool any_label = false;
  std::string line;
  std::getline(in, line);  // rest of the last table line
  if (line.find_first_not_of(" \t\r") != std::string::npos)
    throw Error(Errc::ParseError, "trailing garbage after table row");
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    std::string hash, key;
    int i = -1;
    ls >> hash >> key >> i;
    std::string text;
    std::getline(ls, text);
    if (hash != "#" || key != "label" || i < 0 || i >= n)
      throw Error(Errc::ParseError, "trailing garbage: '" + line + "'");
    if (!text.empty() && text.front() == ' ') text.erase(text.begin());
    labels[i] = text;
    any_label = true;
  }
  FiniteGroup g = group_from_table(n, rows, lim);
  if (any_label) g.set_labels(std::move(labels));
  return g;
}

FiniteGroup parse_mtab(const std::string& text, const Limits& lim) {
  std::istringstream in(text);
  return parse_mtab(in, lim);
}

std::string write_mtab(const FiniteGroup& g) {
  std::ostringstream out;
  int n = g.order();
  out << "mtab 1 " << n << "\n";
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out << (j ? " " : "") << g.mul(i, j);
    out << "\n";
  }
  if (g.has_labels())
    for (int i = 0; i < n; ++i) out << "# label " << i << " " << g.label(i) << "\n";
  return out.str();
}

}  // namespace pargroup
