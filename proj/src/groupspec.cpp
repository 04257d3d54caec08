#include "pargroup/groupspec.hpp"

#include <fstream>
#include <sstream>

#include "pargroup/error.hpp"

namespace pargroup {

namespace {

std::vector<int> parse_int_list(std::string_view text, char sep) {
  std::vector<int> out;
  std::string tok;
  std::istringstream in{std::string(text)};
  while (std::getline(in, tok, sep)) {
    try {
      std::size_t pos = 0;
      int v = std::stoi(tok, &pos);
      if (pos != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      throw Error(Errc::ParseError, "bad integer '" + tok + "' in group spec");
    }
  }
  if (out.empty()) throw Error(Errc::ParseError, "empty integer list in group spec");
  return out;
}

// Cycles like "(1 2 3)(4 5)"; points are 1-based, commas optional.
Permutation parse_cycles(std::string_view text, int degree) {
  Permutation p(degree);
  for (int i = 0; i < degree; ++i) p[i] = i;
  std::size_t pos = 0;
  bool any = false;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) { ++pos; continue; }
    if (text[pos] != '(') throw Error(Errc::ParseError, "expected '(' in cycle notation");
    std::size_t close = text.find(')', pos);
    if (close == std::string_view::npos) throw Error(Errc::ParseError, "unclosed cycle");
    std::string body{text.substr(pos + 1, close - pos - 1)};
    for (char& c : body)
      if (c == ',') c = ' ';
    std::istringstream in(body);
    std::vector<int> cycle;
    int v;
    while (in >> v) {
      if (v < 1 || v > degree)
        throw Error(Errc::ParseError, "cycle point " + std::to_string(v) + " outside 1.." +
                                          std::to_string(degree));
      cycle.push_back(v - 1);
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      int from = cycle[i];
      int to = cycle[(i + 1) % cycle.size()];
      if (p[from] != from) throw Error(Errc::ParseError, "point repeated across cycles");
      p[from] = to;
    }
    pos = close + 1;
    any = true;
  }
  if (!any && !text.empty()) throw Error(Errc::ParseError, "bad cycle notation");
  return p;
}

// "(<spec>)x(<spec>)" with balanced parentheses.
std::pair<std::string, std::string> split_product(std::string_view text) {
  if (text.empty() || text.front() != '(')
    throw Error(Errc::ParseError, "product spec must start with '('");
  int depth = 0;
  std::size_t i = 0;
  for (; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')' && --depth == 0) break;
  }
  if (depth != 0) throw Error(Errc::ParseError, "unbalanced parentheses in product spec");
  std::string left{text.substr(1, i - 1)};
  std::string_view rest = text.substr(i + 1);
  if (rest.size() < 3 || rest.front() != 'x' || rest[1] != '(' || rest.back() != ')')
    throw Error(Errc::ParseError, "product spec must be (<spec>)x(<spec>)");
  std::string right{rest.substr(2, rest.size() - 3)};
  return {left, right};
}

}  // namespace

FiniteGroup parse_group_spec(std::string_view spec, const Limits& lim) {
  auto starts = [&](std::string_view prefix) {
    return spec.size() > prefix.size() && spec.substr(0, prefix.size()) == prefix;
  };
  if (starts("cyclic:")) {
    auto v = parse_int_list(spec.substr(7), ',');
    if (v.size() != 1) throw Error(Errc::ParseError, "cyclic takes one integer");
    return group_cyclic(v[0], lim);
  }
  if (starts("abelian:")) return group_abelian(parse_int_list(spec.substr(8), ','), lim);
  if (starts("metacyclic:")) {
    auto v = parse_int_list(spec.substr(11), ',');
    if (v.size() != 4) throw Error(Errc::ParseError, "metacyclic takes p,q,r,s");
    return group_metacyclic_pair(v[0], v[1], v[2], v[3], lim);
  }
  if (starts("perm:")) {
    std::string_view rest = spec.substr(5);
    auto colon = rest.find(':');
    if (colon == std::string_view::npos)
      throw Error(Errc::ParseError, "perm spec is perm:<degree>:<gen>;<gen>;...");
    auto deg = parse_int_list(rest.substr(0, colon), ',');
    if (deg.size() != 1 || deg[0] < 1) throw Error(Errc::ParseError, "bad permutation degree");
    std::vector<Permutation> gens;
    std::string gen;
    std::istringstream in{std::string(rest.substr(colon + 1))};
    while (std::getline(in, gen, ';')) gens.push_back(parse_cycles(gen, deg[0]));
    if (gens.empty()) throw Error(Errc::ParseError, "perm spec needs at least one generator");
    return group_from_permutations(deg[0], gens, lim);
  }
  if (starts("product:")) {
    auto [left, right] = split_product(spec.substr(8));
    return group_direct_product(parse_group_spec(left, lim), parse_group_spec(right, lim), lim);
  }
  // anything else: path of an mtab file
  std::ifstream in{std::string(spec)};
  if (!in) throw Error(Errc::ParseError, "cannot open group file '" + std::string(spec) + "'");
  return parse_mtab(in, lim);
}

std::string group_spec_grammar() {
  return "cyclic:<n> | abelian:<d1>,<d2>,... | perm:<degree>:<gen>;<gen>;... "
         "(gen = cycles like '(1 2)(3 4)', 1-based) | metacyclic:<p>,<q>,<r>,<s> | "
         "product:(<spec>)x(<spec>) | <path of an mtab file>";
}

}  // namespace pargroup
