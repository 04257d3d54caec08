#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pargroup/group.hpp"
#include "pargroup/lattice.hpp"
#include "pargroup/linalg.hpp"
#include "pargroup/rational.hpp"

namespace pargroup {

// Arrow (A, g): A contains the identity and g^-1. Source (A, e), range
// (gA, e); the composite (hB, g) * (B, h) is (B, gh).
struct GroupoidArrow {
  Subset set;
  int g = 0;

  friend bool operator==(const GroupoidArrow& a, const GroupoidArrow& b) {
    return a.g == b.g && a.set == b.set;
  }
};

// Canonical arrow order: (|A|, A bits, g). Fixes matrix bases and all
// serialized output.
struct ArrowLess {
  bool operator()(const GroupoidArrow& a, const GroupoidArrow& b) const {
    int ca = a.set.count(), cb = b.set.count();
    if (ca != cb) return ca < cb;
    if (a.set != b.set) return Subset::bits_less(a.set, b.set);
    return a.g < b.g;
  }
};

GroupoidArrow make_arrow(const FiniteGroup& g, const Subset& set, int elem);
GroupoidArrow arrow_source(const FiniteGroup& g, const GroupoidArrow& x);
GroupoidArrow arrow_range(const FiniteGroup& g, const GroupoidArrow& x);
GroupoidArrow arrow_inverse(const FiniteGroup& g, const GroupoidArrow& x);
std::optional<GroupoidArrow> arrow_compose(const FiniteGroup& g, const GroupoidArrow& x,
                                           const GroupoidArrow& y);

// One connected component of the unit graph. vertices are sorted by bits;
// vertices[0] is the base; transversal[i] is the arrow base -> vertices[i]
// (transversal[0] is the unit at the base). m = vertices.size() and
// m * |isotropy| = level.
struct GroupoidComponent {
  int level = 0;
  std::vector<Subset> vertices;
  Subgroup isotropy;
  std::vector<GroupoidArrow> transversal;
  int m() const { return static_cast<int>(vertices.size()); }
};

struct PartialGroupoid {
  FiniteGroup group;
  std::vector<std::vector<Subset>> levels;  // levels[k-1]: vertices of size k
  std::vector<GroupoidComponent> components;
  Int arrow_count;
};

PartialGroupoid build_groupoid(const FiniteGroup& g, const Limits& lim = Limits::defaults());

// Streams every connected component in canonical order (by level, then base
// vertex bits) without materializing the groupoid: fn(level, base, vertices
// paired with a translating element t (t^-1 * base = vertex), stabilizer).
// Masks are single-word; requires |G| within the direct bound (<= 64).
using ComponentFn = std::function<void(int level, std::uint64_t base,
                                       const std::vector<std::pair<std::uint64_t, int>>& verts,
                                       std::uint64_t stab)>;
void scan_components(const FiniteGroup& g, const ComponentFn& fn,
                     const Limits& lim = Limits::defaults());

// Element of the groupoid algebra: finitely many arrows with nonzero exact
// rational coefficients.
class AlgebraElement {
 public:
  using Terms = std::map<GroupoidArrow, Rat, ArrowLess>;

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rat coeff(const GroupoidArrow& a) const;
  void add_term(const GroupoidArrow& a, const Rat& c);  // drops zero results

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.terms_ == b.terms_;
  }

 private:
  Terms terms_;
};

AlgebraElement algebra_unit(const FiniteGroup& g, const Limits& lim = Limits::defaults());
AlgebraElement algebra_add(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement algebra_scale(const Rat& c, const AlgebraElement& x);
AlgebraElement algebra_mul(const FiniteGroup& g, const AlgebraElement& x,
                           const AlgebraElement& y);

// lambda_par(g) = sum of (A, g) over all A containing e and g^-1.
AlgebraElement lambda_par(const FiniteGroup& g, int elem,
                          const Limits& lim = Limits::defaults());

// All arrows in canonical order; the basis of the groupoid algebra.
std::vector<GroupoidArrow> canonical_arrows(const FiniteGroup& g,
                                            const Limits& lim = Limits::defaults());

// Matrix of left multiplication by x in the canonical arrow basis.
RatMatrix left_regular_matrix(const FiniteGroup& g, const AlgebraElement& x,
                              const Limits& lim = Limits::defaults());

// One term per line, "<num>/<den> <A-bits-hex> <g>", canonical order.
std::string write_algebra_element(const AlgebraElement& x);
AlgebraElement parse_algebra_element(const FiniteGroup& g, const std::string& text);

}  // namespace pargroup
